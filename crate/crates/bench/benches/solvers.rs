use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepsign_bench::planted_instance;
use sepsign_core::classify::classify;
use sepsign_core::enumerate::path_targets;
use sepsign_core::hardness::{build_reduction, QuadCsp};
use sepsign_core::ordering::{ordering_for_cycle_target, CycleTemplate};
use sepsign_core::solver::{solve_h1, solve_oracle, solve_ordered};
use sepsign_core::targets::{h1, h_ell};
use sepsign_core::witness::find_chain;

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for ell in [5, 11, 21] {
        let h = h_ell(ell).unwrap();
        group.bench_with_input(BenchmarkId::new("h_ell", ell), &h, |b, h| b.iter(|| classify(black_box(h)).unwrap()));
    }
    let paths: Vec<_> = path_targets(9).map(|p| p.to_graph()).collect();
    group.bench_function("all P9 targets", |b| {
        b.iter(|| paths.iter().filter(|g| classify(g).unwrap().ordering.is_some()).count())
    });
    group.bench_function("find_chain over P9 targets", |b| b.iter(|| paths.iter().filter(|g| find_chain(g).is_some()).count()));
    group.finish();
}

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let h = h1();
    for n in [20, 80, 320] {
        let inst = planted_instance(&mut rng, &h, n, 4.0 / n as f64);
        group.bench_with_input(BenchmarkId::new("h1", n), &inst, |b, i| b.iter(|| solve_h1(i, &h).unwrap()));
        group.bench_with_input(BenchmarkId::new("oracle on h1", n), &inst, |b, i| b.iter(|| solve_oracle(i, &h).unwrap()));
    }
    let h5 = h_ell(5).unwrap();
    let o = ordering_for_cycle_target(CycleTemplate::Hl(5)).unwrap();
    for n in [20, 80, 320] {
        let inst = planted_instance(&mut rng, &h5, n, 4.0 / n as f64);
        group.bench_with_input(BenchmarkId::new("ordered on h5", n), &inst, |b, i| b.iter(|| solve_ordered(i, &h5, &o).unwrap()));
    }
    group.finish();
}

fn reduction(c: &mut Criterion) {
    let vars: Vec<String> = (0..6).map(|i| format!("r{i}")).collect();
    let quads = vec![[0, 1, 2, 3], [2, 3, 4, 5], [4, 5, 0, 1], [1, 3, 5, 0]];
    let csp = QuadCsp::new(vars, quads).unwrap();
    let r = build_reduction(&csp, 7).unwrap();
    c.bench_function("build_reduction 4 quads", |b| b.iter(|| build_reduction(black_box(&csp), 7).unwrap()));
    c.bench_function("oracle on compiled reduction", |b| b.iter(|| solve_oracle(&r.instance, &r.target).unwrap()));
}

criterion_group!(benches, classification, solvers, reduction);
criterion_main!(benches);
