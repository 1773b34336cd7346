//! Shared inputs for the benchmarks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sepsign_core::graph::{apply_switching, Colour, SignedGraph, Switching};
use sepsign_core::solver::Instance;

/// A planted yes-instance on `n` vertices: a random map into `h`, a random
/// subset of the induced edges, a random switching and lists of about half
/// the target plus the planted image.
pub fn planted_instance(rng: &mut ChaCha8Rng, h: &SignedGraph, n: usize, density: f64) -> Instance {
    let m = h.vertex_count();
    let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    let mut g = SignedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if let Some(c) = h.colour(f[u], f[v]) {
                if rng.gen_bool(density) {
                    let c = if c.is_bicoloured() { [Colour::Blue, Colour::Red, Colour::Bicoloured][rng.gen_range(0..3)] } else { c };
                    g.add_edge(u, v, c).unwrap();
                }
            }
        }
    }
    let s = Switching::from_bits(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
    let g = apply_switching(&g, &s).unwrap();
    let lists = (0..n)
        .map(|v| {
            let mut l: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
            l.push(f[v]);
            l
        })
        .collect();
    Instance::new(g, lists).unwrap()
}
