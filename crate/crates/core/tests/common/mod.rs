#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sepsign_core::graph::apply_switching;
use sepsign_core::hardness::{build_reduction, csp_solve, QuadCsp};
use sepsign_core::solver::{check_solution, solve_oracle, Instance, Solution};
use sepsign_core::{Colour, SignedGraph, Switching};

/// Random instance; about half are planted so that a solution exists
/// before a final perturbation.
pub fn random_instance(rng: &mut ChaCha8Rng, h: &SignedGraph, n: usize) -> Instance {
    let m = h.vertex_count();
    let mut g = SignedGraph::new(n);
    let planted = rng.gen_bool(0.5);
    let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if planted {
                let Some(c) = h.colour(f[u], f[v]) else { continue };
                if rng.gen_bool(0.5) {
                    continue;
                }
                let c = match c {
                    Colour::Bicoloured => [Colour::Blue, Colour::Red, Colour::Bicoloured][rng.gen_range(0..3)],
                    c => c,
                };
                g.add_edge(u, v, c).unwrap();
            } else if rng.gen_bool(0.3) {
                let c = [Colour::Blue, Colour::Red, Colour::Bicoloured][rng.gen_range(0..3)];
                g.add_edge(u, v, c).unwrap();
            }
        }
    }
    if planted {
        let s = Switching::from_bits(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
        g = apply_switching(&g, &s).unwrap();
        if rng.gen_bool(0.3) {
            if let Some((u, v, c)) = g.edges().collect::<Vec<_>>().choose(rng).copied() {
                if !c.is_bicoloured() {
                    let mut h2 = SignedGraph::new(n);
                    for (a, b, d) in g.edges() {
                        let d = if (a, b) == (u, v) { d.sign().map(|s| Colour::from_sign(s.flip())).unwrap() } else { d };
                        h2.add_edge(a, b, d).unwrap();
                    }
                    g = h2;
                }
            }
        }
    }
    let lists = (0..n)
        .map(|v| {
            let mut l: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
            if planted {
                l.push(f[v]);
            }
            l
        })
        .collect();
    Instance::new(g, lists).unwrap()
}

/// Same decision, and any solution passes the checker.
pub fn agree(inst: &Instance, h: &SignedGraph, got: Option<Solution>, want: &Option<Solution>) {
    assert_eq!(got.is_some(), want.is_some(), "{inst:?}");
    if let Some(sol) = got {
        assert_eq!(check_solution(inst, h, &sol), Ok(()), "{inst:?}");
    }
}

/// Every CSP over exactly `k <= max_vars` variables (all used) with
/// `1..=max_quads` quadruples, one per renaming class and as a multiset of
/// quadruples.
pub fn quad_csps(max_vars: usize, max_quads: usize) -> Vec<QuadCsp> {
    let mut out = Vec::new();
    for k in 1..=max_vars {
        let tuples: Vec<[usize; 4]> = (0..k.pow(4)).map(|t| [t % k, t / k % k, t / k / k % k, t / k / k / k]).collect();
        let perms = permutations(k);
        let mut pick = Vec::new();
        collect(&tuples, 0, max_quads, &mut pick, &mut |quads: &[usize]| {
            let qs: Vec<[usize; 4]> = quads.iter().map(|&i| tuples[i]).collect();
            let used = qs.iter().flatten().fold(0u32, |m, &v| m | 1 << v);
            if used != (1 << k) - 1 {
                return;
            }
            let canonical = perms.iter().all(|p| {
                let mut image: Vec<[usize; 4]> = qs.iter().map(|q| q.map(|v| p[v])).collect();
                image.sort_by_key(|q| index(q, k));
                image.iter().map(|q| index(q, k)).cmp(quads.iter().copied()).is_ge()
            });
            if canonical {
                let vars = (0..k).map(|v| format!("r{v}")).collect();
                out.push(QuadCsp::new(vars, qs).unwrap());
            }
        });
    }
    out
}

fn index(q: &[usize; 4], k: usize) -> usize {
    q[0] + k * (q[1] + k * (q[2] + k * q[3]))
}

// non-decreasing index sequences of length 1..=left
fn collect(tuples: &[[usize; 4]], from: usize, left: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    for i in from..tuples.len() {
        pick.push(i);
        f(pick);
        if left > 1 {
            collect(tuples, i, left - 1, pick, f);
        }
        pick.pop();
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for at in 0..k {
            let mut q = p.clone();
            q.insert(at, k - 1);
            out.push(q);
        }
    }
    out
}

/// Decision agreement, gadget rigidity and variable coherence for one CSP;
/// with `pin`, also that pinning each assignment succeeds exactly when the
/// assignment satisfies the CSP.
pub fn check_reduction(csp: &QuadCsp, ell: usize, pin: bool) -> Result<(), String> {
    let r = build_reduction(csp, ell).map_err(|e| e.to_string())?;
    let sol = solve_oracle(&r.instance, &r.target).map_err(|e| e.to_string())?.solution;
    if sol.is_some() != csp_solve(csp).is_some() {
        return Err(format!("{csp:?}: decisions differ"));
    }
    if let Some(sol) = &sol {
        check_solution(&r.instance, &r.target, sol)?;
        for k in 0..csp.quads.len() {
            let t_side = r.inner(k).iter().map(|&v| sol.map[v] < ell).collect::<Vec<_>>();
            if t_side.iter().any(|&t| t != t_side[0]) {
                return Err(format!("{csp:?}: gadget {k} mixes t- and s-images"));
            }
        }
        for occ in &r.occurrences {
            if occ.iter().any(|&v| sol.switching.contains(v) != sol.switching.contains(occ[0])) {
                return Err(format!("{csp:?}: occurrences {occ:?} switched apart"));
            }
        }
        let x: Vec<bool> = r.decode(sol).into_iter().map(|b| b.unwrap_or(false)).collect();
        if !csp.satisfied_by(&x) {
            return Err(format!("{csp:?}: decoded assignment {x:?} fails"));
        }
    }
    if pin {
        let n = csp.vars.len();
        for bits in 0u32..1 << n {
            let x: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            let inst = r.pinned(&x);
            let got = solve_oracle(&inst, &r.target).map_err(|e| e.to_string())?.solution;
            if got.is_some() != csp.satisfied_by(&x) {
                return Err(format!("{csp:?}: pinned {x:?} gives {}", got.is_some()));
            }
        }
    }
    Ok(())
}
