//! List homomorphisms to Ĥ₁ by boundary/region decomposition and a linear
//! system over GF(2).
//!
//! After arc consistency, the vertices whose smallest list value is `b` or
//! `w` form the boundary; each component of the rest (a region) maps onto
//! `t1 t2` or onto `s1 s2`. Every region and boundary edge then has a blue
//! image, so the switching of the boundary is pinned down by walk signs
//! through the regions.

use super::ac::{propagate, TargetMasks};
use super::{gf2_solve, Domain, Gf2System, Instance, Outcome, Solution};
use crate::error::{unsupported, Result};
use crate::graph::{bipartition, is_balanced, switching_equivalent, SignedGraph, Switching};
use crate::targets::{h1, H1_B, H1_S1, H1_S2, H1_T1, H1_T2, H1_W};

const BLACK: Domain = 1 << H1_W | 1 << H1_T1 | 1 << H1_S1;
const WHITE: Domain = 1 << H1_B | 1 << H1_T2 | 1 << H1_S2;
// the special min ordering: b < t2 < s2 and w < t1 < s1
const ORDER: [usize; 6] = [H1_B, H1_W, H1_T2, H1_T1, H1_S2, H1_S1];

/// Solves against any target switching equivalent to Ĥ₁.
pub fn solve_h1(inst: &Instance, h: &SignedGraph) -> Result<Outcome> {
    inst.check_target(h)?;
    let canon = h1();
    if *h == canon {
        return Ok(Outcome::decided(solve_canonical(inst)));
    }
    let eq = switching_equivalent(h, &canon).ok_or_else(|| unsupported("target is not switching equivalent to Ĥ₁"))?;
    let lists = inst.lists.iter().map(|l| l.iter().map(|&t| eq.map[t]).collect()).collect();
    let moved = Instance::new(inst.g.clone(), lists)?;
    let solution = solve_canonical(&moved).map(|sol| {
        let mut back = vec![0; h.vertex_count()];
        for (t, &c) in eq.map.iter().enumerate() {
            back[c] = t;
        }
        let map: Vec<usize> = sol.map.iter().map(|&c| back[c]).collect();
        // undo the target switching on top of the solution's own
        let flipped: Vec<usize> =
            (0..map.len()).filter(|&v| sol.switching.contains(v) != eq.switching.contains(map[v])).collect();
        Solution { map, switching: Switching::from_vertices(flipped) }
    });
    Ok(Outcome::decided(solution))
}

fn solve_canonical(inst: &Instance) -> Option<Solution> {
    let n = inst.g.vertex_count();
    let mut map = vec![0; n];
    let mut flipped = Vec::new();
    for comp in inst.g.components() {
        let sub = inst.induced(&comp);
        let sol = solve_connected(&sub)?;
        for (i, &v) in comp.iter().enumerate() {
            map[v] = sol.map[i];
            if sol.switching.contains(i) {
                flipped.push(v);
            }
        }
    }
    Some(Solution { map, switching: Switching::from_vertices(flipped) })
}

fn solve_connected(inst: &Instance) -> Option<Solution> {
    let g = &inst.g;
    let parts = bipartition(g)?;
    let doms: Vec<Domain> = inst.lists.iter().map(|l| l.iter().fold(0, |d, &t| d | 1 << t)).collect();
    let masks = TargetMasks::new(&h1());
    // black vertices to black targets first, then to white ones
    for black_side in [BLACK, WHITE] {
        let mut d: Vec<Domain> = (0..g.vertex_count())
            .map(|v| doms[v] & if parts.is_black(v) { black_side } else { !black_side })
            .collect();
        if !propagate(g, &masks, &mut d) {
            continue;
        }
        if let Some(sol) = regions_and_system(g, &d) {
            return Some(sol);
        }
    }
    None
}

struct Region {
    vertices: Vec<usize>,
    // all-blue normalization of the region
    sigma: Vec<bool>,
    can_t: bool,
    can_s: bool,
    z: Option<usize>,
}

fn regions_and_system(g: &SignedGraph, doms: &[Domain]) -> Option<Solution> {
    let n = g.vertex_count();
    let f: Vec<usize> = doms.iter().map(|&d| *ORDER.iter().find(|&&t| d >> t & 1 == 1).unwrap()).collect();
    let boundary: Vec<bool> = f.iter().map(|&t| t == H1_B || t == H1_W).collect();
    // `white_side[v]`: v maps into the white class {b, t2, s2}
    let white_side: Vec<bool> = doms.iter().map(|&d| d & WHITE != 0).collect();

    let interior: Vec<usize> = (0..n).filter(|&v| !boundary[v]).collect();
    let mut region_of = vec![usize::MAX; n];
    let mut regions = Vec::new();
    for comp in g.induced(&interior).components() {
        let vertices: Vec<usize> = comp.iter().map(|&i| interior[i]).collect();
        let sub = g.induced(&vertices);
        let sigma = is_balanced(&sub)?.to_bits(vertices.len());
        let t_of = |v: usize| if white_side[v] { H1_T2 } else { H1_T1 };
        let s_of = |v: usize| if white_side[v] { H1_S2 } else { H1_S1 };
        let can_t = vertices.iter().all(|&v| doms[v] >> t_of(v) & 1 == 1);
        let can_s = vertices.iter().all(|&v| doms[v] >> s_of(v) & 1 == 1);
        if !can_t && !can_s {
            return None;
        }
        for &v in &vertices {
            region_of[v] = regions.len();
        }
        regions.push(Region { vertices, sigma, can_t, can_s, z: None });
    }
    let mut sigma_of = vec![false; n];
    for r in &regions {
        for (i, &v) in r.vertices.iter().enumerate() {
            sigma_of[v] = r.sigma[i];
        }
    }

    let mut sys = Gf2System::new();
    let mut x = vec![usize::MAX; n];
    for v in (0..n).filter(|&v| boundary[v]) {
        let name = if f[v] == H1_W { "x" } else { "y" };
        x[v] = sys.var(format!("{name}{v}"));
    }
    for (k, r) in regions.iter_mut().enumerate() {
        if r.can_t && r.can_s {
            r.z = Some(sys.var(format!("z{k}")));
        }
    }
    // Each boundary edge (v, k) must become blue: x_v + r_K + z_K [k white]
    // = sign(vk) + sigma_k. Relating every edge to the region's first one
    // eliminates the region switch r_K.
    let mut anchors: Vec<Option<(usize, bool, bool)>> = vec![None; regions.len()];
    for k in 0..n {
        if boundary[k] {
            continue;
        }
        let ri = region_of[k];
        for &v in g.neighbours(k).iter().filter(|&&v| boundary[v]) {
            let e = g.colour(v, k).unwrap().sign()?.bit() ^ sigma_of[k];
            let side = white_side[k];
            let Some((v0, e0, side0)) = anchors[ri] else {
                anchors[ri] = Some((v, e, side));
                continue;
            };
            let r = &regions[ri];
            let mut vars = vec![x[v], x[v0]];
            let mut rhs = e ^ e0;
            if side != side0 {
                match r.z {
                    Some(z) => vars.push(z),
                    None => rhs ^= r.can_s,
                }
            }
            sys.equation(vars, rhs);
        }
    }
    let sol = gf2_solve(&sys)?;

    let mut map = f.clone();
    let mut flip = vec![false; n];
    for v in (0..n).filter(|&v| boundary[v]) {
        flip[v] = sol[x[v]];
    }
    for (ri, r) in regions.iter().enumerate() {
        let s = match r.z {
            Some(z) => sol[z],
            None => r.can_s && !r.can_t,
        };
        let region_switch = match anchors[ri] {
            Some((v0, e0, side0)) => sol[x[v0]] ^ e0 ^ (s && side0),
            None => false,
        };
        for (i, &v) in r.vertices.iter().enumerate() {
            let white = white_side[v];
            map[v] = match (s, white) {
                (false, false) => H1_T1,
                (false, true) => H1_T2,
                (true, false) => H1_S1,
                (true, true) => H1_S2,
            };
            flip[v] = r.sigma[i] ^ region_switch ^ (s && white);
        }
    }
    Some(Solution { map, switching: Switching::from_bits(&flip) })
}
