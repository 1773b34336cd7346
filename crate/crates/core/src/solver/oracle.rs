//! Exact backtracking solver used as ground truth.

use super::ac::{bits, propagate, TargetMasks};
use super::{Domain, Instance, Outcome, Solution};
use crate::error::Result;
use crate::graph::{SignedGraph, Switching};
use crate::parity::ParityDsu;

/// Backtracking over vertex maps with forward checking; the switching is
/// tracked incrementally as parity constraints `s_u + s_v = [sign(uv) ≠
/// sign(image)]`. Components are solved one at a time.
pub fn solve_oracle(inst: &Instance, h: &SignedGraph) -> Result<Outcome> {
    let doms = inst.domains(h)?;
    let masks = TargetMasks::new(h);
    let n = inst.g.vertex_count();
    let mut map = vec![0; n];
    let mut flipped = Vec::new();
    let mut backtracks = 0;
    for comp in inst.g.components() {
        let g = inst.g.induced(&comp);
        let mut d: Vec<Domain> = comp.iter().map(|&v| doms[v]).collect();
        if !propagate(&g, &masks, &mut d) {
            return Ok(Outcome { solution: None, backtracks });
        }
        let mut s = Search { g: &g, h, masks: &masks, assigned: vec![None; comp.len()], dsu: ParityDsu::new(comp.len()), backtracks: 0 };
        let found = s.run(&mut d);
        backtracks += s.backtracks;
        if !found {
            return Ok(Outcome { solution: None, backtracks });
        }
        let pot = s.dsu.potentials();
        for (i, &v) in comp.iter().enumerate() {
            map[v] = s.assigned[i].unwrap();
            if pot[i] {
                flipped.push(v);
            }
        }
    }
    let solution = Solution { map, switching: Switching::from_vertices(flipped) };
    Ok(Outcome { solution: Some(solution), backtracks })
}

struct Search<'a> {
    g: &'a SignedGraph,
    h: &'a SignedGraph,
    masks: &'a TargetMasks,
    assigned: Vec<Option<usize>>,
    dsu: ParityDsu,
    backtracks: u64,
}

impl Search<'_> {
    fn run(&mut self, doms: &mut [Domain]) -> bool {
        // smallest open domain first
        let next = (0..doms.len())
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| (doms[v].count_ones(), v));
        let Some(v) = next else { return true };
        for a in bits(doms[v]) {
            let cp = self.dsu.checkpoint();
            if self.consistent(v, a) {
                let saved = doms.to_vec();
                self.assigned[v] = Some(a);
                doms[v] = 1 << a;
                if self.forward(v, a, doms) && self.run(doms) {
                    return true;
                }
                self.assigned[v] = None;
                doms.copy_from_slice(&saved);
            }
            self.dsu.rollback(cp);
            self.backtracks += 1;
        }
        false
    }

    // edges to already-mapped neighbours, with their parity constraints
    fn consistent(&mut self, v: usize, a: usize) -> bool {
        for &u in self.g.neighbours(v) {
            let Some(b) = self.assigned[u] else { continue };
            let Some(image) = self.h.colour(a, b) else { return false };
            let c = self.g.colour(u, v).unwrap();
            if c.is_bicoloured() {
                if !image.is_bicoloured() {
                    return false;
                }
            } else if let Some(sign) = image.sign() {
                if !self.dsu.union(u, v, c.sign().unwrap() != sign) {
                    return false;
                }
            }
        }
        true
    }

    fn forward(&self, v: usize, a: usize, doms: &mut [Domain]) -> bool {
        for &w in self.g.neighbours(v) {
            if self.assigned[w].is_some() {
                continue;
            }
            let mask = if self.g.is_bicoloured_edge(v, w) { self.masks.bic[a] } else { self.masks.any[a] };
            doms[w] &= mask;
            if doms[w] == 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Colour::*;
    use crate::solver::check_solution;
    use crate::targets::{h0, h1};

    fn c4(red: usize) -> SignedGraph {
        SignedGraph::from_edges(4, (0..4).map(|i| (i, (i + 1) % 4, if i < red { Red } else { Blue }))).unwrap()
    }

    #[test]
    fn examples() {
        let inst = Instance::full(c4(1), 6);
        let sol = solve_oracle(&inst, &h1()).unwrap().solution.unwrap();
        assert_eq!(check_solution(&inst, &h1(), &sol), Ok(()));

        let inst = Instance::full(c4(0), 4);
        let sol = solve_oracle(&inst, &h0()).unwrap().solution.unwrap();
        assert_eq!(check_solution(&inst, &h0(), &sol), Ok(()));

        let inst = Instance::full(c4(1), 4);
        assert_eq!(solve_oracle(&inst, &h0()).unwrap().solution, None);
        // two red edges make the cycle balanced again
        let inst = Instance::full(c4(2), 4);
        assert!(solve_oracle(&inst, &h0()).unwrap().solution.is_some());
    }
}
