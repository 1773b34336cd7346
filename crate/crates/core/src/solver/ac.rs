use std::collections::VecDeque;

use super::{Domain, Instance};
use crate::error::Result;
use crate::graph::SignedGraph;

/// Neighbour masks of the target: all edges, and bicoloured edges only.
pub(crate) struct TargetMasks {
    pub any: Vec<Domain>,
    pub bic: Vec<Domain>,
}

impl TargetMasks {
    pub fn new(h: &SignedGraph) -> TargetMasks {
        let m = h.vertex_count();
        let mut any = vec![0; m];
        let mut bic = vec![0; m];
        for (a, b, c) in h.edges() {
            any[a] |= 1 << b;
            any[b] |= 1 << a;
            if c.is_bicoloured() {
                bic[a] |= 1 << b;
                bic[b] |= 1 << a;
            }
        }
        TargetMasks { any, bic }
    }

    // values adjacent (through the right kind of edge) to something in `d`
    pub fn image(&self, d: Domain, bicoloured: bool) -> Domain {
        let masks = if bicoloured { &self.bic } else { &self.any };
        bits(d).fold(0, |acc, a| acc | masks[a])
    }
}

pub(crate) fn bits(d: Domain) -> impl Iterator<Item = usize> {
    let mut d = d;
    std::iter::from_fn(move || {
        if d == 0 {
            return None;
        }
        let i = d.trailing_zeros() as usize;
        d &= d - 1;
        Some(i)
    })
}

/// Arc consistency over the underlying graphs plus the bicoloured
/// subgraphs. `None` when some list empties.
pub fn arc_consistency(inst: &Instance, h: &SignedGraph) -> Result<Option<Vec<Vec<usize>>>> {
    let mut doms = inst.domains(h)?;
    let masks = TargetMasks::new(h);
    Ok(propagate(&inst.g, &masks, &mut doms).then(|| doms.iter().map(|&d| bits(d).collect()).collect()))
}

/// Shrinks `doms` to the arc-consistent fixpoint; `false` on a wipeout.
pub(crate) fn propagate(g: &SignedGraph, masks: &TargetMasks, doms: &mut [Domain]) -> bool {
    let n = g.vertex_count();
    if doms.contains(&0) {
        return false;
    }
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        for &v in g.neighbours(u) {
            let bicoloured = g.is_bicoloured_edge(u, v);
            let keep = doms[v] & masks.image(doms[u], bicoloured);
            if keep != doms[v] {
                doms[v] = keep;
                if keep == 0 {
                    return false;
                }
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Colour::*;
    use crate::targets::{h0, h1, h_ell, H1_B, H1_W};

    #[test]
    fn examples() {
        let edge = SignedGraph::from_edges(2, [(0, 1, Blue)]).unwrap();
        let lists = arc_consistency(&Instance::full(edge, 4), &h0()).unwrap().unwrap();
        assert_eq!(lists, vec![vec![0, 1, 2, 3]; 2]);

        let bic = SignedGraph::from_edges(2, [(0, 1, Bicoloured)]).unwrap();
        let lists = arc_consistency(&Instance::full(bic, 6), &h1()).unwrap().unwrap();
        assert_eq!(lists, vec![vec![H1_B, H1_W]; 2]);

        // path x0 x1 x2 x3 into Ĥ5 with ends pinned to t1 and t4
        let p = SignedGraph::from_edges(4, [(0, 1, Blue), (1, 2, Blue), (2, 3, Blue)]).unwrap();
        let mut inst = Instance::full(p, 8);
        inst.lists[0] = vec![1];
        inst.lists[3] = vec![4];
        let lists = arc_consistency(&inst, &h_ell(5).unwrap()).unwrap().unwrap();
        // t1 reaches {t0, t2}; t4 reaches {t3, t5}; then the middle edge
        // keeps the pairs joined by an edge of Ĥ5
        assert_eq!(lists, vec![vec![1], vec![0, 2], vec![3, 5], vec![4]]);
    }

    #[test]
    fn empty_list_is_empty() {
        let g = SignedGraph::new(1);
        let inst = Instance::new(g, vec![vec![]]).unwrap();
        assert_eq!(arc_consistency(&inst, &h0()).unwrap(), None);
    }
}
