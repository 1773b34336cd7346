//! Reduction from the quadruple CSP `(a = b = c = d) ∨ (a ≠ c)` to list
//! homomorphism into the unbalanced ℓ-target (`h_ell_unbalanced`).

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{walk_sign, Colour, Sign, SignedGraph};
use crate::solver::{gf2_solve, Gf2System, Instance, Solution};
use crate::targets::{check_ell, h_ell_unbalanced, s1, s2};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadCsp {
    pub vars: Vec<String>,
    /// Indices into `vars`.
    pub quads: Vec<[usize; 4]>,
}

impl QuadCsp {
    pub fn new(vars: Vec<String>, quads: Vec<[usize; 4]>) -> Result<QuadCsp> {
        if let Some(q) = quads.iter().find(|q| q.iter().any(|&v| v >= vars.len())) {
            return Err(invalid(format!("quadruple {q:?} names a variable outside 0..{}", vars.len())));
        }
        Ok(QuadCsp { vars, quads })
    }

    pub fn satisfied_by(&self, x: &[bool]) -> bool {
        self.quads.iter().all(|q| quad_relation(x[q[0]], x[q[1]], x[q[2]], x[q[3]]))
    }
}

pub fn quad_relation(a: bool, b: bool, c: bool, d: bool) -> bool {
    (a == b && b == c && c == d) || a != c
}

/// Exhaustive search; the first satisfying assignment in binary counting
/// order (variable 0 is the low bit).
pub fn csp_solve(csp: &QuadCsp) -> Option<Vec<bool>> {
    let n = csp.vars.len();
    assert!(n < 64, "exhaustive search over {n} variables");
    (0u64..1 << n).map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>()).find(|x| csp.satisfied_by(x))
}

/// One quadruple gadget. Local vertex ids: the spine `p_0 = a′, ..., p_ℓ =
/// c′` is `0..=ℓ`, then `b′ = ℓ + 1` (hanging off `p_3`) and `d′ = ℓ + 2`
/// (hanging off `p_{ℓ-3}`). Lists use the target labels of `targets`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub ell: usize,
    pub graph: SignedGraph,
    pub lists: Vec<Vec<usize>>,
}

impl Gadget {
    pub fn vertex_count(&self) -> usize {
        self.ell + 3
    }

    /// `[a′, b′, c′, d′]`
    pub fn ends(&self) -> [usize; 4] {
        [0, self.ell + 1, self.ell, self.ell + 2]
    }

    pub fn inner(&self) -> std::ops::Range<usize> {
        1..self.ell
    }

    /// The tree path between two gadget vertices.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.vertex_count()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &v in self.graph.neighbours(u) {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![to];
        while *path.last().unwrap() != from {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    /// The six end-to-end paths with their required signs.
    pub fn constraints(&self) -> [(usize, usize, Sign); 6] {
        let [a, b, c, d] = self.ends();
        [
            (a, b, Sign::Pos),
            (c, d, Sign::Pos),
            (a, c, Sign::Neg),
            (a, d, Sign::Neg),
            (b, c, Sign::Neg),
            (b, d, Sign::Neg),
        ]
    }
}

pub fn build_gadget(ell: usize) -> Result<Gadget> {
    check_ell(ell, 5)?;
    let mut edges: Vec<(usize, usize)> = (0..ell).map(|i| (i, i + 1)).collect();
    edges.push((3, ell + 1));
    edges.push((ell - 3, ell + 2));

    let mut lists = vec![Vec::new(); ell + 3];
    lists[0] = vec![0];
    lists[ell + 1] = vec![0];
    lists[ell] = vec![ell];
    lists[ell + 2] = vec![ell];
    for (i, l) in lists.iter_mut().enumerate().take(ell).skip(1) {
        *l = vec![i, if i % 2 == 1 { s1(ell) } else { s2(ell) }];
    }

    // solve for the edge signs on the bare tree, then colour it
    let tree = Gadget { ell, graph: SignedGraph::from_edges(ell + 3, edges.iter().map(|&(u, v)| (u, v, Colour::Blue)))?, lists };
    let mut sys = Gf2System::new();
    for &(u, v) in &edges {
        sys.var(format!("e{u}_{v}"));
    }
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    for (u, v, sign) in tree.constraints() {
        let path = tree.path(u, v);
        sys.equation(path.windows(2).map(|w| index(w[0], w[1])), sign.bit());
    }
    let bits = gf2_solve(&sys).ok_or_else(|| invalid("gadget path-sign system is infeasible"))?;
    let graph = SignedGraph::from_edges(
        ell + 3,
        edges.iter().zip(&bits).map(|(&(u, v), &neg)| (u, v, Colour::from_sign(Sign::from_bit(neg)))),
    )?;
    let gadget = Gadget { graph, ..tree };
    for (u, v, sign) in gadget.constraints() {
        if walk_sign(&gadget.graph, &gadget.path(u, v), &[])? != sign {
            return Err(invalid(format!("gadget path {u}-{v} has the wrong sign")));
        }
    }
    Ok(gadget)
}

/// A compiled instance together with where each quadruple's gadget and each
/// variable's occurrences ended up.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub target: SignedGraph,
    pub instance: Instance,
    pub gadget: Gadget,
    /// First vertex of each quadruple's gadget copy.
    pub offsets: Vec<usize>,
    /// Every vertex standing for each variable.
    pub occurrences: Vec<Vec<usize>>,
}

impl Reduction {
    pub fn ends(&self, quad: usize) -> [usize; 4] {
        self.gadget.ends().map(|v| self.offsets[quad] + v)
    }

    pub fn inner(&self, quad: usize) -> Vec<usize> {
        self.gadget.inner().map(|v| self.offsets[quad] + v).collect()
    }

    /// The assignment read off a solution: a variable is true when its
    /// occurrences are switched. `None` for variables that never occur.
    pub fn decode(&self, sol: &Solution) -> Vec<Option<bool>> {
        self.occurrences.iter().map(|occ| occ.first().map(|&v| sol.switching.contains(v))).collect()
    }

    /// The instance extended so that its solutions switch exactly the
    /// variables set in `x`, relative to a reference vertex. Since the
    /// relation is closed under complement, it has a solution iff `x`
    /// satisfies the CSP.
    pub fn pinned(&self, x: &[bool]) -> Instance {
        let ell = self.gadget.ell;
        let g = &self.instance.g;
        let n = g.vertex_count();
        let mut edges: Vec<(usize, usize, Colour)> = g.edges().collect();
        let mut lists = self.instance.lists.clone();
        // anchors z (list t_1) and z′ (list t_{ℓ-1}) joined by a blue t-path
        lists.extend((1..ell).map(|i| vec![i]));
        edges.extend((n..n + ell - 2).map(|v| (v, v + 1, Colour::Blue)));
        let (z, z2) = (n, n + ell - 2);
        for (occ, &bit) in self.occurrences.iter().zip(x) {
            let Some(&v) = occ.first() else { continue };
            let anchor = if self.instance.lists[v] == [0] { z } else { z2 };
            edges.push((anchor, v, if bit { Colour::Red } else { Colour::Blue }));
        }
        Instance::new(SignedGraph::from_edges(n + ell - 1, edges).unwrap(), lists).unwrap()
    }
}

pub fn build_reduction(csp: &QuadCsp, ell: usize) -> Result<Reduction> {
    let gadget = build_gadget(ell)?;
    let size = gadget.vertex_count();
    let mut n = size * csp.quads.len();
    let mut edges: Vec<(usize, usize, Colour)> = Vec::new();
    let mut lists: Vec<Vec<usize>> = Vec::new();
    let offsets: Vec<usize> = (0..csp.quads.len()).map(|k| k * size).collect();
    for &off in &offsets {
        edges.extend(gadget.graph.edges().map(|(u, v, c)| (off + u, off + v, c)));
        lists.extend(gadget.lists.iter().cloned());
    }

    // occurrences of each variable on the a/b side and on the c/d side
    let mut front = vec![Vec::new(); csp.vars.len()];
    let mut back = vec![Vec::new(); csp.vars.len()];
    for (k, q) in csp.quads.iter().enumerate() {
        let ends = gadget.ends().map(|v| offsets[k] + v);
        for (pos, &r) in q.iter().enumerate() {
            if pos < 2 { &mut front[r] } else { &mut back[r] }.push(ends[pos]);
        }
    }
    let mut fresh = |list: usize, lists: &mut Vec<Vec<usize>>| {
        lists.push(vec![list]);
        n += 1;
        n - 1
    };
    let mut occurrences = Vec::new();
    for r in 0..csp.vars.len() {
        if front[r].len() > 1 {
            let x = fresh(1, &mut lists);
            edges.extend(front[r].iter().map(|&v| (x, v, Colour::Blue)));
        }
        if back[r].len() > 1 {
            let y = fresh(ell - 1, &mut lists);
            edges.extend(back[r].iter().map(|&v| (y, v, Colour::Blue)));
        }
        if let (Some(&first), Some(&last)) = (front[r].first(), back[r].first()) {
            let mut prev = first;
            for i in 1..ell {
                let v = fresh(i, &mut lists);
                edges.push((prev, v, Colour::Blue));
                prev = v;
            }
            edges.push((prev, last, Colour::Blue));
        }
        occurrences.push(front[r].iter().chain(&back[r]).copied().collect());
    }
    let instance = Instance::new(SignedGraph::from_edges(n, edges)?, lists)?;
    Ok(Reduction { target: h_ell_unbalanced(ell)?, instance, gadget, offsets, occurrences })
}
