//! List homomorphism solvers.
//!
//! A solution of an instance `(Ĝ, L)` against a target `Ĥ` is a vertex map
//! `f` with `f(v) ∈ L(v)` together with a switching of `Ĝ` after which
//! every bicoloured edge maps to a bicoloured edge and every blue or red
//! edge maps to an edge of the same colour or to a bicoloured edge.

mod ac;
mod gf2;
mod h1;
mod oracle;
mod ordered;

use serde::{Deserialize, Serialize};

pub use ac::arc_consistency;
pub use gf2::{gf2_solve, Gf2System};
pub use h1::solve_h1;
pub use oracle::solve_oracle;
pub use ordered::solve_ordered;

use crate::classify::{classify, Complexity, Reason};
use crate::error::{invalid, unsupported, Result};
use crate::graph::{Colour, SignedGraph, Switching};

// bitset domains over target vertices
pub(crate) type Domain = u128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub g: SignedGraph,
    /// `lists[v]`, sorted and without repeats.
    pub lists: Vec<Vec<usize>>,
}

impl Instance {
    pub fn new(g: SignedGraph, lists: Vec<Vec<usize>>) -> Result<Instance> {
        if lists.len() != g.vertex_count() {
            return Err(invalid(format!(
                "{} lists for a graph with {} vertices",
                lists.len(),
                g.vertex_count()
            )));
        }
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        Ok(Instance { g, lists })
    }

    /// Every vertex may map anywhere in a target with `target_size` vertices.
    pub fn full(g: SignedGraph, target_size: usize) -> Instance {
        let lists = vec![(0..target_size).collect(); g.vertex_count()];
        Instance { g, lists }
    }

    pub(crate) fn check_target(&self, h: &SignedGraph) -> Result<()> {
        let m = h.vertex_count();
        for (v, l) in self.lists.iter().enumerate() {
            if let Some(&t) = l.iter().find(|&&t| t >= m) {
                return Err(invalid(format!("list of vertex {v} names {t}, target has {m} vertices")));
            }
        }
        Ok(())
    }

    pub(crate) fn domains(&self, h: &SignedGraph) -> Result<Vec<Domain>> {
        self.check_target(h)?;
        if h.vertex_count() > Domain::BITS as usize {
            return Err(unsupported(format!("targets above {} vertices", Domain::BITS)));
        }
        Ok(self.lists.iter().map(|l| l.iter().fold(0, |d, &t| d | 1 << t)).collect())
    }

    /// The instance restricted to `vertices`, renumbered in that order.
    pub(crate) fn induced(&self, vertices: &[usize]) -> Instance {
        Instance {
            g: self.g.induced(vertices),
            lists: vertices.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub map: Vec<usize>,
    pub switching: Switching,
}

/// A decision plus the number of dead ends the search met.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub solution: Option<Solution>,
    pub backtracks: u64,
}

impl Outcome {
    pub(crate) fn decided(solution: Option<Solution>) -> Outcome {
        Outcome { solution, backtracks: 0 }
    }
}

/// Checks a solution against the definition. The error names the first
/// failing vertex or edge.
pub fn check_solution(inst: &Instance, h: &SignedGraph, sol: &Solution) -> std::result::Result<(), String> {
    let n = inst.g.vertex_count();
    if sol.map.len() != n {
        return Err(format!("map has {} entries for {} vertices", sol.map.len(), n));
    }
    for v in 0..n {
        if !inst.lists[v].contains(&sol.map[v]) {
            return Err(format!("vertex {v} maps to {} outside its list", sol.map[v]));
        }
    }
    if let Some(&v) = sol.switching.flipped.iter().find(|&&v| v >= n) {
        return Err(format!("switching names vertex {v}"));
    }
    for (u, v, c) in inst.g.edges() {
        let (a, b) = (sol.map[u], sol.map[v]);
        let image = h.colour(a, b).ok_or_else(|| format!("edge {u}-{v} maps to non-edge {a}-{b}"))?;
        let ok = match c {
            Colour::Bicoloured => image.is_bicoloured(),
            _ if image.is_bicoloured() => true,
            _ => {
                let flip = sol.switching.contains(u) != sol.switching.contains(v);
                let c = if flip { c.sign().unwrap().flip() } else { c.sign().unwrap() };
                Some(c) == image.sign()
            }
        };
        if !ok {
            return Err(format!("edge {u}-{v} ({}) cannot map to {a}-{b} ({})", c.symbol(), image.symbol()));
        }
    }
    Ok(())
}

/// Which solver [`solve_auto`] picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    H1,
    Ordered,
    Oracle,
}

/// Classifies the target, then runs [`solve_h1`] for targets switching
/// equivalent to Ĥ₁ and [`solve_ordered`] for the other polynomial
/// targets. NP-complete targets are refused.
pub fn solve_auto(inst: &Instance, h: &SignedGraph) -> Result<(Algorithm, Outcome)> {
    let verdict = classify(h)?;
    if verdict.complexity == Complexity::NpComplete {
        return Err(unsupported(format!("target is NP-complete ({})", verdict.reason)));
    }
    if verdict.reason == Reason::MatchesH1 {
        return Ok((Algorithm::H1, solve_h1(inst, h)?));
    }
    let o = verdict.ordering.ok_or_else(|| invalid("polynomial verdict without an ordering"))?;
    Ok((Algorithm::Ordered, solve_ordered(inst, h, &o)?))
}
