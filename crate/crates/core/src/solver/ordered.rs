//! Consistency-driven search over the doubled value space: every instance
//! vertex picks a target vertex together with a switch bit.

use std::collections::VecDeque;

use super::ac::bits;
use super::{Domain, Instance, Outcome, Solution};
use crate::error::{invalid, unsupported, Result};
use crate::graph::{Colour, SignedGraph, Switching};
use crate::ordering::{verify_min_ordering, verify_special, Ordering};

// value index 2a + p: target vertex a, switch bit p
fn value(a: usize, p: bool) -> usize {
    2 * a + p as usize
}

/// Supports per instance-edge kind: `[blue, red, bicoloured][x]` is the set
/// of values compatible with `x` across such an edge.
struct Supports([Vec<Domain>; 3]);

impl Supports {
    fn new(h: &SignedGraph) -> Supports {
        let m = h.vertex_count();
        let mut s = [vec![0; 2 * m], vec![0; 2 * m], vec![0; 2 * m]];
        for (a, b, c) in h.edges() {
            for (a, b) in [(a, b), (b, a)] {
                for p in [false, true] {
                    for q in [false, true] {
                        let (x, y) = (value(a, p), value(b, q));
                        if c.is_bicoloured() {
                            for kind in &mut s {
                                kind[x] |= 1 << y;
                            }
                            continue;
                        }
                        // an instance edge of sign `neg`, switched by p + q
                        for (kind, neg) in [(0, false), (1, true)] {
                            if neg ^ p ^ q == c.sign().unwrap().bit() {
                                s[kind][x] |= 1 << y;
                            }
                        }
                    }
                }
            }
        }
        Supports(s)
    }

    fn of(&self, c: Colour) -> &[Domain] {
        match c {
            Colour::Blue => &self.0[0],
            Colour::Red => &self.0[1],
            Colour::Bicoloured => &self.0[2],
        }
    }
}

/// Maintains arc consistency while assigning vertices in index order, each
/// to its smallest remaining value (target vertices by their rank in `o`,
/// unswitched before switched). Exact for any target; the backtrack count
/// shows how far the run was from greedy.
pub fn solve_ordered(inst: &Instance, h: &SignedGraph, o: &Ordering) -> Result<Outcome> {
    if verify_min_ordering(h, o)?.is_some() || verify_special(h, o)?.is_some() {
        return Err(invalid("ordering is not a special min ordering of the target"));
    }
    inst.check_target(h)?;
    let m = h.vertex_count();
    if 2 * m > Domain::BITS as usize {
        return Err(unsupported(format!("targets above {} vertices", Domain::BITS / 2)));
    }
    let mut rank = vec![0; m];
    for class in [&o.black, &o.white] {
        for (r, &v) in class.iter().enumerate() {
            rank[v] = r;
        }
    }
    let black: Vec<bool> = (0..m).map(|v| o.black.contains(&v)).collect();
    let mut order: Vec<usize> = (0..2 * m).collect();
    order.sort_by_key(|&x| (rank[x / 2], black[x / 2], x % 2));

    let mut doms: Vec<Domain> = inst
        .lists
        .iter()
        .map(|l| l.iter().fold(0, |d, &a| d | 1 << value(a, false) | 1 << value(a, true)))
        .collect();
    let mut s = Mac { g: &inst.g, sup: Supports::new(h), order, backtracks: 0 };
    let all: Vec<usize> = (0..doms.len()).collect();
    let found = s.propagate(&mut doms, &all) && s.assign(0, &mut doms);
    let solution = found.then(|| {
        let pick: Vec<usize> = doms.iter().map(|&d| d.trailing_zeros() as usize).collect();
        Solution {
            map: pick.iter().map(|&x| x / 2).collect(),
            switching: Switching::from_vertices((0..pick.len()).filter(|&v| pick[v] % 2 == 1)),
        }
    });
    Ok(Outcome { solution, backtracks: s.backtracks })
}

struct Mac<'a> {
    g: &'a SignedGraph,
    sup: Supports,
    order: Vec<usize>,
    backtracks: u64,
}

impl Mac<'_> {
    fn assign(&mut self, v: usize, doms: &mut [Domain]) -> bool {
        if v == doms.len() {
            return true;
        }
        let choices: Vec<usize> = self.order.iter().copied().filter(|&x| doms[v] >> x & 1 == 1).collect();
        for x in choices {
            let saved = doms.to_vec();
            doms[v] = 1 << x;
            if self.propagate(doms, &[v]) && self.assign(v + 1, doms) {
                return true;
            }
            doms.copy_from_slice(&saved);
            self.backtracks += 1;
        }
        false
    }

    fn propagate(&self, doms: &mut [Domain], changed: &[usize]) -> bool {
        let mut queued = vec![false; doms.len()];
        let mut queue = VecDeque::new();
        for &v in changed {
            queued[v] = true;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            queued[u] = false;
            for &v in self.g.neighbours(u) {
                let sup = self.sup.of(self.g.colour(u, v).unwrap());
                let reach = bits(doms[u]).fold(0, |acc, x| acc | sup[x]);
                let keep = doms[v] & reach;
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
}
