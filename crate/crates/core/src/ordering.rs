//! Min orderings and special min orderings: verification, and the
//! constructions for segmented paths and the polynomial cycle targets.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, unsupported, Result};
use crate::graph::SignedGraph;
use crate::separable::{PathForm, SegmentedForm, SegmentedKind};
use crate::targets::{check_ell, s1, s2};

type Part<'a> = (&'a dyn Fn(usize) -> bool, &'a [usize]);

/// A pair of linear orders, one per colour class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ordering {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
}

/// The polynomial cycle-separable templates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleTemplate {
    H0,
    H1,
    Hl(usize),
}

/// `(x, x', y, y')` with whites `x < x'`, blacks `y < y'`, edges `xy'`,
/// `x'y` and non-edge `xy`.
pub type MinViolation = (usize, usize, usize, usize);

/// `(v, p, q)`: `p` a bicoloured and `q` a unicoloured neighbour of `v`
/// with `q` ordered before `p`.
pub type SpecialViolation = (usize, usize, usize);

// rank within its class, plus class membership; checks consistency with g
fn ranks(g: &SignedGraph, o: &Ordering) -> Result<(Vec<usize>, Vec<bool>)> {
    let n = g.vertex_count();
    let mut rank = vec![usize::MAX; n];
    let mut white = vec![false; n];
    for (class, is_white) in [(&o.black, false), (&o.white, true)] {
        for (r, &v) in class.iter().enumerate() {
            if v >= n {
                return Err(invalid(format!("ordering mentions vertex {v} but the graph has {n}")));
            }
            if rank[v] != usize::MAX {
                return Err(invalid(format!("vertex {v} appears twice in the ordering")));
            }
            rank[v] = r;
            white[v] = is_white;
        }
    }
    if let Some(v) = rank.iter().position(|&r| r == usize::MAX) {
        return Err(invalid(format!("vertex {v} is missing from the ordering")));
    }
    if let Some((u, v, _)) = g.edges().find(|&(u, v, _)| white[u] == white[v]) {
        return Err(invalid(format!("edge {u}-{v} joins two vertices of one colour class")));
    }
    Ok((rank, white))
}

/// The first violation in the order `x, x', y, y'` by rank, or `None`.
pub fn verify_min_ordering(g: &SignedGraph, o: &Ordering) -> Result<Option<MinViolation>> {
    let (rank, _) = ranks(g, o)?;
    for (i, &x) in o.white.iter().enumerate() {
        // highest-ranked neighbour of x: any y' above y must beat it
        let Some(top) = g.neighbours(x).iter().map(|&y| rank[y]).max() else { continue };
        for &x2 in &o.white[i + 1..] {
            for &y in &o.black {
                if rank[y] < top && g.is_edge(x2, y) && !g.is_edge(x, y) {
                    let y2 = *g
                        .neighbours(x)
                        .iter()
                        .filter(|&&w| rank[w] > rank[y])
                        .min_by_key(|&&w| rank[w])
                        .expect("top exceeds rank of y");
                    return Ok(Some((x, x2, y, y2)));
                }
            }
        }
    }
    Ok(None)
}

/// The first vertex whose bicoloured neighbours do not all precede its
/// unicoloured ones, or `None`.
pub fn verify_special(g: &SignedGraph, o: &Ordering) -> Result<Option<SpecialViolation>> {
    let (rank, _) = ranks(g, o)?;
    for v in 0..g.vertex_count() {
        for &p in g.neighbours(v) {
            if !g.is_bicoloured_edge(v, p) {
                continue;
            }
            let late = g.neighbours(v).iter().copied().find(|&q| g.is_unicoloured_edge(v, q) && rank[q] < rank[p]);
            if let Some(q) = late {
                return Ok(Some((v, p, q)));
            }
        }
    }
    Ok(None)
}

/// Special min ordering of a segmented path, in the vertex ids of the
/// graph `p` was read from.
pub fn ordering_for_segmented(p: &PathForm, f: &SegmentedForm) -> Result<Ordering> {
    let n = p.len();
    let ascending: Vec<usize> = (0..n).collect();
    let descending: Vec<usize> = (0..n).rev().collect();
    let mut forward = vec![false; n];
    let mut backward = vec![false; n];
    for s in &f.segments {
        s.forward_sources().for_each(|i| forward[i] = true);
        s.backward_sources().for_each(|i| backward[i] = true);
    }
    // white is the class of position 0, except in the left-right case
    let build = |white: Vec<usize>, black: Vec<usize>| {
        let to_ids = |run: Vec<usize>| run.into_iter().map(|pos| p.order[pos]).collect();
        Ordering { black: to_ids(black), white: to_ids(white) }
    };
    let runs_for = |parity: usize, parts: &[Part]| -> Vec<usize> {
        let mut out = Vec::new();
        for (keep, order) in parts {
            out.extend(order.iter().copied().filter(|&i| i % 2 == parity && keep(i)));
        }
        out
    };
    match f.kind {
        SegmentedKind::TrivialPath => {
            let class = |par| runs_for(par, &[(&|_| true, &ascending)]);
            Ok(build(class(0), class(1)))
        }
        SegmentedKind::RightSegmented => {
            let src = |i: usize| forward[i];
            let rest = |i: usize| !forward[i];
            let class = |par| runs_for(par, &[(&src, &ascending), (&rest, &descending)]);
            Ok(build(class(0), class(1)))
        }
        SegmentedKind::LeftSegmented => {
            let src = |i: usize| backward[i];
            let rest = |i: usize| !backward[i];
            let class = |par| runs_for(par, &[(&src, &descending), (&rest, &ascending)]);
            Ok(build(class(0), class(1)))
        }
        SegmentedKind::LeftRightSegmented => {
            let pivot = f.pivot.ok_or_else(|| invalid("left-right-segmented form without a pivot"))?;
            let a = pivot.start;
            let in_u = |i: usize| i <= a + 1;
            let ul = |i: usize| in_u(i) && backward[i];
            let u_rest = |i: usize| in_u(i) && !backward[i];
            let vr = |i: usize| !in_u(i) && forward[i];
            let v_rest = |i: usize| !in_u(i) && !forward[i];
            let wpar = a % 2;
            let white = runs_for(
                wpar,
                &[(&ul, &descending), (&u_rest, &ascending), (&vr, &ascending), (&v_rest, &descending)],
            );
            let black = runs_for(
                1 - wpar,
                &[(&vr, &ascending), (&v_rest, &descending), (&ul, &descending), (&u_rest, &ascending)],
            );
            Ok(build(white, black))
        }
        SegmentedKind::NotSegmented => Err(unsupported("no special min ordering for a non-segmented path")),
    }
}

/// The ordering for a template in its canonical labelling (see
/// [`crate::targets`]); `H1` uses the `ℓ = 3` labels.
pub fn ordering_for_cycle_target(t: CycleTemplate) -> Result<Ordering> {
    let ell = match t {
        CycleTemplate::H0 => return Ok(Ordering { black: vec![1, 3], white: vec![0, 2] }),
        CycleTemplate::H1 => 3,
        CycleTemplate::Hl(ell) => {
            check_ell(ell, 3)?;
            ell
        }
    };
    let mut white: Vec<usize> = (0..ell).step_by(2).collect();
    white.push(s2(ell));
    let mut black: Vec<usize> = (1..=ell).rev().step_by(2).collect();
    black.push(s1(ell));
    Ok(Ordering { black, white })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Colour::*;
    use crate::separable::segmented_form;
    use crate::separable::tests::{fig3, pf1};
    use crate::targets::{h1, h_ell};

    fn path(n: usize) -> SignedGraph {
        SignedGraph::from_edges(n, (0..n - 1).map(|i| (i, i + 1, Blue))).unwrap()
    }

    fn brute_min(g: &SignedGraph, o: &Ordering) -> bool {
        let w = &o.white;
        let b = &o.black;
        for i in 0..w.len() {
            for i2 in i + 1..w.len() {
                for j in 0..b.len() {
                    for j2 in j + 1..b.len() {
                        if g.is_edge(w[i], b[j2]) && g.is_edge(w[i2], b[j]) && !g.is_edge(w[i], b[j]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn both_ok(g: &SignedGraph, o: &Ordering) -> bool {
        verify_min_ordering(g, o).unwrap().is_none() && verify_special(g, o).unwrap().is_none()
    }

    #[test]
    fn verifier_examples() {
        let p4 = path(4);
        let o = Ordering { black: vec![1, 3], white: vec![0, 2] };
        assert_eq!(verify_min_ordering(&p4, &o).unwrap(), None);

        let mut c6 = path(6);
        c6.add_edge(5, 0, Blue).unwrap();
        let o = Ordering { black: vec![1, 3, 5], white: vec![0, 2, 4] };
        let v = verify_min_ordering(&c6, &o).unwrap().unwrap();
        let (x, x2, y, y2) = v;
        assert!(c6.is_edge(x, y2) && c6.is_edge(x2, y) && !c6.is_edge(x, y));

        let bad = Ordering { black: vec![0, 3], white: vec![1, 2] };
        assert!(verify_min_ordering(&p4, &bad).is_err());
        let short = Ordering { black: vec![1], white: vec![0, 2] };
        assert!(verify_special(&p4, &short).is_err());
    }

    #[test]
    fn cycle_template_orderings() {
        let o3 = ordering_for_cycle_target(CycleTemplate::Hl(3)).unwrap();
        assert_eq!(o3, Ordering { black: vec![3, 1, 4], white: vec![0, 2, 5] });
        let o5 = ordering_for_cycle_target(CycleTemplate::Hl(5)).unwrap();
        assert_eq!(o5, Ordering { black: vec![5, 3, 1, 6], white: vec![0, 2, 4, 7] });
        for ell in [3, 5, 7, 9, 11] {
            let o = ordering_for_cycle_target(CycleTemplate::Hl(ell)).unwrap();
            assert!(both_ok(&h_ell(ell).unwrap(), &o), "ℓ = {ell}");
        }
        let o1 = ordering_for_cycle_target(CycleTemplate::H1).unwrap();
        assert_eq!(o1, o3);
        assert!(both_ok(&h1(), &o1));
        let o0 = ordering_for_cycle_target(CycleTemplate::H0).unwrap();
        assert!(both_ok(&crate::targets::h0(), &o0));
        assert!(ordering_for_cycle_target(CycleTemplate::Hl(4)).is_err());
    }

    #[test]
    fn permuted_h3_ordering_fails() {
        // s2 moved before t2 among whites
        let o = Ordering { black: vec![3, 1, 4], white: vec![0, 5, 2] };
        let g = h_ell(3).unwrap();
        let min = verify_min_ordering(&g, &o).unwrap();
        let special = verify_special(&g, &o).unwrap();
        assert!(min.is_some() || special.is_some());
        assert_eq!(min, Some((5, 2, 1, 4)));
    }

    #[test]
    fn segmented_examples() {
        let p5 = pf1(5, &[]);
        let f = segmented_form(&p5);
        let o = ordering_for_segmented(&p5, &f).unwrap();
        assert_eq!(o, Ordering { black: vec![1, 3], white: vec![0, 2, 4] });
        assert!(both_ok(&p5.to_graph(), &o));

        let right = pf1(8, &[(1, 4), (1, 6), (1, 8), (3, 6), (3, 8), (5, 8)]);
        let f = segmented_form(&right);
        assert_eq!(f.kind, SegmentedKind::RightSegmented);
        let o = ordering_for_segmented(&right, &f).unwrap();
        // forward sources 0, 2, 4 ascending, then 6 descending
        assert_eq!(o.white, vec![0, 2, 4, 6]);
        assert!(both_ok(&right.to_graph(), &o));

        let p = fig3();
        let f = segmented_form(&p);
        assert_eq!(f.kind, SegmentedKind::LeftRightSegmented);
        let o = ordering_for_segmented(&p, &f).unwrap();
        assert!(both_ok(&p.to_graph(), &o));

        let bad = pf1(6, &[(1, 4), (2, 5)]);
        assert!(ordering_for_segmented(&bad, &segmented_form(&bad)).is_err());
    }

    #[test]
    fn verifier_matches_brute_force() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2000 {
            let nb = rng.gen_range(1..=5);
            let nw = rng.gen_range(1..=5);
            let mut g = SignedGraph::new(nb + nw);
            for b in 0..nb {
                for w in nb..nb + nw {
                    if rng.gen_bool(0.5) {
                        g.add_edge(b, w, if rng.gen_bool(0.3) { Bicoloured } else { Blue }).unwrap();
                    }
                }
            }
            let mut black: Vec<usize> = (0..nb).collect();
            let mut white: Vec<usize> = (nb..nb + nw).collect();
            black.shuffle(&mut rng);
            white.shuffle(&mut rng);
            let o = Ordering { black, white };
            let v = verify_min_ordering(&g, &o).unwrap();
            assert_eq!(v.is_none(), brute_min(&g, &o), "{g:?} {o:?}");
            if let Some((x, x2, y, y2)) = v {
                assert!(g.is_edge(x, y2) && g.is_edge(x2, y) && !g.is_edge(x, y));
            }
        }
    }
}
