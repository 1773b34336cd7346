//! The canonical cycle-separable targets with polynomial list-homomorphism
//! problems, plus the unbalanced variant used by the hardness reduction.
//!
//! Vertex labels for the ℓ-family: `t_i = i` for `0 <= i <= ℓ` (so `b = 0`
//! and `w = ℓ`), `s_1 = ℓ + 1`, `s_2 = ℓ + 2`. The six-vertex target with
//! the unbalanced cycle uses the same scheme with ℓ = 3.

use crate::error::{invalid, Result};
use crate::graph::{Colour, SignedGraph};

pub const H1_B: usize = 0;
pub const H1_T1: usize = 1;
pub const H1_T2: usize = 2;
pub const H1_W: usize = 3;
pub const H1_S1: usize = 4;
pub const H1_S2: usize = 5;

/// The blue 4-cycle `0-1-2-3-0`.
pub fn h0() -> SignedGraph {
    SignedGraph::from_edges(4, (0..4).map(|i| (i, (i + 1) % 4, Colour::Blue))).unwrap()
}

/// Blue path `b, t1, t2, w`, blue-red-blue path `b, s1, s2, w`, bicoloured `bw`.
pub fn h1() -> SignedGraph {
    let mut g = ell_skeleton(3, [Colour::Blue, Colour::Red, Colour::Blue]);
    g.add_edge(H1_B, H1_W, Colour::Bicoloured).unwrap();
    g
}

/// Blue path `b = t0, ..., tℓ = w`, blue path `b, s1, s2, w` and every
/// bicoloured `t_i t_j` with `i` even, `j` odd, `j > i + 1`.
pub fn h_ell(ell: usize) -> Result<SignedGraph> {
    check_ell(ell, 3)?;
    let mut g = ell_skeleton(ell, [Colour::Blue; 3]);
    add_template_chords(&mut g, ell);
    Ok(g)
}

/// `h_ell` with the `s`-path red: the unbalanced target of the reduction.
pub fn h_ell_unbalanced(ell: usize) -> Result<SignedGraph> {
    check_ell(ell, 3)?;
    let mut g = ell_skeleton(ell, [Colour::Red; 3]);
    add_template_chords(&mut g, ell);
    Ok(g)
}

pub fn s1(ell: usize) -> usize {
    ell + 1
}

pub fn s2(ell: usize) -> usize {
    ell + 2
}

pub(crate) fn check_ell(ell: usize, min: usize) -> Result<()> {
    if ell.is_multiple_of(2) || ell < min {
        return Err(invalid(format!("ℓ must be odd and at least {min}, got {ell}")));
    }
    Ok(())
}

fn ell_skeleton(ell: usize, s_path: [Colour; 3]) -> SignedGraph {
    let mut g = SignedGraph::new(ell + 3);
    for i in 0..ell {
        g.add_edge(i, i + 1, Colour::Blue).unwrap();
    }
    g.add_edge(0, s1(ell), s_path[0]).unwrap();
    g.add_edge(s1(ell), s2(ell), s_path[1]).unwrap();
    g.add_edge(s2(ell), ell, s_path[2]).unwrap();
    g
}

fn add_template_chords(g: &mut SignedGraph, ell: usize) {
    for i in (0..=ell).step_by(2) {
        for j in (i + 3..=ell).step_by(2) {
            g.add_edge(i, j, Colour::Bicoloured).unwrap();
        }
    }
}
