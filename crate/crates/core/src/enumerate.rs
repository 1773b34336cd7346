//! Exhaustive generators of separable targets, one representative per
//! reversal (paths) or dihedral (cycles) class.

use std::collections::BTreeSet;

use crate::graph::{Colour, SignedGraph};
use crate::separable::{find_segments, mandated_bicoloured, matching_kinds, PathForm, SegmentedKind};

/// Position pairs at odd distance at least 3: the only bicoloured edges a
/// bipartite path-separable graph can add to its path.
pub fn path_chords(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 3..n).step_by(2) {
            out.push((a, b));
        }
    }
    out
}

/// Every path-separable target on `n` vertices with a blue path
/// `0, 1, ..., n - 1`, up to reversal of the path.
pub fn path_targets(n: usize) -> impl Iterator<Item = PathForm> {
    let chords = path_chords(n);
    assert!(chords.len() < 64, "too many chords to enumerate for n = {n}");
    let rev: Vec<usize> = chords
        .iter()
        .map(|&(a, b)| chords.iter().position(|&c| c == (n - 1 - b, n - 1 - a)).unwrap())
        .collect();
    (0u64..1 << chords.len())
        .filter(move |&mask| permute(mask, &rev) >= mask)
        .map(move |mask| PathForm::from_positions(n, bits(mask).map(|i| chords[i])))
}

/// Non-edges of the `n`-cycle `0, 1, ..., n - 1, 0` at odd distance.
pub fn cycle_chords(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    for a in 0..n {
        for b in (a + 3..n).step_by(2) {
            if !(a == 0 && b == n - 1) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Every cycle-separable target on `n >= 3` vertices, up to rotation,
/// reflection and switching. The cycle is blue, except for a red `01` in
/// the unbalanced representatives.
pub fn cycle_targets(n: usize) -> impl Iterator<Item = SignedGraph> {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let chords = cycle_chords(n);
    assert!(chords.len() < 64, "too many chords to enumerate for n = {n}");
    let index = |a: usize, b: usize| chords.iter().position(|&c| c == (a.min(b), a.max(b))).unwrap();
    let mut symmetries: Vec<Vec<usize>> = Vec::new();
    for r in 0..n {
        for flip in [false, true] {
            let map = |v: usize| if flip { (n + r - v) % n } else { (v + r) % n };
            symmetries.push(chords.iter().map(|&(a, b)| index(map(a), map(b))).collect());
        }
    }
    let count = chords.len();
    [false, true].into_iter().flat_map(move |negative| {
        let chords = chords.clone();
        let symmetries = symmetries.clone();
        (0u64..1 << count)
            .filter(move |&mask| symmetries.iter().all(|s| permute(mask, s) >= mask))
            .map(move |mask| {
                let mut g = SignedGraph::new(n);
                for i in 0..n {
                    let c = if negative && i == 0 { Colour::Red } else { Colour::Blue };
                    g.add_edge(i, (i + 1) % n, c).unwrap();
                }
                for i in bits(mask) {
                    g.add_edge(chords[i].0, chords[i].1, Colour::Bicoloured).unwrap();
                }
                g
            })
    })
}

/// All segmented path forms on `n` positions, both orientations included.
/// Built directly from block-start sets, so it reaches lengths where
/// [`path_targets`] is out of range.
pub fn segmented_paths(n: usize) -> Vec<PathForm> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let last = n.saturating_sub(4);
    let mut starts = Vec::new();
    block_sets(0, last, n >= 4, &mut starts, &mut |starts| {
        let base = PathForm::from_positions(n, starts.iter().map(|&i| (i, i + 3)));
        let segs = find_segments(&base);
        let mut kinds = vec![(SegmentedKind::RightSegmented, None), (SegmentedKind::LeftSegmented, None)];
        kinds.extend((0..segs.len()).map(|k| (SegmentedKind::LeftRightSegmented, Some(k))));
        for (kind, pivot) in kinds {
            let bic = mandated_bicoloured(n, &segs, kind, pivot);
            if seen.contains(&bic) {
                continue;
            }
            let p = PathForm::from_positions(n, bic.iter().copied());
            if !matching_kinds(&p).is_empty() {
                seen.insert(bic);
                out.push(p);
            }
        }
    });
    out
}

// subsets of 0..=last with no two adjacent elements
fn block_sets(from: usize, last: usize, any: bool, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    visit(cur);
    if !any {
        return;
    }
    for i in from..=last {
        cur.push(i);
        block_sets(i + 2, last, i + 2 <= last, cur, visit);
        cur.pop();
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn permute(mask: u64, image: &[usize]) -> u64 {
    bits(mask).fold(0, |acc, i| acc | 1 << image[i])
}
