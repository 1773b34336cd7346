//! Path- and cycle-separable signed graphs: graphs whose unicoloured edges
//! form a spanning path or cycle. For the path case this module computes
//! the block/segment structure and decides whether the bicoloured edges are
//! exactly those a right-, left- or left-right-segmented graph requires.
//!
//! All positions are 0-based indices into the spanning path or cycle.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Sign, SignedGraph, Switching};

/// A graph seen through its spanning unicoloured path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathForm {
    /// `order[k]` is the vertex at path position `k`.
    pub order: Vec<usize>,
    /// Makes every path edge blue.
    pub normalizer: Switching,
    /// Bicoloured edges as position pairs `(a, b)`, `a < b`.
    pub bic: BTreeSet<(usize, usize)>,
}

impl PathForm {
    /// A path form over positions `0..n` with the identity vertex order.
    pub fn from_positions(n: usize, bic: impl IntoIterator<Item = (usize, usize)>) -> PathForm {
        PathForm {
            order: (0..n).collect(),
            normalizer: Switching::identity(),
            bic: bic.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn has_bic(&self, a: usize, b: usize) -> bool {
        self.bic.contains(&(a.min(b), a.max(b)))
    }

    /// The same graph read from the other end.
    pub fn reversed(&self) -> PathForm {
        let n = self.len();
        PathForm {
            order: self.order.iter().rev().copied().collect(),
            normalizer: self.normalizer.clone(),
            bic: self.bic.iter().map(|&(a, b)| (n - 1 - b, n - 1 - a)).collect(),
        }
    }

    /// The blue path with the bicoloured edges, on vertices `0..n` in path order.
    pub fn to_graph(&self) -> SignedGraph {
        use crate::graph::Colour;
        let n = self.len();
        let path = (1..n).map(|i| (i - 1, i, Colour::Blue));
        let chords = self.bic.iter().map(|&(a, b)| (a, b, Colour::Bicoloured));
        SignedGraph::from_edges(n, path.chain(chords)).expect("path form describes a simple graph")
    }
}

/// A graph seen through its spanning unicoloured cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForm {
    pub order: Vec<usize>,
    pub cycle_sign: Sign,
    pub bic: BTreeSet<(usize, usize)>,
}

impl CycleForm {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Leaning {
    pub left: bool,
    pub right: bool,
}

/// A maximal run of blocks starting at `start`, `start + 2`, ...,
/// `start + 2(blocks - 1)`; it spans positions `start..=start + 2 blocks + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub start: usize,
    pub blocks: usize,
    pub leaning: Leaning,
}

impl Segment {
    pub fn end(&self) -> usize {
        self.start + 2 * self.blocks + 1
    }

    /// Block starts.
    pub fn forward_sources(&self) -> impl Iterator<Item = usize> + Clone {
        let start = self.start;
        (0..self.blocks).map(move |e| start + 2 * e)
    }

    /// Block ends.
    pub fn backward_sources(&self) -> impl Iterator<Item = usize> + Clone {
        let start = self.start;
        (0..self.blocks).map(move |e| start + 2 * e + 3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentedKind {
    RightSegmented,
    LeftSegmented,
    LeftRightSegmented,
    TrivialPath,
    NotSegmented,
}

impl fmt::Display for SegmentedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentedForm {
    pub kind: SegmentedKind,
    /// The unique left- and right-leaning segment of a left-right-segmented graph.
    pub pivot: Option<Segment>,
    pub segments: Vec<Segment>,
}

/// Spanning unicoloured path of `g`, oriented from its smaller endpoint.
pub fn path_form(g: &SignedGraph) -> Option<PathForm> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let uni: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbours(v).iter().copied().filter(|&w| g.is_unicoloured_edge(v, w)).collect())
        .collect();
    if uni.iter().any(|nb| nb.len() > 2) || uni.iter().map(Vec::len).sum::<usize>() != 2 * (n - 1) {
        return None;
    }
    let start = (0..n).find(|&v| uni[v].len() <= 1)?;
    let mut order = vec![start];
    let mut bits = vec![false; n];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = uni[cur].iter().find(|&&w| w != prev) {
        if order.len() == n {
            return None;
        }
        bits[next] = bits[cur] ^ g.colour(cur, next).unwrap().sign().unwrap().bit();
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return None;
    }
    let pos = positions(&order);
    let bic = g.bicoloured_edges().map(|(u, v)| ordered(pos[u], pos[v])).collect();
    Some(PathForm { order, normalizer: Switching::from_bits(&bits), bic })
}

/// Spanning unicoloured cycle of `g`, starting at vertex 0 towards its
/// smaller cycle neighbour.
pub fn cycle_form(g: &SignedGraph) -> Option<CycleForm> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let uni: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbours(v).iter().copied().filter(|&w| g.is_unicoloured_edge(v, w)).collect())
        .collect();
    if uni.iter().any(|nb| nb.len() != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut sign = Sign::Pos;
    let mut prev = uni[0][1];
    let mut cur = 0;
    loop {
        let next = if uni[cur][0] != prev { uni[cur][0] } else { uni[cur][1] };
        sign = sign.times(g.colour(cur, next).unwrap().sign().unwrap());
        if next == 0 {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return None;
    }
    let pos = positions(&order);
    let bic = g.bicoloured_edges().map(|(u, v)| ordered(pos[u], pos[v])).collect();
    Some(CycleForm { order, cycle_sign: sign, bic })
}

fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    pos
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Maximal segments in increasing start order, with leaning labels.
///
/// Runs of blocks whose span lies properly inside another run's span are
/// not maximal and are dropped; that only happens when blocks start at
/// adjacent positions, i.e. around an alternating 4-cycle.
pub fn find_segments(p: &PathForm) -> Vec<Segment> {
    let n = p.len();
    let starts: Vec<usize> = (0..n.saturating_sub(3)).filter(|&i| p.has_bic(i, i + 3)).collect();
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for parity in 0..2 {
        let mut run: Option<(usize, usize)> = None;
        for &i in starts.iter().filter(|&&i| i % 2 == parity) {
            run = match run {
                Some((s, last)) if last + 2 == i => Some((s, i)),
                Some(r) => {
                    runs.push(r);
                    Some((i, i))
                }
                None => Some((i, i)),
            };
        }
        runs.extend(run);
    }
    let spans: Vec<(usize, usize)> = runs.iter().map(|&(s, last)| (s, last + 3)).collect();
    let mut segments: Vec<Segment> = runs
        .iter()
        .zip(&spans)
        .filter(|(_, &(a, b))| !spans.iter().any(|&(c, d)| c <= a && b <= d && (c, d) != (a, b)))
        .map(|(&(s, last), _)| Segment { start: s, blocks: (last - s) / 2 + 1, leaning: Leaning::default() })
        .collect();
    segments.sort_by_key(|s| (s.start, s.blocks));
    for s in &mut segments {
        s.leaning = segment_leaning(p, s);
    }
    segments
}

/// Right-leaning: every forward source has every forward edge of odd length
/// at least 3; left-leaning: the mirror statement for backward sources.
pub fn segment_leaning(p: &PathForm, s: &Segment) -> Leaning {
    let n = p.len();
    let right = s
        .forward_sources()
        .all(|f| (f + 3..n).step_by(2).all(|t| p.has_bic(f, t)));
    let left = s
        .backward_sources()
        .all(|b| (0..b.saturating_sub(2)).rev().step_by(2).all(|t| p.has_bic(t, b)));
    Leaning { left, right }
}

fn forward_closure(n: usize, segs: &[Segment], out: &mut BTreeSet<(usize, usize)>) {
    for s in segs {
        for f in s.forward_sources() {
            out.extend((f + 3..n).step_by(2).map(|t| (f, t)));
        }
    }
}

fn backward_closure(segs: &[Segment], out: &mut BTreeSet<(usize, usize)>) {
    for s in segs {
        for b in s.backward_sources() {
            out.extend((0..b.saturating_sub(2)).rev().step_by(2).map(|t| (t, b)));
        }
    }
}

/// Bicoloured edges a graph of the given kind must have, and may only have,
/// given its segments. For [`SegmentedKind::LeftRightSegmented`], `pivot` is
/// the index of the both-leaning segment in `segments`.
pub fn mandated_bicoloured(
    n: usize,
    segments: &[Segment],
    kind: SegmentedKind,
    pivot: Option<usize>,
) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    match kind {
        SegmentedKind::RightSegmented => forward_closure(n, segments, &mut out),
        SegmentedKind::LeftSegmented => backward_closure(segments, &mut out),
        SegmentedKind::LeftRightSegmented => {
            let k = pivot.expect("left-right-segmented needs a pivot");
            backward_closure(&segments[..=k], &mut out);
            forward_closure(n, &segments[k..], &mut out);
            let (i, end) = (segments[k].start, segments[k].end());
            // v_{i-e} v_{i+2j+o}: e even >= 2, o odd >= 3
            for left in (0..i.saturating_sub(1)).rev().step_by(2) {
                for right in (end + 2..n).step_by(2) {
                    out.insert((left, right));
                }
            }
        }
        SegmentedKind::TrivialPath | SegmentedKind::NotSegmented => {}
    }
    out
}

/// The pivot index if `p` is left-right-segmented.
fn left_right_pivot(p: &PathForm, segs: &[Segment]) -> Option<usize> {
    let mut both = segs.iter().enumerate().filter(|(_, s)| s.leaning.left && s.leaning.right);
    let (k, _) = both.next()?;
    if both.next().is_some() {
        return None;
    }
    let shape_ok = segs[..k].iter().all(|s| s.leaning.left) && segs[k + 1..].iter().all(|s| s.leaning.right);
    (shape_ok && mandated_bicoloured(p.len(), segs, SegmentedKind::LeftRightSegmented, Some(k)) == p.bic)
        .then_some(k)
}

/// Every segmented kind `p` satisfies, with the pivot for the left-right
/// kind. Several kinds can hold at once, e.g. for a single segment whose
/// forward and backward closures coincide.
pub fn matching_kinds(p: &PathForm) -> Vec<(SegmentedKind, Option<Segment>)> {
    if p.bic.is_empty() {
        return vec![(SegmentedKind::TrivialPath, None)];
    }
    // blocks at adjacent starts close an alternating 4-cycle; the segment
    // vocabulary only applies once those are excluded
    let n = p.len();
    if (0..n.saturating_sub(4)).any(|i| p.has_bic(i, i + 3) && p.has_bic(i + 1, i + 4)) {
        return Vec::new();
    }
    let segs = find_segments(p);
    if segs.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if segs.iter().all(|s| s.leaning.right)
        && mandated_bicoloured(n, &segs, SegmentedKind::RightSegmented, None) == p.bic
    {
        out.push((SegmentedKind::RightSegmented, None));
    }
    if segs.iter().all(|s| s.leaning.left) && mandated_bicoloured(n, &segs, SegmentedKind::LeftSegmented, None) == p.bic
    {
        out.push((SegmentedKind::LeftSegmented, None));
    }
    if let Some(k) = left_right_pivot(p, &segs) {
        out.push((SegmentedKind::LeftRightSegmented, Some(segs[k])));
    }
    out
}

/// Decides which segmented shape, if any, `p` has. When several hold the
/// first of right, left, left-right is reported.
pub fn segmented_form(p: &PathForm) -> SegmentedForm {
    let segments = if p.bic.is_empty() { Vec::new() } else { find_segments(p) };
    match matching_kinds(p).into_iter().next() {
        Some((kind, pivot)) => SegmentedForm { kind, pivot, segments },
        None => SegmentedForm { kind: SegmentedKind::NotSegmented, pivot: None, segments },
    }
}
