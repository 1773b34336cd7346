//! The dichotomy for separable targets: segmented paths and the three
//! cycle templates are polynomial, everything else is NP-complete.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{unsupported, Result};
use crate::graph::{bipartition, Sign, SignedGraph};
use crate::ordering::{ordering_for_cycle_target, ordering_for_segmented, CycleTemplate, Ordering};
use crate::separable::{cycle_form, path_form, segmented_form, CycleForm, SegmentedKind};
use crate::targets::{s1, s2};
use crate::witness::{find_4cycle_pair, find_alternating_4cycle, find_chain, find_invertible_pair, Pattern, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Complexity {
    #[serde(rename = "P")]
    Polynomial,
    #[serde(rename = "NPC")]
    NpComplete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    Segmented(SegmentedKind),
    MatchesH0,
    MatchesH1,
    MatchesHl(usize),
    NotSegmented,
    NoTemplateMatch,
    NonBipartite,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Segmented(k) => write!(f, "Segmented({k})"),
            Reason::MatchesHl(ell) => write!(f, "MatchesHl({ell})"),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

impl Serialize for Reason {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub complexity: Complexity,
    pub reason: Reason,
    pub witness: Option<Witness>,
    pub ordering: Option<Ordering>,
}

impl Verdict {
    fn polynomial(reason: Reason, ordering: Ordering) -> Verdict {
        Verdict { complexity: Complexity::Polynomial, reason, witness: None, ordering: Some(ordering) }
    }

    fn np_complete(reason: Reason, g: &SignedGraph) -> Verdict {
        Verdict { complexity: Complexity::NpComplete, reason, witness: best_witness(g), ordering: None }
    }
}

/// A chain, else an invertible pair, else a pattern match.
pub fn best_witness(g: &SignedGraph) -> Option<Witness> {
    if let Some(c) = find_chain(g) {
        return Some(Witness::Chain(c));
    }
    if let Some(p) = find_invertible_pair(g) {
        return Some(Witness::InvertiblePair(p));
    }
    find_alternating_4cycle(g)
        .map(Pattern::AlternatingFourCycle)
        .or_else(|| find_4cycle_pair(g))
        .map(Witness::from)
}

pub fn classify_path(g: &SignedGraph) -> Result<Verdict> {
    let p = path_form(g).ok_or_else(|| unsupported("unicoloured edges do not form a spanning path"))?;
    let f = segmented_form(&p);
    if f.kind == SegmentedKind::NotSegmented {
        return Ok(Verdict::np_complete(Reason::NotSegmented, g));
    }
    let o = ordering_for_segmented(&p, &f)?;
    Ok(Verdict::polynomial(Reason::Segmented(f.kind), o))
}

pub fn classify_cycle(g: &SignedGraph) -> Result<Verdict> {
    let c = cycle_form(g).ok_or_else(|| unsupported("unicoloured edges do not form a spanning cycle"))?;
    match match_template(&c) {
        Some((t, positions)) => {
            let canon = ordering_for_cycle_target(t)?;
            let ell = match t {
                CycleTemplate::Hl(ell) => ell,
                _ => 3,
            };
            // canonical label -> cycle position -> vertex of g
            let vertex_of = |label: usize| {
                let q = match t {
                    CycleTemplate::H0 => label,
                    _ if label == s1(ell) => ell + 2,
                    _ if label == s2(ell) => ell + 1,
                    _ => label,
                };
                c.order[positions[q]]
            };
            let o = Ordering {
                black: canon.black.iter().map(|&l| vertex_of(l)).collect(),
                white: canon.white.iter().map(|&l| vertex_of(l)).collect(),
            };
            let reason = match t {
                CycleTemplate::H0 => Reason::MatchesH0,
                CycleTemplate::H1 => Reason::MatchesH1,
                CycleTemplate::Hl(ell) => Reason::MatchesHl(ell),
            };
            Ok(Verdict::polynomial(reason, o))
        }
        None => Ok(Verdict::np_complete(Reason::NoTemplateMatch, g)),
    }
}

/// Rejects non-bipartite targets, then dispatches on separability.
pub fn classify(g: &SignedGraph) -> Result<Verdict> {
    if bipartition(g).is_none() {
        return Ok(Verdict::np_complete(Reason::NonBipartite, g));
    }
    if path_form(g).is_some() {
        return classify_path(g);
    }
    if cycle_form(g).is_some() {
        return classify_cycle(g);
    }
    Err(unsupported("target is not separable: its unicoloured edges form no spanning path or cycle"))
}

/// Bicoloured chords of Ĥ_ℓ as positions on the cycle `t0 .. tℓ s2 s1`.
fn template_chords(ell: usize) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in (0..=ell).step_by(2) {
        for j in (i + 3..=ell).step_by(2) {
            out.insert((i, j));
        }
    }
    out
}

/// The template and the map from template cycle positions to positions
/// of `c`, trying all rotations and reflections.
pub fn match_template(c: &CycleForm) -> Option<(CycleTemplate, Vec<usize>)> {
    let n = c.len();
    let (t, chords) = match (n, c.cycle_sign) {
        (4, Sign::Pos) => (CycleTemplate::H0, BTreeSet::new()),
        (6, Sign::Neg) => (CycleTemplate::H1, template_chords(3)),
        (n, Sign::Pos) if n >= 6 && n % 2 == 0 => (CycleTemplate::Hl(n - 3), template_chords(n - 3)),
        _ => return None,
    };
    if chords.len() != c.bic.len() {
        return None;
    }
    for r in 0..n {
        for flip in [false, true] {
            let pos: Vec<usize> = (0..n).map(|q| if flip { (n + r - q) % n } else { (q + r) % n }).collect();
            let image: BTreeSet<_> = chords.iter().map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b]))).collect();
            if image == c.bic {
                return Some((t, pos));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Colour::*;
    use crate::graph::{apply_switching, switching_equivalent, Switching};
    use crate::ordering::{verify_min_ordering, verify_special};
    use crate::separable::tests::{fig3, pf1};
    use crate::targets::{h0, h1, h_ell};

    fn cycle(n: usize, red: usize) -> SignedGraph {
        SignedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, if i < red { Red } else { Blue }))).unwrap()
    }

    #[test]
    fn path_examples() {
        let v = classify_path(&pf1(6, &[]).to_graph()).unwrap();
        assert_eq!(v.reason, Reason::Segmented(SegmentedKind::TrivialPath));
        let v = classify_path(&fig3().to_graph()).unwrap();
        assert_eq!(v.reason, Reason::Segmented(SegmentedKind::LeftRightSegmented));
        assert_eq!(v.complexity, Complexity::Polynomial);
        let g = pf1(6, &[(1, 4), (2, 5)]).to_graph();
        let v = classify_path(&g).unwrap();
        assert_eq!(v.complexity, Complexity::NpComplete);
        assert!(matches!(v.witness, Some(Witness::Chain(_))));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(classify_cycle(&h0()).unwrap().reason, Reason::MatchesH0);
        assert_eq!(classify_cycle(&cycle(4, 1)).unwrap().complexity, Complexity::NpComplete);
        let mut c8 = cycle(8, 1);
        for (a, b) in template_chords(5) {
            c8.add_edge(a, b, Bicoloured).unwrap();
        }
        // positions 0..5 are t0..t5 but the sign is negative
        assert_eq!(classify_cycle(&c8).unwrap().complexity, Complexity::NpComplete);
        assert_eq!(classify(&h1()).unwrap().reason, Reason::MatchesH1);
    }

    #[test]
    fn dispatcher_examples() {
        let v = classify(&cycle(3, 0)).unwrap();
        assert_eq!(v.reason, Reason::NonBipartite);
        let v = classify(&h_ell(5).unwrap()).unwrap();
        assert_eq!(v.reason, Reason::MatchesHl(5));
        let star = SignedGraph::from_edges(4, [(0, 1, Blue), (0, 2, Blue), (0, 3, Blue)]).unwrap();
        assert!(classify(&star).is_err());
    }

    #[test]
    fn templates_survive_relabelling_and_switching() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let mut cases = vec![(h0(), Reason::MatchesH0), (h1(), Reason::MatchesH1)];
        for ell in [3, 5, 7, 9, 11] {
            cases.push((h_ell(ell).unwrap(), Reason::MatchesHl(ell)));
        }
        for (h, reason) in cases {
            for _ in 0..20 {
                let n = h.vertex_count();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let s = Switching::from_bits(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
                let g = apply_switching(&h.relabel(&perm).unwrap(), &s).unwrap();
                let v = classify(&g).unwrap();
                assert_eq!(v.reason, reason);
                let o = v.ordering.unwrap();
                assert_eq!(verify_min_ordering(&g, &o).unwrap(), None);
                assert_eq!(verify_special(&g, &o).unwrap(), None);
                assert!(switching_equivalent(&g, &h).is_some());
            }
        }
    }

    #[test]
    fn verdict_json() {
        let v = classify(&h_ell(5).unwrap()).unwrap();
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["complexity"], "P");
        assert_eq!(j["reason"], "MatchesHl(5)");
        assert!(j["ordering"]["black"].is_array());
        let j = serde_json::to_value(classify(&cycle(3, 0)).unwrap()).unwrap();
        assert_eq!(j["complexity"], "NPC");
    }
}
