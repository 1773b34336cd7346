use sepsign_core::enumerate::{path_targets, segmented_paths};
use sepsign_core::ordering::{ordering_for_segmented, verify_min_ordering, verify_special};
use sepsign_core::separable::{
    find_segments, mandated_bicoloured, matching_kinds, segmented_form, PathForm, SegmentedKind,
};
use sepsign_core::witness::{find_chain, verify_chain};

#[test]
fn orderings_verify_on_all_segmented_paths() {
    for n in 2..=14 {
        for p in segmented_paths(n) {
            let f = segmented_form(&p);
            let o = ordering_for_segmented(&p, &f).unwrap();
            let g = p.to_graph();
            assert_eq!(verify_min_ordering(&g, &o).unwrap(), None, "{:?} {:?}", p.bic, f.kind);
            assert_eq!(verify_special(&g, &o).unwrap(), None, "{:?} {:?}", p.bic, f.kind);
        }
    }
}

// every orientation-dependent kind swaps under reversal
#[test]
fn kinds_mirror_under_reversal() {
    let mirror = |k: SegmentedKind| match k {
        SegmentedKind::RightSegmented => SegmentedKind::LeftSegmented,
        SegmentedKind::LeftSegmented => SegmentedKind::RightSegmented,
        other => other,
    };
    for n in 2..=10 {
        for p in path_targets(n) {
            let mut a: Vec<_> = matching_kinds(&p).into_iter().map(|(k, _)| mirror(k)).collect();
            let mut b: Vec<_> = matching_kinds(&p.reversed()).into_iter().map(|(k, _)| k).collect();
            a.sort_by_key(|k| *k as u8);
            b.sort_by_key(|k| *k as u8);
            assert_eq!(a, b, "{:?}", p.bic);
        }
    }
}

#[test]
fn mandated_sets_round_trip() {
    for n in 4..=14 {
        for p in segmented_paths(n) {
            let f = segmented_form(&p);
            let segs = find_segments(&p);
            let pivot = f.pivot.map(|s| segs.iter().position(|t| *t == s).unwrap());
            let kind = f.kind;
            if kind == SegmentedKind::TrivialPath {
                continue;
            }
            assert_eq!(mandated_bicoloured(n, &segs, kind, pivot), p.bic);
            // blocks land in exactly one segment
            for i in (0..n - 3).filter(|&i| p.has_bic(i, i + 3)) {
                let owners = segs.iter().filter(|s| s.forward_sources().any(|f| f == i)).count();
                assert_eq!(owners, 1, "{:?}", p.bic);
            }
        }
    }
}

fn check_witnesses(n: usize) {
    for p in path_targets(n) {
        if segmented_form(&p).kind != SegmentedKind::NotSegmented {
            continue;
        }
        let g = p.to_graph();
        let c = find_chain(&g).unwrap_or_else(|| panic!("no chain for {:?}", p.bic));
        assert!(verify_chain(&g, &c));
    }
}

#[test]
fn non_segmented_paths_have_chains() {
    for n in 2..=11 {
        check_witnesses(n);
    }
}

#[test]
#[ignore = "about 17 million targets, a minute or two; run with --ignored"]
fn non_segmented_paths_have_chains_at_12() {
    check_witnesses(12);
}

#[test]
fn same_parity_chord_alone_is_not_segmented() {
    // a single block plus a chord from a same-parity start
    let p = PathForm::from_positions(8, [(0, 3), (2, 7)]);
    assert_eq!(segmented_form(&p).kind, SegmentedKind::NotSegmented);
    assert!(find_chain(&p.to_graph()).is_some());
}
