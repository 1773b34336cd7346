mod common;

use common::{check_reduction, quad_csps};
use rayon::prelude::*;

#[test]
fn enumeration_counts() {
    // one variable: quadruples are all (r0,r0,r0,r0), so 1..=3 copies
    assert_eq!(quad_csps(1, 3).len(), 3);
    // two variables, one quadruple: 14 non-constant tuples up to swapping
    assert_eq!(quad_csps(2, 1).len(), 1 + 7);
}

#[test]
fn small_reductions_with_pinning() {
    let csps = quad_csps(3, 2);
    for ell in [5, 7] {
        csps.par_iter().try_for_each(|c| check_reduction(c, ell, true)).unwrap();
    }
}

