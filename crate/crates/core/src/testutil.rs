use proptest::prelude::*;

use crate::family::{Family, Interval};

pub(crate) fn fam(n: usize, pairs: &[(usize, usize)]) -> Family {
    Family::from_pairs(n, pairs.iter().copied()).unwrap()
}

pub(crate) fn iv(lo: usize, hi: usize) -> Interval {
    Interval::new(lo, hi).unwrap()
}

/// The six-interval family on nine points used throughout the tests.
pub(crate) fn ten() -> Family {
    fam(9, &[(0, 8), (0, 7), (1, 6), (1, 5), (3, 9), (2, 9)])
}

pub(crate) fn arb_family(max_n: usize, max_m: usize) -> impl Strategy<Value = Family> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..=n, 0..=n), 0..=max_m).prop_map(move |pairs| {
            let ivs = pairs
                .into_iter()
                .filter_map(|(a, b)| Interval::try_new(a.min(b), a.max(b)));
            Family::new(n, ivs).unwrap()
        })
    })
}

pub(crate) fn arb_window(n: usize) -> impl Strategy<Value = Interval> {
    (0..n).prop_flat_map(move |lo| (lo + 1..=n).prop_map(move |hi| iv(lo, hi)))
}
