//! Half-open integer intervals, multisets of them, and per-point coverage.
//!
//! The ground set is `[0, n)`. Interval endpoints range over `0..=n`, so an
//! interval `[lo, hi)` holds the points `lo, lo + 1, ..., hi - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A nonempty half-open interval `[lo, hi)` of integer points.
///
/// Ordering is lexicographic on `(lo, hi)`. Families are stored in a
/// different order, see [`Interval::canonical_cmp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: usize,
    hi: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo >= hi {
            return Err(Error::EmptyInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Returns `None` when `lo >= hi`.
    pub fn try_new(lo: usize, hi: usize) -> Option<Self> {
        (lo < hi).then_some(Interval { lo, hi })
    }

    #[inline]
    pub fn lo(&self) -> usize {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> usize {
        self.hi
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.hi - self.lo
    }

    #[inline]
    pub fn contains_point(&self, x: usize) -> bool {
        self.lo <= x && x < self.hi
    }

    /// `true` when every point of `other` lies in `self`.
    #[inline]
    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::try_new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    /// Reflection of `[a, b)` on `[0, n)`, which is `[n - b, n - a)`.
    pub fn mirror(&self, n: usize) -> Interval {
        debug_assert!(self.hi <= n);
        Interval {
            lo: n - self.hi,
            hi: n - self.lo,
        }
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        self.lo..self.hi
    }

    /// Right endpoint first, then left endpoint. This is the storage and
    /// printing order of every [`Family`].
    pub fn canonical_cmp(&self, other: &Interval) -> Ordering {
        (self.hi, self.lo).cmp(&(other.hi, other.lo))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{})", self.lo, self.hi)
    }
}

/// Sorts a multiset of intervals into canonical order.
pub fn sort_canonical(intervals: &mut [Interval]) {
    intervals.sort_unstable_by(Interval::canonical_cmp);
}

/// A multiset of intervals on the ground set `[0, n)`.
///
/// Members are kept in canonical order, so two families compare equal
/// exactly when they agree as multisets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: usize,
    members: Vec<Interval>,
}

impl Family {
    pub fn empty(n: usize) -> Self {
        Family {
            n,
            members: Vec::new(),
        }
    }

    pub fn new<I>(n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Interval>,
    {
        let members: Vec<Interval> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|iv| iv.hi > n) {
            return Err(Error::OutOfRange {
                lo: bad.lo,
                hi: bad.hi,
                n,
            });
        }
        Ok(Self::from_vec_unchecked(n, members))
    }

    /// Builds a family from raw `(lo, hi)` pairs, validating each one.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let members = pairs
            .into_iter()
            .map(|(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, members)
    }

    pub(crate) fn from_vec_unchecked(n: usize, mut members: Vec<Interval>) -> Self {
        debug_assert!(members.iter().all(|iv| iv.hi <= n));
        sort_canonical(&mut members);
        Family { n, members }
    }

    /// Size of the ground set.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of members, counted with multiplicity.
    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical `(hi, lo)` order.
    #[inline]
    pub fn members(&self) -> &[Interval] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.members.iter()
    }

    pub fn into_members(self) -> Vec<Interval> {
        self.members
    }

    /// The whole ground set `[0, n)`, or `None` when `n == 0`.
    pub fn span(&self) -> Option<Interval> {
        Interval::try_new(0, self.n)
    }

    pub fn multiplicity(&self, iv: &Interval) -> usize {
        self.members.iter().filter(|m| *m == iv).count()
    }

    pub fn insert(&mut self, iv: Interval) -> Result<()> {
        if iv.hi > self.n {
            return Err(Error::OutOfRange {
                lo: iv.lo,
                hi: iv.hi,
                n: self.n,
            });
        }
        let at = self
            .members
            .partition_point(|m| m.canonical_cmp(&iv) != Ordering::Greater);
        self.members.insert(at, iv);
        Ok(())
    }

    /// Removes one occurrence of `iv`. Returns `false` if it was absent.
    pub fn remove_one(&mut self, iv: &Interval) -> bool {
        match self.members.binary_search_by(|m| m.canonical_cmp(iv)) {
            Ok(at) => {
                self.members.remove(at);
                true
            }
            Err(_) => false,
        }
    }

    /// `true` when every member of `self` occurs in `other` at least as
    /// many times.
    pub fn is_submultiset_of(&self, other: &Family) -> bool {
        let mut rest = other.members.iter();
        'outer: for iv in &self.members {
            for cand in rest.by_ref() {
                match cand.canonical_cmp(iv) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Per-point incidence counts `N_x F`.
    pub fn coverage(&self) -> CoverageProfile {
        CoverageProfile::from_intervals(self.n, &self.members)
    }

    /// The members contained in `s`. The ground set is unchanged.
    pub fn restrict(&self, s: &Interval) -> Family {
        Family {
            n: self.n,
            members: self
                .members
                .iter()
                .filter(|m| s.contains(m))
                .copied()
                .collect(),
        }
    }

    /// Maximal runs of covered points, as disjoint intervals in ascending
    /// order.
    pub fn union_support(&self) -> Vec<Interval> {
        let cov = self.coverage();
        let mut runs = Vec::new();
        let mut start = None;
        for (x, &c) in cov.counts().iter().enumerate() {
            match (c > 0, start) {
                (true, None) => start = Some(x),
                (false, Some(lo)) => {
                    runs.push(Interval { lo, hi: x });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(lo) = start {
            runs.push(Interval { lo, hi: self.n });
        }
        runs
    }

    /// Left-to-right reflection: `[a, b)` becomes `[n - b, n - a)`.
    pub fn mirror(&self) -> Family {
        Family::from_vec_unchecked(
            self.n,
            self.members.iter().map(|iv| iv.mirror(self.n)).collect(),
        )
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Incidence counts: `counts()[x]` is the number of intervals containing `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageProfile {
    counts: Vec<usize>,
}

impl CoverageProfile {
    /// Coverage of an arbitrary multiset of intervals on `[0, n)`.
    pub fn from_intervals<'a, I>(n: usize, intervals: I) -> Self
    where
        I: IntoIterator<Item = &'a Interval>,
    {
        let mut diff = vec![0isize; n + 1];
        for iv in intervals {
            diff[iv.lo] += 1;
            diff[iv.hi] -= 1;
        }
        let mut running = 0isize;
        let counts = diff[..n]
            .iter()
            .map(|d| {
                running += d;
                running as usize
            })
            .collect();
        CoverageProfile { counts }
    }

    #[inline]
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    #[inline]
    pub fn get(&self, x: usize) -> usize {
        self.counts[x]
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{arb_family, arb_window, fam, ten};
    use proptest::prelude::*;

    #[test]
    fn rejects_empty_and_out_of_range() {
        assert_eq!(
            Interval::new(3, 3),
            Err(Error::EmptyInterval { lo: 3, hi: 3 })
        );
        assert!(Interval::new(4, 2).is_err());
        assert_eq!(
            Family::from_pairs(5, [(2, 6)]),
            Err(Error::OutOfRange { lo: 2, hi: 6, n: 5 })
        );
    }

    #[test]
    fn coverage_examples() {
        assert_eq!(Family::empty(5).coverage().counts(), &[0, 0, 0, 0, 0]);
        assert_eq!(ten().coverage().counts(), &[2, 4, 5, 6, 6, 5, 4, 3, 2]);
        assert_eq!(fam(4, &[(1, 3), (1, 3)]).coverage().counts(), &[0, 2, 2, 0]);
    }

    #[test]
    fn restrict_examples() {
        let f = ten();
        let s = Interval::new(1, 6).unwrap();
        assert_eq!(f.restrict(&s), fam(9, &[(1, 6), (1, 5)]));
        assert_eq!(f.restrict(&f.span().unwrap()), f);
    }

    #[test]
    fn union_support_examples() {
        assert_eq!(ten().union_support(), vec![Interval::new(0, 9).unwrap()]);
        assert_eq!(
            fam(6, &[(0, 2), (4, 6)]).union_support(),
            vec![Interval::new(0, 2).unwrap(), Interval::new(4, 6).unwrap()]
        );
        assert!(Family::empty(3).union_support().is_empty());
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(
            Interval::new(0, 8).unwrap().mirror(9),
            Interval::new(1, 9).unwrap()
        );
        assert_eq!(
            Interval::new(3, 9).unwrap().mirror(9),
            Interval::new(0, 6).unwrap()
        );
        assert_eq!(
            ten().mirror(),
            fam(9, &[(1, 9), (2, 9), (3, 8), (4, 8), (0, 6), (0, 7)])
        );
    }

    #[test]
    fn multiset_ops() {
        let mut f = fam(4, &[(1, 3), (1, 3), (0, 1)]);
        let iv = Interval::new(1, 3).unwrap();
        assert_eq!(f.multiplicity(&iv), 2);
        assert!(f.remove_one(&iv));
        assert_eq!(f.multiplicity(&iv), 1);
        assert!(!f.remove_one(&Interval::new(2, 4).unwrap()));
        f.insert(Interval::new(2, 4).unwrap()).unwrap();
        assert_eq!(f, fam(4, &[(0, 1), (1, 3), (2, 4)]));
        assert!(fam(4, &[(1, 3)]).is_submultiset_of(&f));
        assert!(!fam(4, &[(1, 3), (1, 3)]).is_submultiset_of(&f));
    }

    proptest! {
        #[test]
        fn coverage_matches_direct_count(f in arb_family(12, 10)) {
            let cov = f.coverage();
            for x in 0..f.n() {
                let direct = f.iter().filter(|iv| iv.contains_point(x)).count();
                prop_assert_eq!(cov.get(x), direct);
            }
            prop_assert_eq!(cov.total(), f.iter().map(Interval::len).sum::<usize>());
        }

        #[test]
        fn mirror_reverses_coverage(f in arb_family(12, 10)) {
            let n = f.n();
            let a = f.coverage();
            let b = f.mirror().coverage();
            for x in 0..n {
                prop_assert_eq!(b.get(x), a.get(n - 1 - x));
            }
            prop_assert_eq!(f.mirror().mirror(), f);
        }

        #[test]
        fn restriction_composes(
            (f, s, t) in arb_family(10, 8)
                .prop_flat_map(|f| { let n = f.n(); (Just(f), arb_window(n), arb_window(n)) })
        ) {
            let r = f.restrict(&s);
            prop_assert!(r.len() <= f.len());
            prop_assert!(r.iter().all(|iv| s.contains(iv)));
            let twice = r.restrict(&t);
            match s.intersect(&t) {
                Some(st) => prop_assert_eq!(twice, f.restrict(&st)),
                None => prop_assert!(twice.is_empty()),
            }
        }

        #[test]
        fn coverage_is_additive(
            (f, g) in arb_family(10, 8)
                .prop_flat_map(|f| { let n = f.n(); (Just(f), arb_window(n)) })
        ) {
            let mut h = f.clone();
            h.insert(g).unwrap();
            let before = f.coverage();
            let after = h.coverage();
            for x in 0..f.n() {
                prop_assert_eq!(after.get(x), before.get(x) + usize::from(g.contains_point(x)));
            }
        }
    }
}
