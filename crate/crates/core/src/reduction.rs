//! The Franzblau–Kleitman reduction.
//!
//! A bad interval `s` is reduced by replacing the maximal members
//! `[a_1, b_1), ..., [a_k, b_k)` of `F|s` with the staggered overlaps
//! `[a_2, b_1), ..., [a_k, b_{k-1})`. Repeating this on minimal bad
//! intervals until none remain yields an irredundant family `G` that
//! generates `F`, together with the multiset `S` of intervals that were
//! reduced. Both are independent of the order in which minimal bad
//! intervals are chosen.
//!
//! [`fk_run`] finds minimal bad intervals with a right-to-left sweep for
//! each right endpoint `v = 1, ..., n` in turn, reducing every bad interval
//! that ends at `v` before moving on. Reducing a minimal bad interval never
//! turns a good interval bad, so a single ascending pass is enough.

use crate::analysis::is_good;
use crate::error::{Error, Result};
use crate::family::{sort_canonical, Family, Interval};

/// Output of a reduction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    generators: Family,
    reduced: Vec<Interval>,
}

impl ReductionResult {
    pub(crate) fn new(generators: Family, mut reduced: Vec<Interval>) -> Self {
        sort_canonical(&mut reduced);
        ReductionResult {
            generators,
            reduced,
        }
    }

    /// The final irredundant generating family `G`.
    pub fn generators(&self) -> &Family {
        &self.generators
    }

    /// The multiset `S` of reduced minimal bad intervals, in canonical order.
    pub fn reduced(&self) -> &[Interval] {
        &self.reduced
    }

    /// Number of reductions performed, `|S|`.
    pub fn rounds(&self) -> usize {
        self.reduced.len()
    }

    pub fn into_parts(self) -> (Family, Vec<Interval>) {
        (self.generators, self.reduced)
    }
}

/// One application of `F -> F↓s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub bad: Interval,
    /// The maximal members of `F|s`, one occurrence each.
    pub removed: Vec<Interval>,
    /// The staggered overlaps that replace them.
    pub inserted: Vec<Interval>,
}

impl ReductionStep {
    /// Panics unless the step lowers coverage by exactly one on `bad` and
    /// leaves every other point alone.
    pub fn assert_coverage_identity(&self) {
        let s = self.bad;
        let mut delta = vec![0isize; s.len() + 1];
        for (ivs, sign) in [(&self.removed, -1), (&self.inserted, 1)] {
            for iv in ivs {
                assert!(
                    s.contains(iv),
                    "reduction of {s} touched {iv}, which lies outside it"
                );
                delta[iv.lo() - s.lo()] += sign;
                delta[iv.hi() - s.lo()] -= sign;
            }
        }
        let mut running = 0isize;
        for (offset, d) in delta[..s.len()].iter().enumerate() {
            running += d;
            assert_eq!(
                running,
                -1,
                "coverage identity fails at point {} while reducing {s}",
                s.lo() + offset
            );
        }
    }
}

/// Distinct members of `F|s` not properly contained in another member of
/// `F|s`, in ascending order of both endpoints.
pub fn maximal_intervals(family: &Family, s: &Interval) -> Vec<Interval> {
    let mut inside: Vec<Interval> = family.iter().filter(|iv| s.contains(iv)).copied().collect();
    // left endpoint ascending, longest first on ties
    inside.sort_unstable_by(|a, b| a.lo().cmp(&b.lo()).then(b.hi().cmp(&a.hi())));
    inside.dedup();
    let mut reach = 0;
    inside
        .into_iter()
        .filter(|iv| {
            let maximal = iv.hi() > reach;
            reach = reach.max(iv.hi());
            maximal
        })
        .collect()
}

/// `F↓s`, computed directly from the maximal intervals of `F|s`.
///
/// Fails if `s` is good for `F`, or if the maximal intervals do not satisfy
/// `a_{j+1} < b_j`. Neither happens when `s` is a minimal bad interval.
pub fn reduce(family: &Family, s: &Interval) -> Result<Family> {
    reduce_step(family, s).map(|(f, _)| f)
}

pub(crate) fn reduce_step(family: &Family, s: &Interval) -> Result<(Family, ReductionStep)> {
    if is_good(family, s) {
        return Err(Error::NotBad { interval: *s });
    }
    let maximal = maximal_intervals(family, s);
    if maximal.windows(2).any(|w| w[1].lo() >= w[0].hi()) {
        return Err(Error::NotStaggered { interval: *s });
    }
    let inserted: Vec<Interval> = maximal
        .windows(2)
        .map(|w| Interval::try_new(w[1].lo(), w[0].hi()).expect("overlap checked above"))
        .collect();
    let mut next = family.clone();
    for iv in &maximal {
        let found = next.remove_one(iv);
        debug_assert!(found);
    }
    for iv in &inserted {
        next.insert(*iv)?;
    }
    Ok((
        next,
        ReductionStep {
            bad: *s,
            removed: maximal,
            inserted,
        },
    ))
}

/// The bad interval `[u, v)` with the largest `u`, if any.
///
/// Assumes every interval ending before `v` is good for `F`; the result is
/// then a minimal bad interval. Runs in `O(m + n)`.
pub fn next_bad_with_right_end(family: &Family, v: usize) -> Option<Interval> {
    if v == 0 || v > family.n() {
        return None;
    }
    Sweep::new(family).next_bad(v)
}

/// Reduces `F` to an irredundant generating family, recording every
/// reduced interval.
pub fn fk_run(family: &Family) -> ReductionResult {
    fk_run_traced(family, |_| {})
}

/// [`fk_run`], reporting each reduction step to `observer` in order.
pub fn fk_run_traced<O>(family: &Family, mut observer: O) -> ReductionResult
where
    O: FnMut(&ReductionStep),
{
    let n = family.n();
    let mut sweep = Sweep::new(family);
    let mut reduced = Vec::new();
    for v in 1..=n {
        while let Some(s) = sweep.next_bad(v) {
            let step = sweep.reduce_in_place(&s);
            step.assert_coverage_identity();
            #[cfg(debug_assertions)]
            sweep.debug_assert_prefix_good(v);
            observer(&step);
            reduced.push(s);
        }
    }
    let generators = sweep.into_family(n);
    debug_assert_eq!(generators.len() + reduced.len(), family.len());
    ReductionResult::new(generators, reduced)
}

/// Working copy of a family, indexed by right endpoint.
///
/// `lefts[v]` holds the left endpoints of the members ending at `v`,
/// duplicates included. `count` is scratch space for the sweep and is all
/// zeros between calls.
struct Sweep {
    lefts: Vec<Vec<usize>>,
    count: Vec<usize>,
    touched: Vec<usize>,
}

impl Sweep {
    fn new(family: &Family) -> Self {
        let n = family.n();
        let mut lefts = vec![Vec::new(); n + 1];
        for iv in family {
            lefts[iv.hi()].push(iv.lo());
        }
        Sweep {
            lefts,
            count: vec![0; n + 1],
            touched: Vec::new(),
        }
    }

    /// Sweeps `u` leftwards from `v`. `t` is the largest left bound that
    /// could still double-cover every point of `[u, v)`; `coverage` counts
    /// members inside `[t, v)` containing point `u - 1`, and `potential`
    /// counts members ending in `[u, v]` whose left endpoint is below `t`.
    /// `count[w]` is the number of members seen so far starting at `w`.
    fn next_bad(&mut self, v: usize) -> Option<Interval> {
        let mut coverage = 0usize;
        let mut potential = 0usize;
        let mut u = v;
        let mut t = v - 1;
        let found = loop {
            if u <= t {
                break true;
            }
            // members starting at u do not reach u - 1
            coverage -= self.count[u];
            for &w in &self.lefts[u] {
                if self.count[w] == 0 {
                    self.touched.push(w);
                }
                self.count[w] += 1;
                if w >= t {
                    coverage += 1;
                } else {
                    potential += 1;
                }
            }
            if coverage + potential < 2 {
                break false;
            }
            while coverage < 2 {
                t -= 1;
                coverage += self.count[t];
                potential -= self.count[t];
            }
            u -= 1;
        };
        for w in self.touched.drain(..) {
            self.count[w] = 0;
        }
        found.then(|| Interval::try_new(u, v).expect("sweep keeps u < v"))
    }

    /// Replaces the working family by its reduction in the minimal bad
    /// interval `s`, walking right endpoints from `s.hi()` down.
    fn reduce_in_place(&mut self, s: &Interval) -> ReductionStep {
        let (u, v) = (s.lo(), s.hi());
        let mut removed = Vec::new();
        let mut inserted = Vec::new();

        let (at, mut w) = longest_inside(&self.lefts[v], u)
            .expect("a bad interval has a member ending at its right end");
        self.lefts[v].swap_remove(at);
        removed.push(Interval::try_new(w, v).expect("stored members are nonempty"));

        // w is the left end of the last maximal interval found; the next one
        // is the longest member ending at t that starts left of w
        let mut t = v;
        while w > u {
            t -= 1;
            assert!(t > u, "maximal intervals of {s} are not staggered");
            if let Some((at, x)) = longest_inside(&self.lefts[t], u) {
                if x < w {
                    removed.push(Interval::try_new(x, t).expect("stored members are nonempty"));
                    let overlap = Interval::try_new(w, t).expect("maximal intervals overlap");
                    inserted.push(overlap);
                    self.lefts[t][at] = w;
                    w = x;
                }
            }
        }
        ReductionStep {
            bad: *s,
            removed,
            inserted,
        }
    }

    fn into_family(self, n: usize) -> Family {
        let members = self
            .lefts
            .into_iter()
            .enumerate()
            .flat_map(|(hi, lefts)| lefts.into_iter().map(move |lo| (lo, hi)))
            .map(|(lo, hi)| Interval::try_new(lo, hi).expect("stored members are nonempty"))
            .collect();
        Family::from_vec_unchecked(n, members)
    }

    #[cfg(debug_assertions)]
    fn snapshot(&self) -> Family {
        let n = self.lefts.len() - 1;
        let members = self
            .lefts
            .iter()
            .enumerate()
            .flat_map(|(hi, lefts)| {
                lefts
                    .iter()
                    .map(move |&lo| Interval::try_new(lo, hi).unwrap())
            })
            .collect();
        Family::from_vec_unchecked(n, members)
    }

    /// Every interval ending before `v` must still be good. Quadratic in `n`
    /// per call, so only checked on small ground sets.
    #[cfg(debug_assertions)]
    fn debug_assert_prefix_good(&self, v: usize) {
        const LIMIT: usize = 16;
        if self.lefts.len() > LIMIT + 1 {
            return;
        }
        let current = self.snapshot();
        for hi in 1..v {
            for lo in 0..hi {
                let t = Interval::try_new(lo, hi).unwrap();
                debug_assert!(is_good(&current, &t), "{t} became bad while sweeping {v}");
            }
        }
    }
}

/// Index and value of the smallest left endpoint `>= floor`.
fn longest_inside(lefts: &[usize], floor: usize) -> Option<(usize, usize)> {
    lefts
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, lo)| lo >= floor)
        .min_by_key(|&(_, lo)| lo)
}
