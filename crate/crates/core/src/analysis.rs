//! Decision procedures on interval families: good and bad intervals,
//! irredundancy, and generation.
//!
//! Irredundancy is decided two independent ways. [`is_irredundant`] scans
//! every window `s` for a point covered at most once by `F|s`, while
//! [`irredundant_order`] tries to build an ordering in which every member
//! adds a point not covered by its predecessors. The two must always agree.

use crate::family::{Family, Interval};

/// `true` iff some point of `s` lies in at most one member of `F|s`.
pub fn is_good(family: &Family, s: &Interval) -> bool {
    let width = s.len();
    let mut diff = vec![0isize; width + 1];
    for iv in family.iter().filter(|iv| s.contains(iv)) {
        diff[iv.lo() - s.lo()] += 1;
        diff[iv.hi() - s.lo()] -= 1;
    }
    let mut running = 0isize;
    diff[..width].iter().any(|d| {
        running += d;
        running <= 1
    })
}

/// Irredundancy via the bad-interval criterion: `F` is irredundant iff no
/// window `[a, b)` of the ground set is bad.
pub fn is_irredundant(family: &Family) -> bool {
    windows(family.n()).all(|s| is_good(family, &s))
}

/// Every window `[a, b)` with `0 <= a < b <= n`, in canonical order.
fn windows(n: usize) -> impl Iterator<Item = Interval> {
    (1..=n).flat_map(|hi| (0..hi).filter_map(move |lo| Interval::try_new(lo, hi)))
}

/// Irredundancy via the ordering definition.
///
/// Builds the order from the back: any member owning a point that no other
/// remaining member covers can go last. Ties go to the largest right
/// endpoint, then the smallest left endpoint. Returns `None` when the
/// family is redundant.
pub fn irredundant_order(family: &Family) -> Option<Vec<Interval>> {
    let n = family.n();
    let mut remaining: Vec<Interval> = family.members().to_vec();
    let mut reversed = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut cov = vec![0usize; n];
        for iv in &remaining {
            for x in iv.points() {
                cov[x] += 1;
            }
        }
        let pick = remaining
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.points().any(|x| cov[x] == 1))
            .max_by_key(|(_, iv)| (iv.hi(), std::cmp::Reverse(iv.lo())))
            .map(|(i, _)| i)?;
        reversed.push(remaining.remove(pick));
    }
    reversed.reverse();
    Some(reversed)
}

/// Replays the ordering definition: each interval must contain a point
/// absent from all earlier ones.
pub fn is_irredundant_sequence(seq: &[Interval]) -> bool {
    let n = seq.iter().map(Interval::hi).max().unwrap_or(0);
    let mut seen = vec![false; n];
    for iv in seq {
        let fresh = iv.points().any(|x| !seen[x]);
        if !fresh {
            return false;
        }
        for x in iv.points() {
            seen[x] = true;
        }
    }
    true
}

/// `true` iff every member of `target` is a union of members of
/// `generators`. For intervals that means the members of `generators`
/// lying inside `f` cover all of `f`.
pub fn generates(generators: &Family, target: &Family) -> bool {
    target.iter().all(|f| {
        let mut covered = vec![false; f.len()];
        for g in generators.iter().filter(|g| f.contains(g)) {
            for x in g.points() {
                covered[x - f.lo()] = true;
            }
        }
        covered.into_iter().all(|c| c)
    })
}

fn bad_grid(family: &Family) -> Vec<Vec<bool>> {
    let n = family.n();
    let mut bad = vec![vec![false; n + 1]; n + 1];
    for s in windows(n) {
        bad[s.lo()][s.hi()] = !is_good(family, &s);
    }
    bad
}

/// All bad windows, ordered by `(hi, lo)`.
pub fn all_bad_intervals(family: &Family) -> Vec<Interval> {
    let bad = bad_grid(family);
    windows(family.n())
        .filter(|s| bad[s.lo()][s.hi()])
        .collect()
}

/// Bad windows with no bad proper subwindow, ordered by `(hi, lo)`.
pub fn minimal_bad_intervals(family: &Family) -> Vec<Interval> {
    let n = family.n();
    let bad = bad_grid(family);
    // holds[a][b]: [a, b) contains a bad window (possibly itself)
    let mut holds = vec![vec![false; n + 1]; n + 1];
    for width in 1..=n {
        for a in 0..=n - width {
            let b = a + width;
            holds[a][b] = bad[a][b] || (width > 1 && (holds[a + 1][b] || holds[a][b - 1]));
        }
    }
    windows(n)
        .filter(|s| {
            let (a, b) = (s.lo(), s.hi());
            bad[a][b] && (b - a == 1 || !(holds[a + 1][b] || holds[a][b - 1]))
        })
        .collect()
}
