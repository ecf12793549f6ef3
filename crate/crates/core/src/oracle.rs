//! Exhaustive ground truth for small instances.
//!
//! None of this shares code with the sweep in [`crate::reduction`]: the
//! maximum irredundant subfamily is found by enumerating sub-multisets,
//! the minimum generating family by an exact hitting-set search, and the
//! randomized reduction picks among all minimal bad intervals found by
//! exhaustive scan.

use crate::analysis::{is_irredundant, minimal_bad_intervals};
use crate::error::{Error, Result};
use crate::family::{Family, Interval};
use crate::gen::Prng;
use crate::reduction::{reduce_step, ReductionResult, ReductionStep};

/// Largest family [`brute_max_irredundant`] will enumerate.
pub const MAX_MEMBERS: usize = 12;

/// Largest candidate-generator set [`brute_min_generating`] will search.
pub const MAX_CANDIDATES: usize = 128;

/// Size of a largest irredundant sub-multiset, with a witness.
///
/// Sub-multisets are tried by decreasing size, and by ascending membership
/// mask over the canonical member order within one size.
pub fn brute_max_irredundant(family: &Family) -> Result<(usize, Family)> {
    let m = family.len();
    if m > MAX_MEMBERS {
        return Err(Error::OracleGuard {
            what: "family size",
            size: m,
            limit: MAX_MEMBERS,
        });
    }
    for size in (0..=m).rev() {
        for mask in 0u32..1 << m {
            if mask.count_ones() as usize != size {
                continue;
            }
            let picked = family
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, iv)| *iv)
                .collect();
            let sub = Family::from_vec_unchecked(family.n(), picked);
            if is_irredundant(&sub) {
                return Ok((size, sub));
            }
        }
    }
    unreachable!("the empty family is irredundant")
}

/// Candidate generators: intervals `[a, b)` where `a` is a left endpoint
/// and `b` a right endpoint of some members, and which fit inside a member.
///
/// Any generator can be widened to the intersection of all members that
/// contain it without losing anything, so an optimal generating family
/// exists among these.
pub fn candidate_generators(family: &Family) -> Vec<Interval> {
    let mut los: Vec<usize> = family.iter().map(Interval::lo).collect();
    let mut his: Vec<usize> = family.iter().map(Interval::hi).collect();
    los.sort_unstable();
    los.dedup();
    his.sort_unstable();
    his.dedup();
    let mut out = Vec::new();
    for &b in &his {
        for &a in &los {
            if let Some(g) = Interval::try_new(a, b) {
                if family.iter().any(|f| f.contains(&g)) {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Size of a smallest generating family, by exact search.
///
/// Every pair `(f, x)` with `x` in a member `f` needs some chosen generator
/// `g` with `x ∈ g ⊆ f`; this is a minimum hitting set over those
/// requirements, solved by branch and bound.
pub fn brute_min_generating(family: &Family) -> Result<usize> {
    if family.len() > MAX_MEMBERS {
        return Err(Error::OracleGuard {
            what: "family size",
            size: family.len(),
            limit: MAX_MEMBERS,
        });
    }
    let candidates = candidate_generators(family);
    if candidates.len() > MAX_CANDIDATES {
        return Err(Error::OracleGuard {
            what: "candidate generators",
            size: candidates.len(),
            limit: MAX_CANDIDATES,
        });
    }

    let mut distinct: Vec<Interval> = family.members().to_vec();
    distinct.dedup();

    let mut requirements: Vec<u128> = Vec::new();
    for f in &distinct {
        for x in f.points() {
            let set = candidates
                .iter()
                .enumerate()
                .filter(|(_, g)| g.contains_point(x) && f.contains(g))
                .fold(0u128, |acc, (i, _)| acc | 1 << i);
            debug_assert_ne!(set, 0, "f itself is always a candidate");
            requirements.push(set);
        }
    }
    // a requirement implied by a smaller one can be dropped
    requirements.sort_unstable_by_key(|r| (r.count_ones(), *r));
    requirements.dedup();
    let mut kept: Vec<u128> = Vec::new();
    for r in requirements {
        if !kept.iter().any(|k| k & r == *k) {
            kept.push(r);
        }
    }

    let mut best = distinct.len();
    hitting_set(&kept, 0, &mut best);
    Ok(best)
}

fn hitting_set(requirements: &[u128], chosen: u128, best: &mut usize) {
    let used = chosen.count_ones() as usize;
    let open: Vec<u128> = requirements
        .iter()
        .copied()
        .filter(|r| r & chosen == 0)
        .collect();
    if open.is_empty() {
        *best = (*best).min(used);
        return;
    }
    // pairwise disjoint open requirements each need their own generator
    let mut bound = 0;
    let mut claimed = 0u128;
    for r in &open {
        if r & claimed == 0 {
            bound += 1;
            claimed |= r;
        }
    }
    if used + bound >= *best {
        return;
    }
    let branch = *open.iter().min_by_key(|r| r.count_ones()).unwrap();
    let mut rest = branch;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        hitting_set(requirements, chosen | bit, best);
    }
}

/// The reduction loop with each step reducing a uniformly random minimal
/// bad interval, chosen with a seeded [`Prng`].
pub fn randomized_fk(family: &Family, seed: u64) -> ReductionResult {
    randomized_fk_traced(family, seed, |_| {})
}

/// [`randomized_fk`], reporting each step to `observer`.
pub fn randomized_fk_traced<O>(family: &Family, seed: u64, mut observer: O) -> ReductionResult
where
    O: FnMut(&ReductionStep),
{
    let mut rng = Prng::new(seed);
    let mut current = family.clone();
    let mut reduced = Vec::new();
    loop {
        let choices = minimal_bad_intervals(&current);
        if choices.is_empty() {
            break;
        }
        let s = choices[rng.below(choices.len() as u64) as usize];
        let (next, step) = reduce_step(&current, &s).expect("minimal bad intervals reduce");
        step.assert_coverage_identity();
        let (before, after) = (current.coverage(), next.coverage());
        for x in 0..family.n() {
            assert_eq!(
                after.get(x) + usize::from(s.contains_point(x)),
                before.get(x),
                "coverage identity fails at {x} while reducing {s}"
            );
        }
        observer(&step);
        reduced.push(s);
        current = next;
    }
    ReductionResult::new(current, reduced)
}
