//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are never captured; exits nonzero if any fails.

use std::time::{Duration, Instant};

use irredundant::analysis::{generates, is_irredundant, is_irredundant_sequence};
use irredundant::family::sort_canonical;
use irredundant::gen::{random_family, Prng};
use irredundant::oracle::{
    brute_max_irredundant, brute_min_generating, randomized_fk, randomized_fk_traced,
};
use irredundant::reduction::fk_run_traced;
use irredundant::{fk_run, solve, Family, Interval, ReductionStep};

fn report(id: u32, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[{verdict}] criterion {id}: {name} ({detail})");
}

fn iv(lo: usize, hi: usize) -> Interval {
    Interval::new(lo, hi).unwrap()
}

fn ten() -> Family {
    Family::from_pairs(9, [(0, 8), (0, 7), (1, 6), (1, 5), (3, 9), (2, 9)]).unwrap()
}

/// `count` seeded instances with `m <= max_m` members on `n <= max_n` points.
fn instances(count: usize, max_m: usize, max_n: usize, seed: u64) -> Vec<Family> {
    let mut rng = Prng::new(seed);
    (0..count)
        .map(|_| {
            let m = rng.below(max_m as u64 + 1) as usize;
            let n = 1 + rng.below(max_n as u64) as usize;
            random_family(m, n, rng.next())
        })
        .collect()
}

const ORACLE_SEED: u64 = 0x0AC1E;
const CONFLUENCE_SEED: u64 = 0xC0F1;
const RESTRICTION_SEED: u64 = 0x5E57;
const MIRROR_SEED: u64 = 0x3141;
const EXCHANGE_SEED: u64 = 0xE8C4;

fn oracle_instances() -> Vec<Family> {
    instances(1000, 8, 10, ORACLE_SEED)
}

fn confluence_instances() -> Vec<Family> {
    instances(200, 8, 10, CONFLUENCE_SEED)
}

fn criterion_1_golden_instance() -> bool {
    let f = ten();
    let start = Instant::now();
    let solution = solve(&f).unwrap();
    let elapsed = start.elapsed();

    let g = solution.generators().len();
    let sub = solution.irredundant().len();
    let five = Family::from_pairs(9, [(0, 8), (0, 7), (1, 6), (1, 5), (3, 9)]).unwrap();
    let ok = g == 5
        && sub == 5
        && is_irredundant(&five)
        && !is_irredundant(&f)
        && elapsed < Duration::from_millis(1);
    report(
        1,
        "golden six-interval family",
        ok,
        &format!("|G| = {g}, |F'| = {sub}, solve took {elapsed:?}, limit 1 ms"),
    );
    ok
}

fn criterion_2_oracle_equivalence() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (i, f) in oracle_instances().iter().enumerate() {
        let solution = solve(f).unwrap();
        let g = solution.generators();
        let sub = solution.irredundant();
        let max_irr = brute_max_irredundant(f).unwrap().0;
        let min_gen = brute_min_generating(f).unwrap();
        let ok = g.len() == max_irr
            && g.len() == min_gen
            && is_irredundant(g)
            && generates(g, f)
            && sub.is_submultiset_of(f)
            && is_irredundant(&sub)
            && sub.len() == g.len();
        if !ok {
            failures.push(format!(
                "instance {i}: |G| {} max {max_irr} min {min_gen}",
                g.len()
            ));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        2,
        "oracle equivalence on 1000 instances, m <= 8, n <= 10",
        ok,
        &format!("{} mismatches, {elapsed:?}, limit 60 s", failures.len()),
    );
    if !ok {
        eprintln!("{failures:?}");
    }
    ok
}

fn criterion_3_confluence() -> bool {
    let mut mismatches = 0;
    let mut runs = 0;
    for (i, f) in confluence_instances().iter().enumerate() {
        let reference = fk_run(f);
        for k in 0..5u64 {
            runs += 1;
            if randomized_fk(f, (i as u64) << 8 | k) != reference {
                mismatches += 1;
            }
        }
    }
    let ok = mismatches == 0;
    report(
        3,
        "confluence of random reduction orders",
        ok,
        &format!("{runs} randomized runs, {mismatches} differ from the sweep"),
    );
    ok
}

/// Applies `step` to `current` and checks the new coverage against the old
/// one with recomputed profiles.
fn replay_and_check(current: &mut Family, step: &ReductionStep) -> bool {
    let before = current.coverage();
    for iv in &step.removed {
        assert!(current.remove_one(iv), "step removes {iv}, which is absent");
    }
    for iv in &step.inserted {
        current.insert(*iv).unwrap();
    }
    let after = current.coverage();
    (0..current.n())
        .all(|x| after.get(x) + usize::from(step.bad.contains_point(x)) == before.get(x))
}

fn criterion_4_coverage_identity() -> bool {
    let mut steps = 0usize;
    let mut violations = 0usize;
    let mut families = vec![ten()];
    families.extend(oracle_instances());
    let confluence = confluence_instances();
    families.extend(confluence.iter().cloned());

    for f in &families {
        let mut current = f.clone();
        let result = fk_run_traced(f, |step| {
            steps += 1;
            if !replay_and_check(&mut current, step) {
                violations += 1;
            }
        });
        assert_eq!(&current, result.generators());
    }
    for (i, f) in confluence.iter().enumerate() {
        for k in 0..5u64 {
            let mut current = f.clone();
            randomized_fk_traced(f, (i as u64) << 8 | k, |step| {
                steps += 1;
                if !replay_and_check(&mut current, step) {
                    violations += 1;
                }
            });
        }
    }
    let ok = violations == 0 && steps > 0;
    report(
        4,
        "coverage drops by exactly one on each reduced interval",
        ok,
        &format!("{steps} reductions checked, {violations} violations"),
    );
    ok
}

fn criterion_5_restriction() -> bool {
    let mut windows = 0;
    let mut mismatches = 0;
    for f in instances(100, 8, 10, RESTRICTION_SEED) {
        let reduced = fk_run(&f).reduced().to_vec();
        for hi in 1..=f.n() {
            for lo in 0..hi {
                let t = iv(lo, hi);
                windows += 1;
                let inside: Vec<Interval> =
                    reduced.iter().filter(|s| t.contains(s)).copied().collect();
                if fk_run(&f.restrict(&t)).reduced() != inside.as_slice() {
                    mismatches += 1;
                }
            }
        }
    }
    let ok = mismatches == 0;
    report(
        5,
        "reduced set of a restriction is the restriction of the reduced set",
        ok,
        &format!("{windows} windows over 100 instances, {mismatches} mismatches"),
    );
    ok
}

fn criterion_6_mirror_symmetry() -> bool {
    let mut mismatches = 0;
    for f in instances(200, 8, 10, MIRROR_SEED) {
        let n = f.n();
        let direct = fk_run(&f);
        let reflected = fk_run(&f.mirror());
        let mut s: Vec<Interval> = direct.reduced().iter().map(|s| s.mirror(n)).collect();
        sort_canonical(&mut s);
        if &direct.generators().mirror() != reflected.generators()
            || s.as_slice() != reflected.reduced()
        {
            mismatches += 1;
        }
    }
    let ok = mismatches == 0;
    report(
        6,
        "mirror symmetry of G and S",
        ok,
        &format!("200 instances, {mismatches} mismatches"),
    );
    ok
}

fn criterion_7_search_tree_invariants() -> bool {
    let mut nodes = 0;
    let mut broken = 0;
    for f in oracle_instances() {
        let solution = solve(&f).unwrap();
        let tree = solution.tree();
        nodes += tree.len();
        let xs = tree.inorder_points();
        let order = tree.postorder();
        let seq: Vec<Interval> = order.iter().map(|p| p.1).collect();
        let mut ok = xs.windows(2).all(|w| w[0] < w[1]) && is_irredundant_sequence(&seq);
        for (i, (x, interval)) in order.iter().enumerate() {
            // x is new when its interval arrives
            ok &= interval.contains_point(*x)
                && order[..i].iter().all(|(_, prev)| !prev.contains_point(*x));
        }
        for node in tree.nodes() {
            ok &= node.interval.contains_point(node.x) && node.window.contains(&node.interval);
            if let Some(l) = node.left {
                let child = tree.node(l);
                ok &= child.window.lo() == node.window.lo() && child.window.hi() == node.x;
            }
            if let Some(r) = node.right {
                let child = tree.node(r);
                ok &= child.window.lo() == node.x + 1 && child.window.hi() == node.window.hi();
            }
        }
        if !ok {
            broken += 1;
        }
    }
    let ok = broken == 0;
    report(
        7,
        "search tree order, windows and postorder replay",
        ok,
        &format!("{nodes} nodes over 1000 instances, {broken} bad trees"),
    );
    ok
}

fn time_solve(k: usize, seed: u64) -> Duration {
    let f = random_family(k, k, seed);
    // best of three to damp scheduler noise
    (0..3)
        .map(|_| {
            let start = Instant::now();
            let solution = solve(&f).unwrap();
            let elapsed = start.elapsed();
            assert_eq!(solution.irredundant().len(), solution.generators().len());
            elapsed
        })
        .min()
        .unwrap()
}

fn criterion_8_performance() -> bool {
    let seed = 2024;
    let t500 = time_solve(500, seed);
    let t1000 = time_solve(1000, seed);
    let t2000 = time_solve(2000, seed);
    let r1 = t1000.as_secs_f64() / t500.as_secs_f64();
    let r2 = t2000.as_secs_f64() / t1000.as_secs_f64();
    let ok = t2000 < Duration::from_secs(5) && r1 <= 6.0 && r2 <= 6.0;
    report(
        8,
        "quadratic scaling",
        ok,
        &format!(
            "k=500 {t500:?}, k=1000 {t1000:?}, k=2000 {t2000:?} (limit 5 s); ratios {r1:.2}, {r2:.2} (limit 6)"
        ),
    );
    ok
}

fn criterion_9_exchange_property() -> bool {
    let mut rng = Prng::new(EXCHANGE_SEED);
    let mut tested = 0;
    let mut failures = 0;
    let mut draws = 0;
    while tested < 200 {
        draws += 1;
        assert!(draws < 100_000, "could not find enough instances");
        let m = 1 + rng.below(6) as usize;
        let n = 1 + rng.below(8) as usize;
        let f = random_family(m, n, rng.next());
        if !is_irredundant(&f) {
            continue;
        }
        let spoilers: Vec<Interval> = (1..=n)
            .flat_map(|hi| (0..hi).map(move |lo| iv(lo, hi)))
            .filter(|g| {
                let mut h = f.clone();
                h.insert(*g).unwrap();
                !is_irredundant(&h)
            })
            .collect();
        if spoilers.is_empty() {
            continue;
        }
        let g = spoilers[rng.below(spoilers.len() as u64) as usize];
        let mut with_g = f.clone();
        with_g.insert(g).unwrap();
        // drop one member of F, by position
        let exchanged = f.members().iter().any(|member| {
            let mut h = with_g.clone();
            h.remove_one(member);
            is_irredundant(&h)
        });
        tested += 1;
        if !exchanged {
            failures += 1;
        }
    }
    let ok = failures == 0;
    report(
        9,
        "exchange property",
        ok,
        &format!("{tested} irredundant families with a spoiling interval, {failures} without an exchange"),
    );
    ok
}

fn main() {
    let criteria: [fn() -> bool; 9] = [
        criterion_1_golden_instance,
        criterion_2_oracle_equivalence,
        criterion_3_confluence,
        criterion_4_coverage_identity,
        criterion_5_restriction,
        criterion_6_mirror_symmetry,
        criterion_7_search_tree_invariants,
        criterion_8_performance,
        criterion_9_exchange_property,
    ];
    let mut failed = 0;
    for (i, criterion) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(criterion) {
            Ok(true) => {}
            Ok(false) => failed += 1,
            Err(_) => {
                report(i as u32 + 1, "panicked", false, "see stderr");
                failed += 1;
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
