//! Command-line front end: instance files, result printing, and the
//! `solve`, `check` and `bench` subcommands.
//!
//! Instance format: the first meaningful line holds `n`; every later
//! nonblank line holds one interval as `lo hi`. A `#` starts a comment.

use std::fmt::Write as _;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::analysis::{generates, is_irredundant, is_irredundant_sequence};
use crate::error::{Error, Result};
use crate::extraction::{solve, Solution};
use crate::family::{sort_canonical, Family, Interval};
use crate::gen::{random_family, Prng};
use crate::oracle::{brute_max_irredundant, brute_min_generating, randomized_fk, MAX_MEMBERS};
use crate::reduction::fk_run_traced;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

pub fn parse_instance(text: &str) -> Result<Family> {
    let mut n = None;
    let mut members = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(format!("expected a nonnegative integer, found {tok:?}")))
        };
        let Some(n) = n else {
            if fields.len() != 1 {
                return Err(parse_err(format!(
                    "header must be a single ground-set size, found {line:?}"
                )));
            }
            n = Some(number(fields[0])?);
            continue;
        };
        if fields.len() != 2 {
            return Err(parse_err(format!("expected \"lo hi\", found {line:?}")));
        }
        let (lo, hi) = (number(fields[0])?, number(fields[1])?);
        if lo >= hi {
            return Err(parse_err(format!("empty interval [{lo}..{hi})")));
        }
        if hi > n {
            return Err(parse_err(format!(
                "interval [{lo}..{hi}) exceeds the ground set [0..{n})"
            )));
        }
        members.push(Interval::try_new(lo, hi).expect("checked above"));
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        message: "missing ground-set size".into(),
    })?;
    Family::new(n, members)
}

/// Instance-format text for `family`, members in canonical order.
pub fn serialize(family: &Family) -> String {
    let mut out = format!("{}\n", family.n());
    for iv in family {
        let _ = writeln!(out, "{} {}", iv.lo(), iv.hi());
    }
    out
}

/// The three-line result block printed by `solve`.
pub fn format_solution(source: &str, solution: &Solution) -> String {
    let mut out = format!("Applying Franzblau/Kleitman to {source}:\n");
    out.push_str("Minimum generating family:");
    for iv in solution.generators() {
        let _ = write!(out, " {iv}");
    }
    out.push_str("\nMaximum irredundant family:");
    for (x, iv) in solution.tree().postorder() {
        let _ = write!(out, " {x}{iv}");
    }
    out.push('\n');
    out
}

#[derive(Debug, Parser)]
#[command(
    name = "irredundant",
    version,
    about = "Minimum generating families and maximum irredundant subfamilies of intervals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance read from a file or generated at random
    Solve(SolveArgs),
    /// Run the invariant suite on seeded random instances
    Check(CheckArgs),
    /// Time the solver on random instances with m = n = k
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "random"])))]
pub struct SolveArgs {
    /// Instance file
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Random instance with M intervals on N points
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub random: Option<Vec<usize>>,
    /// Seed for --random [default: 0]
    #[arg(long, requires = "random", conflicts_with = "input")]
    pub seed: Option<u64>,
    /// Reflect the instance left to right before solving
    #[arg(long)]
    pub mirror: bool,
    /// Also verify the answer: mirror symmetry, generation and irredundancy
    #[arg(long)]
    pub selfcheck: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 8)]
    pub max_m: usize,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated sizes k
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Solve(args) => solve_command(&args, out, err),
        Command::Check(args) => check_command(&args, out, err),
        Command::Bench(args) => bench_command(&args, out, err),
    }
}

pub fn solve_command(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (family, mut source) = match (&args.input, &args.random) {
        (Some(path), None) => {
            let text = match std::fs::read_to_string(path) {
                Ok(text) => text,
                Err(e) => {
                    let _ = writeln!(err, "cannot read {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            };
            match parse_instance(&text) {
                Ok(f) => (f, path.display().to_string()),
                Err(e) => {
                    let _ = writeln!(err, "{}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
        }
        (None, Some(mn)) => {
            let (m, n, seed) = (mn[0], mn[1], args.seed.unwrap_or(0));
            if n == 0 {
                let _ = writeln!(err, "--random needs N >= 1");
                return EXIT_USAGE;
            }
            (random_family(m, n, seed), format!("random({m},{n},{seed})"))
        }
        _ => {
            let _ = writeln!(err, "exactly one of --input or --random is required");
            return EXIT_USAGE;
        }
    };
    let family = if args.mirror {
        source = format!("reflect({source})");
        family.mirror()
    } else {
        family
    };

    let solution = match solve(&family) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "internal failure: {e}");
            return EXIT_INTERNAL;
        }
    };
    let _ = out.write_all(format_solution(&source, &solution).as_bytes());

    if args.selfcheck {
        if let Err(problem) = self_check(&family, &solution) {
            let _ = writeln!(err, "self-check failed: {problem}");
            return EXIT_INTERNAL;
        }
        let _ = writeln!(out, "Self-check passed.");
    }
    EXIT_OK
}

/// Checks that scale to large instances: sizes, generation, the postorder
/// replay, and agreement with the solution of the mirror image.
fn self_check(family: &Family, solution: &Solution) -> std::result::Result<(), String> {
    let g = solution.generators();
    let sub = solution.irredundant();
    if g.len() + solution.reduced().len() != family.len() || sub.len() != g.len() {
        return Err("cardinalities disagree".into());
    }
    if !generates(g, family) {
        return Err("G does not generate F".into());
    }
    if !sub.is_submultiset_of(family) {
        return Err("F' is not a subfamily of F".into());
    }
    let seq: Vec<Interval> = solution.tree().postorder().iter().map(|p| p.1).collect();
    if !is_irredundant_sequence(&seq) {
        return Err("postorder is not an irredundant sequence".into());
    }
    let reflected = solve(&family.mirror()).map_err(|e| e.to_string())?;
    if reflected.generators() != &g.mirror() {
        return Err("G of the mirror image is not the mirror image of G".into());
    }
    Ok(())
}

/// Invariants exercised by `check`, in report order.
pub const INVARIANTS: [&str; 7] = [
    "coverage identity",
    "certification",
    "oracle agreement",
    "confluence",
    "mirror symmetry",
    "restriction",
    "extraction",
];

/// Derives trial `index`'s instance from the run seed.
pub fn trial_instance(seed: u64, index: usize, max_m: usize, max_n: usize) -> Family {
    let mut rng = Prng::new(seed ^ (index as u64).wrapping_mul(0xD1B5_4A32_D192_ED03));
    let m = rng.below(max_m as u64 + 1) as usize;
    let n = 1 + rng.below(max_n.max(1) as u64) as usize;
    random_family(m, n, rng.next())
}

/// Runs every invariant on `family`. Returns the index into
/// [`INVARIANTS`] and a description of the first failure.
pub fn check_instance(
    family: &Family,
    confluence_seeds: &[u64],
) -> std::result::Result<(), (usize, String)> {
    let n = family.n();

    // coverage identity, replayed against independently computed profiles
    let mut current = family.clone();
    let mut trouble = None;
    let result = fk_run_traced(family, |step| {
        let before = current.coverage();
        for iv in &step.removed {
            current.remove_one(iv);
        }
        for iv in &step.inserted {
            let _ = current.insert(*iv);
        }
        let after = current.coverage();
        let ok =
            (0..n).all(|x| after.get(x) + usize::from(step.bad.contains_point(x)) == before.get(x));
        if !ok && trouble.is_none() {
            trouble = Some(format!("after reducing {}", step.bad));
        }
    });
    if let Some(t) = trouble {
        return Err((0, t));
    }
    if &current != result.generators() {
        return Err((0, "replayed steps do not end at G".into()));
    }

    let g = result.generators();
    if g.len() + result.rounds() != family.len() || !is_irredundant(g) || !generates(g, family) {
        return Err((
            1,
            "G is not an irredundant generating family of size |F| - |S|".into(),
        ));
    }

    if family.len() <= MAX_MEMBERS {
        let max_irr = brute_max_irredundant(family)
            .map_err(|e| (2, e.to_string()))?
            .0;
        let min_gen = brute_min_generating(family).map_err(|e| (2, e.to_string()))?;
        if max_irr != g.len() || min_gen != g.len() {
            return Err((
                2,
                format!(
                    "|G| = {}, max irredundant = {max_irr}, min generating = {min_gen}",
                    g.len()
                ),
            ));
        }
    }

    for &seed in confluence_seeds {
        if randomized_fk(family, seed) != result {
            return Err((
                3,
                format!("random reduction order with seed {seed} differs"),
            ));
        }
    }

    let mirrored = fk_run_traced(&family.mirror(), |_| {});
    let mut s_mirror: Vec<Interval> = result.reduced().iter().map(|s| s.mirror(n)).collect();
    sort_canonical(&mut s_mirror);
    if mirrored.generators() != &g.mirror() || mirrored.reduced() != s_mirror.as_slice() {
        return Err((4, "mirror image reduces differently".into()));
    }

    for hi in 1..=n {
        for lo in 0..hi {
            let t = Interval::try_new(lo, hi).expect("lo < hi");
            let inside: Vec<Interval> = result
                .reduced()
                .iter()
                .filter(|s| t.contains(s))
                .copied()
                .collect();
            let direct = fk_run_traced(&family.restrict(&t), |_| {});
            if direct.reduced() != inside.as_slice() {
                return Err((5, format!("window {t}")));
            }
        }
    }

    let solution = solve(family).map_err(|e| (6, e.to_string()))?;
    let sub = solution.irredundant();
    let seq: Vec<Interval> = solution.tree().postorder().iter().map(|p| p.1).collect();
    let xs = solution.tree().inorder_points();
    if sub.len() != g.len()
        || !sub.is_submultiset_of(family)
        || !is_irredundant(&sub)
        || !is_irredundant_sequence(&seq)
        || !xs.windows(2).all(|w| w[0] < w[1])
    {
        return Err((6, "extracted subfamily violates its invariants".into()));
    }
    Ok(())
}

pub fn check_command(args: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut passed = [0usize; INVARIANTS.len()];
    for trial in 0..args.trials {
        let family = trial_instance(args.seed, trial, args.max_m, args.max_n);
        let seeds = [trial as u64, trial as u64 + 1, !(trial as u64)];
        let outcome = panic::catch_unwind(AssertUnwindSafe(|| check_instance(&family, &seeds)))
            .unwrap_or_else(|payload| {
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err((0, msg))
            });
        match outcome {
            Ok(()) => passed.iter_mut().for_each(|p| *p += 1),
            Err((which, detail)) => {
                passed[..which].iter_mut().for_each(|p| *p += 1);
                report_counts(out, &passed, trial + 1);
                let _ = writeln!(err, "trial {trial}: {} failed: {detail}", INVARIANTS[which]);
                let _ = write!(err, "instance:\n{}", serialize(&family));
                return EXIT_INTERNAL;
            }
        }
    }
    report_counts(out, &passed, args.trials);
    EXIT_OK
}

fn report_counts(out: &mut dyn Write, passed: &[usize], trials: usize) {
    for (name, count) in INVARIANTS.iter().zip(passed) {
        let _ = writeln!(out, "{name}: {count}/{trials} passed");
    }
}

pub fn bench_command(args: &BenchArgs, out: &mut dyn Write, _err: &mut dyn Write) -> i32 {
    let _ = writeln!(out, "k\tseconds\treduced\tgenerators");
    for &k in &args.sizes {
        if k == 0 {
            let _ = writeln!(out, "0\t0.000000\t0\t0");
            continue;
        }
        let family = random_family(k, k, args.seed);
        let start = Instant::now();
        let solution = match solve(&family) {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(_err, "internal failure at k = {k}: {e}");
                return EXIT_INTERNAL;
            }
        };
        let elapsed = start.elapsed().as_secs_f64();
        let _ = writeln!(
            out,
            "{k}\t{elapsed:.6}\t{}\t{}",
            solution.reduced().len(),
            solution.generators().len()
        );
    }
    EXIT_OK
}
