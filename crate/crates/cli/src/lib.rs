//! Command-line front end: `compute`, `table`, `verify` and `oracle`.
//!
//! Exit codes are 0 on success, 1 when a verification suite finds a
//! counterexample, and 2 for usage errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jordan_core::jordan::{BlockPair, JordanSolver, Prime};
use jordan_core::oracle::{oracle_run, OracleLimits, DEFAULT_MAX_DIMENSION};
use jordan_core::verify::{
    self, Execution, Suite, SweepSpec, VerifyReport, DEFAULT_COUNTEREXAMPLE_CAP,
};

mod render;

pub use render::{ComputeRecord, MultiplicityEntry, OracleRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "jordan",
    version,
    about = "Jordan partitions of J_m(1) ⊗ J_n(1) in characteristic p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Composition, block sizes and standardness for one (m, n, p).
    Compute(PairArgs),
    /// One row per m <= n within the bounds.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Brute-force Jordan type by linear algebra over GF(p).
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    m_max: u64,
    #[arg(long)]
    n_max: u64,
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// Largest accepted tensor dimension m * n.
    #[arg(long, default_value_t = DEFAULT_MAX_DIMENSION)]
    max_entries: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// oracle, theorem1, periodicity, reflection, corollary1 or invariants
    #[arg(long)]
    suite: String,
    #[arg(long)]
    m_max: Option<u64>,
    #[arg(long)]
    n_max: Option<u64>,
    /// Repeat to sweep several primes.
    #[arg(long)]
    p: Vec<u64>,
    /// Single block size for periodicity and reflection.
    #[arg(long)]
    m: Option<u64>,
    /// Exponent of the period p^t for periodicity and reflection.
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    #[arg(long, default_value_t = DEFAULT_MAX_DIMENSION)]
    max_entries: usize,
    #[arg(long, default_value_t = DEFAULT_COUNTEREXAMPLE_CAP)]
    counterexample_cap: usize,
    /// Invariants suite only: check this many seeded random triples instead
    /// of the exhaustive range.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    parallel: bool,
}

/// A usage error; the message goes to stderr and the exit code is 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<i32, Usage>;

fn prime(p: u64) -> Result<Prime<u64>, Usage> {
    Ok(Prime::new(p)?)
}

fn pair(m: u64, n: u64) -> Result<BlockPair<u64>, Usage> {
    Ok(BlockPair::unordered(m, n)?)
}

/// Parses `args` (including the program name), writes results to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let outcome = match cli.command {
        Command::Compute(args) => compute(&args, out),
        Command::Table(args) => table(&args, out),
        Command::Verify(args) => verify_cmd(&args, out, err),
        Command::Oracle(args) => oracle(&args, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn compute(args: &PairArgs, out: &mut dyn Write) -> Outcome {
    let pair = pair(args.m, args.n)?;
    let p = prime(args.p)?;
    let record = ComputeRecord::new(&JordanSolver::new(), pair, p)?;
    render::compute(out, &record, args.format)?;
    Ok(EXIT_OK)
}

fn table(args: &TableArgs, out: &mut dyn Write) -> Outcome {
    if args.m_max == 0 || args.n_max == 0 {
        return Err(Usage("--m-max and --n-max must be at least 1".into()));
    }
    let p = prime(args.p)?;
    let solver = JordanSolver::new();
    let mut rows = Vec::new();
    for m in 1..=args.m_max.min(args.n_max) {
        for n in m..=args.n_max {
            rows.push(ComputeRecord::new(&solver, pair(m, n)?, p)?);
        }
    }
    render::table(out, &rows, args.format)?;
    Ok(EXIT_OK)
}

fn oracle(args: &OracleArgs, out: &mut dyn Write) -> Outcome {
    let pair = pair(args.m, args.n)?;
    let p = prime(args.p)?;
    let limits = OracleLimits {
        max_dimension: args.max_entries,
    };
    let run = oracle_run(pair, p, limits)?;
    let record = OracleRecord::new(pair, p, &run);
    render::oracle(out, &record, args.format)?;
    Ok(EXIT_OK)
}

fn verify_cmd(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let suite: Suite = args.suite.parse()?;
    let execution = if args.parallel {
        Execution::Parallel
    } else {
        Execution::Serial
    };
    let cap = args.counterexample_cap;
    let primes: Vec<Prime<u64>> = if args.p.is_empty() {
        vec![prime(2)?]
    } else {
        args.p.iter().map(|&p| prime(p)).collect::<Result<_, _>>()?
    };

    let report = match suite {
        Suite::Theorem1 => {
            if primes.iter().any(|p| p.get() != 2) {
                return Err(Usage("theorem1 is a statement about p = 2".into()));
            }
            let (m_max, n_max) = bounds(args, 64, 256)?;
            verify::check_theorem1_with(m_max, n_max, cap, execution)
        }
        Suite::Periodicity | Suite::Reflection if args.m.is_some() || args.t.is_some() => {
            let (Some(m), Some(t)) = (args.m, args.t) else {
                return Err(Usage("--m and --t must be given together".into()));
            };
            let mut reports = Vec::new();
            for &p in &primes {
                let report = if suite == Suite::Periodicity {
                    let q = p
                        .get()
                        .checked_pow(t)
                        .ok_or(Usage("p^t overflows".into()))?;
                    verify::check_periodicity(m, t, p, args.n_max.unwrap_or(4 * q))?
                } else {
                    verify::check_reflection(m, t, p)?
                };
                reports.push(report);
            }
            VerifyReport::merged(suite.name(), reports, cap)
        }
        Suite::Periodicity => {
            let max_period = args.m_max.unwrap_or(32);
            verify::check_periodicity_grid(&primes, max_period, args.n_max, cap, execution)
        }
        Suite::Reflection => {
            let max_period = args.m_max.unwrap_or(32);
            verify::check_reflection_grid(&primes, max_period, cap, execution)
        }
        Suite::Invariants if args.samples.is_some() => {
            let n_max = args.n_max.unwrap_or(1024);
            let samples = args.samples.unwrap_or_default();
            let mut report =
                verify::sample_invariants(args.seed, samples, n_max, &primes, execution)?;
            report.failures.truncate(cap);
            report
        }
        Suite::Oracle | Suite::Corollary1 | Suite::Invariants => {
            let (m_max, n_max) = bounds(args, 16, 16)?;
            let spec = SweepSpec::new(m_max, n_max, primes, vec![suite])?
                .with_counterexample_cap(cap)
                .with_execution(execution)
                .with_oracle_limits(OracleLimits {
                    max_dimension: args.max_entries,
                });
            verify::run(&spec).remove(0)
        }
    };

    render::report(out, &report, args.format)?;
    if report.passed() {
        Ok(EXIT_OK)
    } else {
        if args.format != OutputFormat::Text {
            let _ = write!(err, "{report}");
        }
        Ok(EXIT_FAILURES)
    }
}

fn bounds(args: &VerifyArgs, m_default: u64, n_default: u64) -> Result<(u64, u64), Usage> {
    let m_max = args.m_max.unwrap_or(m_default);
    let n_max = args.n_max.unwrap_or(n_default.max(m_max));
    if m_max == 0 || m_max > n_max {
        return Err(Usage(format!(
            "need 1 <= --m-max <= --n-max (got {m_max}, {n_max})"
        )));
    }
    Ok((m_max, n_max))
}
