//! Command-line front end: `compute`, `verify` and `bench`.
//!
//! Exit codes: 0 success, 1 verification mismatch or other failure, 2 usage
//! error, 3 resource limit.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::applications::{two_triangular, Problem};
use crate::error::Error;
use crate::oracle::{brute_count, PairMode};
use crate::output::{write_series, OutputFormat, SeriesHeader};
use crate::recursion::{CountSeries, RecursionEvaluator, TheoremKind};
use crate::sequences::{ParitySequence, SequenceFile, DEFAULT_TABLE_BUDGET};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

const DEFAULT_ORACLE_CAP: u64 = 10_000;
const DEFAULT_VERIFY_N_MAX: u64 = 1_000;

#[derive(Debug, Parser)]
#[command(name = "addrep", version, about = "Representation counts of integers as sums over two sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a series and write it as a b-file, CSV or JSON.
    Compute(RunArgs),
    /// Compare the recursions against brute-force counts.
    Verify(RunArgs),
    /// Time the recursion against the brute-force count; CSV on stdout.
    Bench(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    OddOdd,
    EvenEven,
    EvenOdd,
}

impl From<TheoremArg> for TheoremKind {
    fn from(arg: TheoremArg) -> Self {
        match arg {
            TheoremArg::OddOdd => TheoremKind::OddOdd,
            TheoremArg::EvenEven => TheoremKind::EvenEven,
            TheoremArg::EvenOdd => TheoremKind::EvenOdd,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Built-in problem (goldbach, chen-odd-odd, chen-total, lemoine-levy,
    /// two-squares, two-triangular), `custom`, or `all` (verify only).
    #[arg(long)]
    pub problem: Option<String>,
    /// Largest index n for built-in problems.
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Largest argument x for custom sequences.
    #[arg(long)]
    pub x_max: Option<u64>,
    #[arg(long, default_value_t = OutputFormat::Bfile)]
    pub format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// First custom sequence file.
    #[arg(long)]
    pub seq_a: Option<PathBuf>,
    /// Second custom sequence file.
    #[arg(long)]
    pub seq_b: Option<PathBuf>,
    /// Case for custom sequences; inferred from their parities if omitted.
    #[arg(long, value_enum)]
    pub theorem: Option<TheoremArg>,
    /// Largest table (in entries) any single sieve or sequence may allocate.
    #[arg(long, default_value_t = DEFAULT_TABLE_BUDGET)]
    pub limit: u64,
    /// Largest argument the brute-force check may be asked to reach.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Compute,
    Verify,
    Bench,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Builtin(Problem),
    All,
    Custom {
        theorem: TheoremKind,
        seq_a: SequenceFile,
        seq_b: SequenceFile,
    },
}

/// Validated command configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub target: Target,
    /// `n_max` for built-in problems, `x_max` for custom sequences.
    pub range: Option<u64>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub budget: u64,
    pub oracle_cap: u64,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(Error),
    Mismatch(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Mismatch(_) | CliError::Failed(_) => EXIT_MISMATCH,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Resource(err) => write!(f, "resource limit: {err}"),
            CliError::Mismatch(msg) => write!(f, "verification failed: {msg}"),
            CliError::Failed(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::ResourceLimit { .. } | Error::LimitExceeded { .. } => CliError::Resource(err),
            Error::InvalidSequence(_)
            | Error::Parse { .. }
            | Error::ParityMismatch { .. }
            | Error::LimitMismatch { .. }
            | Error::BadArgument { .. }
            | Error::OutOfRange { .. } => CliError::Usage(err.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Failed(err.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            let _ = writeln!(stderr, "{err}");
            err.exit_code()
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> CliResult<()> {
    let (kind, args) = match cli.command {
        Command::Compute(args) => (CommandKind::Compute, args),
        Command::Verify(args) => (CommandKind::Verify, args),
        Command::Bench(args) => (CommandKind::Bench, args),
    };
    let config = RunConfig::from_args(kind, args)?;
    match config.command {
        CommandKind::Compute => cmd_compute(&config, stdout),
        CommandKind::Verify => cmd_verify(&config, stdout),
        CommandKind::Bench => cmd_bench(&config, stdout),
    }
}

fn read_sequence_file(path: &Path) -> CliResult<SequenceFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    SequenceFile::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

impl RunConfig {
    pub fn from_args(command: CommandKind, args: RunArgs) -> CliResult<Self> {
        let problem = match (&args.problem, command) {
            (Some(p), _) => p.clone(),
            (None, CommandKind::Verify) => "all".to_string(),
            (None, _) => return Err(CliError::Usage("--problem is required".into())),
        };
        let target = match problem.as_str() {
            "all" if command == CommandKind::Verify => Target::All,
            "custom" => {
                let (Some(a), Some(b)) = (&args.seq_a, &args.seq_b) else {
                    return Err(CliError::Usage("custom problems need --seq-a and --seq-b".into()));
                };
                if command == CommandKind::Bench {
                    return Err(CliError::Usage("bench runs on built-in problems only".into()));
                }
                let seq_a = read_sequence_file(a)?;
                let seq_b = read_sequence_file(b)?;
                let inferred = TheoremKind::from_parities(seq_a.parity, seq_b.parity).ok_or_else(|| {
                    CliError::Usage("for mixed parities pass the even sequence as --seq-a".into())
                })?;
                let theorem = match args.theorem {
                    Some(t) if TheoremKind::from(t) != inferred => {
                        return Err(CliError::Usage(format!(
                            "--theorem {} does not match sequence parities ({} / {})",
                            TheoremKind::from(t).name(),
                            seq_a.parity,
                            seq_b.parity
                        )))
                    }
                    _ => inferred,
                };
                Target::Custom {
                    theorem,
                    seq_a,
                    seq_b,
                }
            }
            slug => Target::Builtin(slug.parse().map_err(CliError::Usage)?),
        };
        let range = match &target {
            Target::Custom { .. } => {
                if args.n_max.is_some() {
                    return Err(CliError::Usage("custom problems take --x-max, not --n-max".into()));
                }
                args.x_max
            }
            _ => {
                if args.x_max.is_some() {
                    return Err(CliError::Usage("built-in problems take --n-max, not --x-max".into()));
                }
                args.n_max
            }
        };
        if range.is_none() && command != CommandKind::Verify {
            return Err(CliError::Usage("missing --n-max / --x-max".into()));
        }
        Ok(RunConfig {
            command,
            target,
            range,
            format: args.format,
            out: args.out,
            budget: args.limit,
            oracle_cap: args.oracle_cap,
        })
    }
}

fn check_budget(x_max: u64, budget: u64) -> CliResult<()> {
    let requested = x_max.saturating_add(1);
    if requested > budget {
        return Err(CliError::Resource(Error::ResourceLimit { requested, budget }));
    }
    Ok(())
}

fn check_builtin_range(problem: Problem, n_max: u64) -> CliResult<()> {
    let first = problem.spec().first_n;
    if n_max < first {
        return Err(CliError::Usage(format!(
            "--n-max for {problem} must be at least {first}"
        )));
    }
    Ok(())
}

fn builtin_header(problem: Problem) -> SeriesHeader {
    let spec = problem.spec();
    SeriesHeader {
        name: spec.slug.to_string(),
        description: format!("a(n) = number of {}", spec.description),
        argument: format!("n >= {}, {}", spec.first_n, spec.argument_map),
        oeis: spec.oeis.map(str::to_string),
    }
}

/// Materializes both custom sequence files to a common limit covering
/// `x_max`.
fn custom_sequences(
    seq_a: &SequenceFile,
    seq_b: &SequenceFile,
    x_max: u64,
    budget: u64,
) -> CliResult<(ParitySequence, ParitySequence)> {
    let last = |f: &SequenceFile| f.terms.last().copied().unwrap_or(0);
    let limit = match (seq_a.limit, seq_b.limit) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::LimitMismatch { left: a, right: b }.into());
        }
        (Some(a), _) | (_, Some(a)) => a,
        (None, None) => x_max.max(last(seq_a)).max(last(seq_b)),
    };
    check_budget(limit, budget)?;
    let a = seq_a.to_sequence(limit, budget)?;
    let b = seq_b.to_sequence(limit, budget)?;
    if a.limit() != b.limit() {
        return Err(Error::LimitMismatch {
            left: a.limit(),
            right: b.limit(),
        }
        .into());
    }
    Ok((a, b))
}

fn custom_series(theorem: TheoremKind, a: &ParitySequence, b: &ParitySequence, x_max: u64) -> CliResult<CountSeries> {
    let mut ev = RecursionEvaluator::new(theorem, a, b)?;
    ev.run_to(x_max)?;
    Ok(ev.into_series())
}

fn open_output(config: &RunConfig, stdout: &mut dyn Write, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> CliResult<()> {
    match &config.out {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| CliError::Failed(format!("cannot create {}: {e}", path.display())))?;
            let mut writer = io::BufWriter::new(file);
            write(&mut writer)?;
            writer.flush()?;
        }
        None => write(stdout)?,
    }
    Ok(())
}

pub fn cmd_compute(config: &RunConfig, stdout: &mut dyn Write) -> CliResult<()> {
    let range = config.range.expect("validated");
    let (header, series) = match &config.target {
        Target::Builtin(problem) => {
            check_builtin_range(*problem, range)?;
            check_budget(problem.argument(range), config.budget)?;
            (builtin_header(*problem), problem.compute(range)?)
        }
        Target::Custom {
            theorem,
            seq_a,
            seq_b,
        } => {
            let (a, b) = custom_sequences(seq_a, seq_b, range, config.budget)?;
            let series = custom_series(*theorem, &a, &b, range)?;
            let header = SeriesHeader {
                name: format!("custom {}", theorem.name()),
                description: "a(x) = number of representations x = a + b, a from --seq-a, b from --seq-b".into(),
                argument: format!("x >= {}, step 2", theorem.base()),
                oeis: None,
            };
            (header, series)
        }
        Target::All => return Err(CliError::Usage("compute needs a single problem".into())),
    };
    open_output(config, stdout, |w| write_series(w, config.format, &header, &series))
}

/// Outcome of checking one built-in problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub problem: Problem,
    pub terms: usize,
    pub published_checked: usize,
    pub first_mismatch: Option<String>,
}

/// Compares the problem's own recursion, the generic evaluator, brute force
/// and (over their range) the published terms.
pub fn verify_problem(problem: Problem, n_max: u64) -> crate::Result<VerifyReport> {
    let own = problem.compute(n_max)?;
    let generic = problem.compute_generic(n_max)?;
    let oracle = problem.compute_oracle(n_max)?;
    let lemma = match problem {
        Problem::TwoSquares => Some(two_triangular(n_max)?),
        _ => None,
    };
    let published = problem.published_terms();
    let mut first_mismatch = None;
    for (i, (n, value)) in own.iter().enumerate() {
        let g = generic.values()[i];
        let o = oracle.values()[i];
        let p = published.get(i).copied();
        let t = lemma.as_ref().map(|s| s.values()[i]);
        if value != g || value != o || p.is_some_and(|p| p != value) || t.is_some_and(|t| t != value) {
            let mut msg = format!(
                "{problem}: n = {n} (x = {}): recursion = {value}, generic = {g}, oracle = {o}",
                problem.argument(n)
            );
            if let Some(p) = p {
                msg.push_str(&format!(", published = {p}"));
            }
            if let Some(t) = t {
                msg.push_str(&format!(", two-triangular = {t}"));
            }
            first_mismatch = Some(msg);
            break;
        }
    }
    Ok(VerifyReport {
        problem,
        terms: own.len(),
        published_checked: published.len().min(own.len()),
        first_mismatch,
    })
}

pub fn cmd_verify(config: &RunConfig, stdout: &mut dyn Write) -> CliResult<()> {
    match &config.target {
        Target::Custom {
            theorem,
            seq_a,
            seq_b,
        } => {
            let x_max = config
                .range
                .ok_or_else(|| CliError::Usage("custom verification needs --x-max".into()))?;
            if x_max > config.oracle_cap {
                return Err(CliError::Usage(format!(
                    "--x-max {x_max} exceeds the oracle cap {}",
                    config.oracle_cap
                )));
            }
            let (a, b) = custom_sequences(seq_a, seq_b, x_max, config.budget)?;
            let series = custom_series(*theorem, &a, &b, x_max)?;
            let mode = match theorem {
                TheoremKind::EvenOdd => PairMode::RoleTagged,
                _ => PairMode::Unordered,
            };
            for (x, value) in series.iter() {
                let oracle = brute_count(&a, &b, x, mode)?.count();
                if oracle != value {
                    let msg = format!("custom: x = {x}: recursion = {value}, oracle = {oracle}");
                    writeln!(stdout, "FAIL {msg}")?;
                    return Err(CliError::Mismatch(msg));
                }
            }
            writeln!(stdout, "PASS custom {}: {} terms", theorem.name(), series.len())?;
            Ok(())
        }
        Target::Builtin(_) | Target::All => {
            let problems: Vec<Problem> = match config.target {
                Target::Builtin(p) => vec![p],
                _ => Problem::ALL.to_vec(),
            };
            let n_max = config.range.unwrap_or(DEFAULT_VERIFY_N_MAX);
            for &problem in &problems {
                check_builtin_range(problem, n_max)?;
                let x_max = problem.argument(n_max);
                if x_max > config.oracle_cap {
                    return Err(CliError::Usage(format!(
                        "{problem}: argument {x_max} for n = {n_max} exceeds the oracle cap {}",
                        config.oracle_cap
                    )));
                }
                check_budget(x_max, config.budget)?;
            }
            let reports: Vec<crate::Result<VerifyReport>> = thread::scope(|scope| {
                let handles: Vec<_> = problems
                    .iter()
                    .map(|&p| scope.spawn(move || verify_problem(p, n_max)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("verification thread panicked"))
                    .collect()
            });
            let mut failure = None;
            for report in reports {
                let report = report?;
                match &report.first_mismatch {
                    None => writeln!(
                        stdout,
                        "PASS {}: {} terms (recursion = generic = oracle; {} published terms match)",
                        report.problem, report.terms, report.published_checked
                    )?,
                    Some(msg) => {
                        writeln!(stdout, "FAIL {msg}")?;
                        failure.get_or_insert_with(|| msg.clone());
                    }
                }
            }
            match failure {
                Some(msg) => Err(CliError::Mismatch(msg)),
                None => Ok(()),
            }
        }
    }
}

fn time<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

/// Index values 10, 100, 1000, ... below `n_max`, then `n_max` itself.
pub fn bench_steps(first: u64, n_max: u64) -> Vec<u64> {
    let mut steps: Vec<u64> = std::iter::successors(Some(10u64), |s| s.checked_mul(10))
        .take_while(|&s| s < n_max)
        .filter(|&s| s >= first)
        .collect();
    steps.push(n_max);
    steps
}

pub fn cmd_bench(config: &RunConfig, stdout: &mut dyn Write) -> CliResult<()> {
    let Target::Builtin(problem) = config.target else {
        return Err(CliError::Usage("bench needs a single built-in problem".into()));
    };
    let n_max = config.range.expect("validated");
    check_builtin_range(problem, n_max)?;
    check_budget(problem.argument(n_max), config.budget)?;
    writeln!(stdout, "n_max,recursion_seconds,oracle_seconds,lemma1")?;
    for n in bench_steps(problem.spec().first_n, n_max) {
        let (own, recursion_time) = time(|| problem.compute(n));
        let own = own?;
        let (oracle, oracle_time) = time(|| problem.compute_oracle(n));
        let oracle = oracle?;
        if own != oracle {
            return Err(CliError::Mismatch(format!("{problem}: recursion and oracle differ at n_max = {n}")));
        }
        let lemma = match problem {
            Problem::TwoSquares => {
                if two_triangular(n)?.values() == own.values() {
                    "OK"
                } else {
                    "MISMATCH"
                }
            }
            _ => "-",
        };
        writeln!(
            stdout,
            "{n},{:.6},{:.6},{lemma}",
            recursion_time.as_secs_f64(),
            oracle_time.as_secs_f64()
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("addrep").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["compute"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--problem", "nope", "--n-max", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--problem", "goldbach"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--problem", "goldbach", "--x-max", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--problem", "goldbach", "--n-max", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--problem", "goldbach", "--n-max", "3", "--format", "xml"]).0, EXIT_USAGE);
    }

    #[test]
    fn resource_limit() {
        let (code, _, err) = run_args(&["compute", "--problem", "goldbach", "--n-max", "1000", "--limit", "100"]);
        assert_eq!(code, EXIT_RESOURCE);
        assert!(err.contains("resource limit"));
    }

    #[test]
    fn oracle_cap() {
        let (code, _, _) = run_args(&["verify", "--problem", "goldbach", "--n-max", "100", "--oracle-cap", "50"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn steps() {
        assert_eq!(bench_steps(1, 10), vec![10]);
        assert_eq!(bench_steps(1, 5), vec![5]);
        assert_eq!(bench_steps(1, 10_000), vec![10, 100, 1000, 10_000]);
        assert_eq!(bench_steps(0, 2500), vec![10, 100, 1000, 2500]);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("compute"));
    }
}
