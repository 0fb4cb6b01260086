//! Command-line front end for the `oddzeta` evaluators.
//!
//! [`run`] parses an argument vector, evaluates one subcommand and writes a
//! report as CSV, JSON or aligned text. Exit codes: `0` on success, `1` on
//! usage errors (bad flags, unknown ids, invalid configuration), `2` when
//! the numerics reject the request (domain, pole, accuracy, …).

mod commands;
mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use oddzeta::numerics::{DEFAULT_DIGITS, MIN_DIGITS};
use oddzeta::prime_tail::DEFAULT_PRIME_CAP;
use oddzeta::{Real, ZetaError};
use thiserror::Error;

pub use report::{Cell, OutputFormat, Report};

#[derive(Parser, Debug)]
#[command(
    name = "oddzeta",
    version,
    about = "High-precision zeta evaluations, tables and formula audits"
)]
struct Cli {
    /// Working precision in significant decimal digits (at least 15)
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS)]
    digits: u32,

    /// Absolute tolerance; must not be below 10^-(digits-5)
    #[arg(long, global = true, default_value = "1e-30")]
    tol: String,

    /// Largest prime used by the truncated Euler product
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_CAP)]
    prime_cap: u64,

    /// Report encoding
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate zeta at one point with a chosen method
    Eval(EvalArgs),
    /// Closed-form odd-argument values against the Dirichlet series
    OddTable(OddTableArgs),
    /// Scan the f-ratio over a range of s
    Fscan(FscanArgs),
    /// Evaluate zeta on the line Re(s) = 1
    Line1(Line1Args),
    /// Alternating series at the zeros of 1 - 2^(1-s) on Re(s) = 1
    Zeros(ZerosArgs),
    /// Uniform-norm probe of a kernel family against its analytic bound
    Probe(ProbeArgs),
    /// Compare printed formulas against independent oracles
    Forensics(ForensicsArgs),
    /// Accuracy and cost of the odd-argument representations side by side
    Compare(CompareArgs),
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Real part of s (or the whole argument for real methods)
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,

    /// Imaginary part of s; only the eta method on Re(s) = 1 accepts it
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,

    /// Evaluation method
    #[arg(long, value_enum, default_value_t = EvalMethod::Dirichlet)]
    method: EvalMethod,

    /// Linking constant for the odd-approx method
    #[arg(long, default_value = "2")]
    f: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum EvalMethod {
    Dirichlet,
    Eta,
    Euler,
    EvenClosed,
    EvenRecurrence,
    OddApprox,
    Ref3,
    Ref5,
    Ref7,
    Eq23,
    Eq24,
    Eq25,
    Eq26,
}

#[derive(Args, Debug)]
struct OddTableArgs {
    /// Largest odd argument in the table
    #[arg(long, default_value_t = 15)]
    max: u32,

    /// Linking constant f
    #[arg(long, default_value = "2")]
    f: String,
}

#[derive(Args, Debug)]
struct FscanArgs {
    /// First s of the scan
    #[arg(long, default_value_t = 1)]
    s_min: u32,

    /// Last s of the scan (inclusive)
    #[arg(long, default_value_t = 15)]
    s_max: u32,

    /// Prime-tail incarnation used in the ratio
    #[arg(long, value_enum, default_value_t = FscanMode::Closed)]
    mode: FscanMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum FscanMode {
    Closed,
    Direct,
}

#[derive(Args, Debug)]
struct Line1Args {
    /// Ordinate b of s = 1 + ib
    #[arg(long, allow_hyphen_values = true)]
    b: String,

    /// Evaluation method
    #[arg(long, value_enum, default_value_t = Line1Method::Eta)]
    method: Line1Method,

    /// Starting acceleration order for the flat series
    #[arg(long, default_value_t = 40)]
    order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Line1Method {
    Eta,
    Flat,
    Integral,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    /// Index k, or an inclusive range a..b
    #[arg(long, allow_hyphen_values = true)]
    k: String,
}

#[derive(Args, Debug)]
struct ProbeArgs {
    /// Kernel family: 1, 2i or 2ii
    #[arg(long)]
    lemma: String,

    /// Index n of the kernel
    #[arg(long)]
    n: u32,

    /// Power k (ignored by lemma 1)
    #[arg(long, default_value_t = 2)]
    k: u32,

    /// Ordinate b inside the kernel
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b: String,

    /// Number of grid points for the supremum
    #[arg(long, default_value_t = 1000)]
    grid: usize,
}

#[derive(Args, Debug)]
struct ForensicsArgs {
    /// Comma-separated formula ids, or `all`
    #[arg(long, default_value = "all")]
    ids: String,
}

#[derive(Args, Debug)]
struct CompareArgs {
    /// Compare zeta(3), zeta(5), …, zeta(2 n_max + 1)
    #[arg(long, default_value_t = 3)]
    n_max: u32,

    /// Add wall-clock columns (makes the report non-reproducible)
    #[arg(long, default_value_t = false)]
    timing: bool,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub digits: u32,
    pub tol: Real,
    pub prime_bound_cap: u64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    /// Checks `digits ≥ 15` and `10^{−(digits−5)} ≤ tol`.
    pub fn new(
        digits: u32,
        tol: &str,
        prime_bound_cap: u64,
        output_format: OutputFormat,
        output_path: Option<PathBuf>,
    ) -> Result<Self, ZetaError> {
        if digits < MIN_DIGITS {
            return Err(ZetaError::Config(format!(
                "--digits must be at least {MIN_DIGITS} (got {digits})"
            )));
        }
        let tol = Real::parse(tol, digits)?;
        let floor = Real::pow10(-(digits as i32 - 5), digits);
        if !tol.is_positive() || tol < floor {
            return Err(ZetaError::Config(format!(
                "--tol must lie in [1e-{}, inf) at {digits} digits (got {})",
                digits - 5,
                tol.to_sci(6)
            )));
        }
        if prime_bound_cap < 2 {
            return Err(ZetaError::Config("--prime-cap must be at least 2".into()));
        }
        Ok(RunConfig {
            digits,
            tol,
            prime_bound_cap,
            output_format,
            output_path,
        })
    }

    pub fn real(&self, text: &str) -> Result<Real, ZetaError> {
        Real::parse(text.trim(), self.digits)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Zeta(ZetaError::Config(_) | ZetaError::Parse(_)) => 1,
            _ => 2,
        }
    }
}

/// Runs the tool on `argv` (program name first), writing the report to
/// standard output or `--out` and diagnostics to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit report and diagnostic streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = RunConfig::new(cli.digits, &cli.tol, cli.prime_cap, cli.format, cli.out)?;
    let report = commands::dispatch(&cli.command, &cfg)?;
    match &cfg.output_path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            report.write(cfg.output_format, cfg.digits, &cfg.tol, &mut w)?;
            w.flush()?;
        }
        None => report.write(cfg.output_format, cfg.digits, &cfg.tol, out)?,
    }
    Ok(())
}
