//! Command-line front end: `decompose`, `hvi` and `bench`.
//!
//! Documents and tables go to standard output, messages to standard error.
//! Exit codes: 0 success, 2 usage or validation error, 3 violated invariant.

mod bench;
pub mod document;
pub mod pointfile;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::decompose::{count_bound, decompose, DecomposeConfig, Decomposition};
use crate::front::pareto_filter;
use crate::geometry::Point;
use crate::hvimprove::hvi_batch;

pub use bench::BenchArgs;
pub use document::DecompositionDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

/// Alpha used when neither `--alpha` nor `--exact` is given.
pub const DEFAULT_ALPHA: f64 = 1e-3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

impl From<crate::error::Error> for CliError {
    fn from(e: crate::error::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<pointfile::PointFileError> for CliError {
    fn from(e: pointfile::PointFileError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hvbox",
    version,
    about = "Box decomposition for fast hypervolume improvement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose the non-dominated space of a point file and print the JSON document.
    Decompose(DecomposeArgs),
    /// Evaluate hypervolume improvement for candidate points.
    Hvi(HviArgs),
    /// Sweep random fronts and report decomposition diagnostics.
    Bench(BenchArgs),
}

/// Decomposition settings shared by `decompose` and `hvi`.
#[derive(Debug, Clone, Args)]
struct ConfigArgs {
    /// Relative volume tolerance in [0,1).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "exact")]
    alpha: Option<f64>,
    /// Exact decomposition, same as --alpha 0.
    #[arg(long)]
    exact: bool,
    /// Reference point "r1,...,rM"; clips the upper grid bound to it.
    #[arg(long = "ref", value_name = "R", allow_hyphen_values = true)]
    reference: Option<String>,
    /// Ideal point "z1,...,zM"; replaces the lower grid bound.
    #[arg(long, allow_hyphen_values = true)]
    ideal: Option<String>,
}

impl ConfigArgs {
    fn to_config(&self) -> Result<DecomposeConfig, CliError> {
        let alpha = if self.exact {
            0.0
        } else {
            self.alpha.unwrap_or(DEFAULT_ALPHA)
        };
        if !(0.0..1.0).contains(&alpha) {
            return Err(CliError::Usage(format!(
                "alpha must be in [0,1), got {alpha}"
            )));
        }
        let mut config = DecomposeConfig::new(alpha);
        if let Some(r) = &self.reference {
            config = config.with_reference(parse_point_flag("--ref", r)?);
        }
        if let Some(z) = &self.ideal {
            config = config.with_ideal(parse_point_flag("--ideal", z)?);
        }
        Ok(config)
    }
}

fn parse_point_flag(flag: &str, text: &str) -> Result<Point, CliError> {
    let coords =
        pointfile::parse_coords(text).map_err(|e| CliError::Usage(format!("{flag}: {e}")))?;
    Point::new(coords).map_err(|e| CliError::Usage(format!("{flag}: {e}")))
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    /// Point file: one comma-separated point per line.
    input: PathBuf,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Debug, Args)]
struct HviArgs {
    /// Candidate point file.
    #[arg(long)]
    candidates: PathBuf,
    /// Decomposition document written by `hvbox decompose`.
    #[arg(long, conflicts_with = "front", required_unless_present = "front")]
    doc: Option<PathBuf>,
    /// Point file to decompose on the fly.
    #[arg(long)]
    front: Option<PathBuf>,
    #[command(flatten)]
    config: ConfigArgs,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Decompose(a) => cmd_decompose(&a, out, err),
        Command::Hvi(a) => cmd_hvi(&a, out),
        Command::Bench(a) => bench::cmd_bench(&a, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn decompose_file(path: &std::path::Path, config: &ConfigArgs) -> Result<Decomposition, CliError> {
    let config = config.to_config()?;
    let points = pointfile::read_point_file(path)?;
    let front = pareto_filter(&points)?;
    let decomp = decompose(&front, &config)?;
    check_count_bound(&decomp)?;
    Ok(decomp)
}

fn check_count_bound(decomp: &Decomposition) -> Result<(), CliError> {
    let alpha = decomp.config().alpha;
    if alpha > 0.0 {
        let k = decomp.boxes().len();
        if k as f64 > 2.0 / alpha || k > count_bound(alpha)? {
            return Err(CliError::Invariant(format!(
                "{k} boxes exceed the bound 2/alpha = {}",
                2.0 / alpha
            )));
        }
    }
    Ok(())
}

fn cmd_decompose(
    args: &DecomposeArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let decomp = decompose_file(&args.input, &args.config)?;
    let doc = DecompositionDocument::from_decomposition(&decomp);
    out.write_all(doc.to_json().as_bytes())?;
    let d = decomp.diagnostics();
    writeln!(
        err,
        "N={} M={} alpha={} boxes={} iterations={} max_depth={}",
        decomp.front().len(),
        decomp.dim(),
        decomp.config().alpha,
        d.accepted,
        d.iterations,
        d.max_depth
    )?;
    Ok(())
}

fn cmd_hvi(args: &HviArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let decomp = match (&args.doc, &args.front) {
        (Some(doc), _) => {
            let text = std::fs::read_to_string(doc)
                .map_err(|e| CliError::Usage(format!("{}: {e}", doc.display())))?;
            let doc = DecompositionDocument::from_json(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", doc.display())))?;
            doc.to_decomposition()?
        }
        (None, Some(front)) => decompose_file(front, &args.config)?,
        (None, None) => {
            return Err(CliError::Usage(
                "one of --doc or --front is required".into(),
            ))
        }
    };
    let candidates = pointfile::read_point_file(&args.candidates)?;
    let batch = hvi_batch(&decomp, &candidates)?;
    writeln!(out, "index\tcandidate\thvi\tbelow_bound")?;
    for (i, c) in candidates.iter().enumerate() {
        let coords: Vec<String> = c.coords().iter().map(f64::to_string).collect();
        writeln!(
            out,
            "{i}\t{}\t{}\t{}",
            coords.join(","),
            format_significant(batch.values[i]),
            batch.below_bound[i]
        )?;
    }
    Ok(())
}

/// Fixed-point rendering with 12 significant digits.
pub fn format_significant(value: f64) -> String {
    const DIGITS: i32 = 12;
    // exponent after rounding to DIGITS significant digits
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, value);
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    let decimals = (DIGITS - 1 - exp).max(0) as usize;
    format!("{value:.decimals$}")
}
