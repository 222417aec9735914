//! Command-line front end.
//!
//! Subcommands `interpolate`, `solve`, `kernel`, `sigma` and `bench`. Output
//! is compact JSON on stdout (or `--out FILE`), or a plain table with
//! `--pretty`. Exit codes: 0 success, 1 parse error, 2 invalid problem,
//! 3 inconsistent overdetermined system, 4 failed `--verify` check.

pub mod commands;
pub mod input;
mod table;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bench::run_bench;
use crate::error::Error;
use crate::field::{Field, Rational};
use commands::SolveResult;
use input::{Mode, ProblemInput, Sources};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "vandersolve", version, about = "Closed-form Vandermonde solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of the interpolating polynomial through (node, value) pairs.
    Interpolate(ProblemArgs),
    /// Particular solution and kernel basis of the p x n system.
    Solve(ProblemArgs),
    /// Kernel basis of the p x n Vandermonde matrix.
    Kernel(ProblemArgs),
    /// Monomial coefficients of the nodes.
    Sigma(ProblemArgs),
    /// Operation-count and timing comparison against Gaussian elimination.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Human-readable table instead of JSON.
    #[arg(long)]
    pub pretty: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Comma-separated nodes, e.g. 1,2,3 or 1/2,-3.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    pub nodes: Option<Vec<String>>,
    /// Comma-separated values, one per node.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    pub values: Option<Vec<String>>,
    /// Number of unknowns (columns).
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// CSV file with columns node[,value]; a header row is optional.
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    /// JSON file {"nodes": [...], "values": [...], "n": N, "mode": "exact"|"float"}.
    #[arg(long, value_name = "FILE")]
    pub json: Option<PathBuf>,
    /// Include every deflated row (sigma only).
    #[arg(long)]
    pub deflated: bool,
    /// Cross-check against Gaussian elimination.
    #[arg(long)]
    pub verify: bool,
    /// Use f64 arithmetic instead of exact rationals.
    #[arg(long)]
    pub float: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Strictly increasing system sizes.
    #[arg(long, value_delimiter = ',', num_args = 1, default_value = "256,512,1024")]
    pub sizes: Vec<usize>,
    /// Timing repetitions per size; the median is reported.
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// Accepted for symmetry; the benchmark always runs in f64.
    #[arg(long)]
    pub float: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Invalid(String),
    Verification(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => EXIT_PARSE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Verification(_) => EXIT_VERIFY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Invalid(m) => write!(f, "invalid problem: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

/// Rendered output plus the exit code it should produce.
struct Rendered {
    json: String,
    table: String,
    code: i32,
}

fn rendered<T: Serialize>(value: &T, table: String, code: i32) -> Result<Rendered, CliError> {
    let json = serde_json::to_string(value).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(Rendered { json, table, code })
}

fn problem(args: &ProblemArgs) -> Result<ProblemInput, CliError> {
    input::load(&Sources {
        nodes: args.nodes.as_deref(),
        values: args.values.as_deref(),
        n: args.n,
        csv: args.csv.as_ref(),
        json: args.json.as_ref(),
        float: args.float,
    })
}

fn execute<F: Field>(command: &Command, input: &ProblemInput) -> Result<Rendered, CliError> {
    match command {
        Command::Interpolate(args) => {
            let out = commands::interpolate_cmd::<F>(input, args.verify)?;
            rendered(&out, table::interpolate(&out), EXIT_OK)
        }
        Command::Solve(args) => match commands::solve_cmd::<F>(input, args.verify)? {
            SolveResult::Solved(out) => rendered(&out, table::solve(&out), EXIT_OK),
            SolveResult::Inconsistent(out) => rendered(&out, table::inconsistent(&out), EXIT_INCONSISTENT),
        },
        Command::Kernel(_) => {
            let out = commands::kernel_cmd::<F>(input)?;
            rendered(&out, table::kernel(&out), EXIT_OK)
        }
        Command::Sigma(args) => {
            let out = commands::sigma_cmd::<F>(input, args.deflated)?;
            rendered(&out, table::sigma(&out), EXIT_OK)
        }
        Command::Bench(_) => unreachable!("bench has no problem input"),
    }
}

fn dispatch(cli: &Cli) -> Result<(Rendered, &OutputArgs), CliError> {
    if let Command::Bench(args) = &cli.command {
        let report = run_bench(&args.sizes, args.reps)?;
        return Ok((rendered(&report, table::bench(&report), EXIT_OK)?, &args.output));
    }
    let args = match &cli.command {
        Command::Interpolate(a) | Command::Solve(a) | Command::Kernel(a) | Command::Sigma(a) => a,
        Command::Bench(_) => unreachable!(),
    };
    let input = problem(args)?;
    let out = match input.mode {
        Mode::Exact => execute::<Rational>(&cli.command, &input)?,
        Mode::Float => execute::<f64>(&cli.command, &input)?,
    };
    Ok((out, &args.output))
}

fn emit(out: &Rendered, args: &OutputArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut text = if args.pretty { out.table.clone() } else { out.json.clone() };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match &args.out {
        Some(path) => fs::write(path, text).map_err(io),
        None => stdout.write_all(text.as_bytes()).map_err(io),
    }
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = dispatch(&cli).and_then(|(out, args)| emit(&out, args, stdout).map(|()| out.code));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
