//! Command-line front end for `hqho`.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation error, 3 a numerical
//! check failed.

use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hqho::PhysicalParams;

pub mod commands;
pub mod descriptor;
pub mod report;
pub mod verify;

use descriptor::{parse_descriptors, BuildOptions, StateDescriptor};
use report::{CommandEcho, Footer, ParamsEcho, Report, Results};

/// Agreement threshold used when `--tol` is absent.
pub const DEFAULT_TOL: f64 = 1e-10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Validation(_) => EXIT_VALIDATION,
        }
    }
}

impl From<hqho::Error> for CliError {
    fn from(e: hqho::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Ladder,
    Residual,
    Radial,
    Angular,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "hqho", version, about = "Quaternionic harmonic oscillator reports")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Line-delimited JSON state descriptors; `-` reads standard input.
    #[arg(long, global = true, value_name = "FILE|-")]
    pub states: Option<String>,

    #[arg(long, global = true, default_value_t = 0.0, allow_negative_numbers = true)]
    pub time: f64,

    /// Defaults to json, or csv for `sample`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mu: f64,

    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,

    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,

    /// Agreement threshold for spectrum deltas and the Gram orthogonality
    /// flag (default 1e-10). For `verify` it replaces every upper bound.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,

    /// Gauss–Hermite order of the quadrature cross-check. Spherical harmonics
    /// use this many Gauss–Legendre nodes and twice as many azimuthal ones.
    #[arg(long, global = true, default_value_t = 64)]
    pub quad_order: usize,

    /// Conjugate the `j` slot harmonic of spherical descriptors.
    #[arg(long, global = true)]
    pub conjugate_angular: bool,

    /// Let split states share directions between the two slots.
    #[arg(long, global = true)]
    pub allow_overlap: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Energies from the closed form and from `<Ĥ>`.
    Spectrum,
    /// Gram matrix of real inner products.
    Gram,
    /// Run an invariant suite.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Tabulate a single 1-D or radial state on a uniform grid.
    Sample {
        #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
        min: f64,
        #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
        max: f64,
        #[arg(long, default_value_t = 9)]
        count: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Gram => "gram",
            Command::Verify { .. } => "verify",
            Command::Sample { .. } => "sample",
        }
    }
}

/// What the process should print and how it should exit.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(e: CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("hqho: {e}\n"), code: e.exit_code() }
    }
}

fn read_states(cli: &Cli, stdin: &mut dyn Read) -> Result<Vec<StateDescriptor>, CliError> {
    let src = cli
        .states
        .as_deref()
        .ok_or_else(|| CliError::Usage("--states FILE|- is required for this command".into()))?;
    let text = if src == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(src).map_err(|e| CliError::Usage(format!("reading {src}: {e}")))?
    };
    let states = parse_descriptors(&text)?;
    if states.is_empty() {
        return Err(CliError::Usage("no state descriptors given".into()));
    }
    Ok(states)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(Vec<StateDescriptor>, Results), CliError> {
    if !cli.time.is_finite() {
        return Err(CliError::Validation("--time must be finite".into()));
    }
    if cli.tol.is_some_and(|t| t.is_nan() || t < 0.0) {
        return Err(CliError::Validation("--tol must be non-negative".into()));
    }
    if cli.quad_order == 0 {
        return Err(CliError::Validation("--quad-order must be positive".into()));
    }
    let opts = BuildOptions {
        params: PhysicalParams::new(cli.mu, cli.omega, cli.hbar)?,
        allow_overlap: cli.allow_overlap,
        conjugate_angular: cli.conjugate_angular,
    };
    match &cli.command {
        Command::Verify { suite } => Ok((Vec::new(), verify::run(*suite, &opts, cli.tol)?)),
        Command::Spectrum => {
            let states = read_states(cli, stdin)?;
            let rows = commands::spectrum(&states, &opts, cli.time, cli.quad_order, cli.tol.unwrap_or(DEFAULT_TOL))?;
            Ok((states, Results::Spectrum { rows }))
        }
        Command::Gram => {
            let states = read_states(cli, stdin)?;
            let g = commands::gram(&states, &opts, cli.time, cli.quad_order, cli.tol.unwrap_or(DEFAULT_TOL))?;
            Ok((states, Results::Gram(g)))
        }
        Command::Sample { min, max, count } => {
            let states = read_states(cli, stdin)?;
            let rows = commands::sample(&states, &opts, cli.time, *min, *max, *count)?;
            Ok((states, Results::Sample { rows }))
        }
    }
}

/// Run a parsed command line against the given standard input.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let start = Instant::now();
    let (inputs, results) = match execute(cli, stdin) {
        Ok(v) => v,
        Err(e) => return Outcome::error(e),
    };
    let code = match &results {
        Results::Verify(v) if !v.all_pass => EXIT_CHECK_FAILED,
        _ => EXIT_OK,
    };
    let report = Report {
        command: CommandEcho {
            name: cli.command.name().into(),
            time: cli.time,
            quad_order: cli.quad_order,
            conjugate_angular: cli.conjugate_angular,
            allow_overlap: cli.allow_overlap,
        },
        params: ParamsEcho { mu: cli.mu, omega: cli.omega, hbar: cli.hbar },
        tolerance: match cli.command {
            Command::Verify { .. } => cli.tol,
            _ => Some(cli.tol.unwrap_or(DEFAULT_TOL)),
        },
        inputs,
        results,
        footer: Footer { wall_time_s: start.elapsed().as_secs_f64() },
    };
    let default_format = match cli.command {
        Command::Sample { .. } => Format::Csv,
        _ => Format::Json,
    };
    match cli.format.unwrap_or(default_format) {
        Format::Json => Outcome { stdout: report.to_json(), stderr: String::new(), code },
        Format::Csv => match report.to_csv() {
            Ok(stdout) => Outcome { stdout, stderr: format!("wall_time_s={}\n", report.footer.wall_time_s), code },
            Err(e) => Outcome::error(CliError::Validation(format!("csv output: {e}"))),
        },
    }
}
