//! `legpade`: build Legendre-basis Padé approximants from partial-wave
//! series and sweep them against partial sums and closed forms.

// NaN must fail validation checks, hence `!(x < y)` rather than `x >= y`
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod error;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "legpade",
    version,
    about = "Generalized Padé approximants on the Legendre basis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct the [L/M] approximant and write its coefficients as JSON.
    Construct(CommonArgs),
    /// Evaluate partial sum, approximant and closed form on an angle grid
    /// and write CSV.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Demo {
    /// c_l = 1, the series of 1/(2 sin(θ/2))
    Unit,
    /// Coulomb scattering with unit coupling
    Coulomb,
    /// First Born approximation for α/r²
    Invr2,
    /// Massive scalar wave on a Reissner–Nordström black hole
    Rn,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Built-in series.
    #[arg(long, value_enum, conflicts_with = "coeffs")]
    pub demo: Option<Demo>,
    /// CSV file with header `l,re,im` and one row per l = 0, 1, 2, ...
    #[arg(long)]
    pub coeffs: Option<PathBuf>,
    /// Highest partial-wave order kept (series c_0..c_N). Demos default to 8
    /// with a [3/3] split; for coefficient files it truncates.
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Numerator degree (defaults to ceil(N/2) when --N is given).
    #[arg(long = "L")]
    pub l: Option<usize>,
    /// Denominator degree (defaults to floor(N/2) when --N is given).
    #[arg(long = "M")]
    pub m: Option<usize>,
    /// Wavenumber for the coulomb and invr2 demos (default 1).
    #[arg(long)]
    pub k: Option<f64>,
    /// Coupling of the invr2 potential (default 1).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Charge-to-mass ratio Q/M for the rn demo (default 0.5).
    #[arg(long = "QoverM")]
    pub q_over_m: Option<f64>,
    /// Wavenumber η for the rn demo (default 1e-4).
    #[arg(long)]
    pub eta: Option<f64>,
    /// Field mass μ for the rn demo (default 1e-6).
    #[arg(long)]
    pub mu: Option<f64>,
    /// Black-hole mass M for the rn demo (default 10).
    #[arg(long)]
    pub mass: Option<f64>,
    /// Upper radial cutoff of the rn integrals, as R_max = factor/η (default 50).
    #[arg(long = "r-max-factor")]
    pub r_max_factor: Option<f64>,
    /// Relative horizon cutoff ε, integrals start at r_+(1+ε) (default 1e-8).
    #[arg(long = "horizon-eps")]
    pub horizon_eps: Option<f64>,
    /// Use exp(2iδ) − 1 in the rn series instead of exp(2iδ).
    #[arg(long = "subtract-one")]
    pub subtract_one: bool,
    /// Leave out the lπ/2 term of the rn zeroth-order phase.
    #[arg(long = "drop-l-phase")]
    pub drop_l_phase: bool,
    /// Output path (stdout when absent).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Config file of `key = value` lines using the long flag names; flags
    /// given on the command line win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Smallest angle in radians (default 0.05).
    #[arg(long = "theta-min", allow_negative_numbers = true)]
    pub theta_min: Option<f64>,
    /// Largest angle in radians, at most π (default π).
    #[arg(long = "theta-max", allow_negative_numbers = true)]
    pub theta_max: Option<f64>,
    /// Number of evenly spaced angles (default 400).
    #[arg(long)]
    pub steps: Option<usize>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct(args) => commands::construct(&args),
        Command::Compare(args) => commands::compare(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(4),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("legpade: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
