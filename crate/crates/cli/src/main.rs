//! `numrange`: numerical range of periodic tridiagonal operators.
//!
//! Exit status: 0 on success, 2 for an invalid job (nothing written), 3 for a
//! computation or I/O failure.
//!
//! A constant operator is given with its word doubled (`[x] -> [x, x]`). The
//! biinfinite hopping operator `A_a` on `ℓ²(ℤ)` (periodic `a` below the
//! diagonal, zeros on it, ones above) is not a separate input: its closed
//! numerical range is computed as that of `T(a, 0, 1)`.

mod config;
mod error;
mod job;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{JobConfig, Overrides};
use error::CliError;
use job::Command;

#[derive(Parser)]
#[command(name = "numrange", version, about = "Numerical range of periodic tridiagonal operators")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Full pipeline: every output listed in the job.
    Range(JobArgs),
    /// Range polynomial only (polynomial.json).
    Poly(JobArgs),
    /// P-support against the symbol and truncation oracles (oracles.csv).
    Oracle(JobArgs),
    /// Explicit 4x4 witness matrix for real 2-periodic words with b = 0.
    Witness(JobArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Job description (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output directory; overrides `output_dir`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    theta_samples: Option<usize>,
    #[arg(long)]
    phi_grid: Option<usize>,
    /// Size of the finite section used by the truncation oracle.
    #[arg(long)]
    truncation: Option<usize>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (command, args) = match cli.command {
        Sub::Range(a) => (Command::Range, a),
        Sub::Poly(a) => (Command::Poly, a),
        Sub::Oracle(a) => (Command::Oracle, a),
        Sub::Witness(a) => (Command::Witness, a),
    };
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::Config(format!("{}: {e}", args.config.display())))?;
    let overrides = Overrides {
        theta_samples: args.theta_samples,
        phi_grid: args.phi_grid,
        truncation_size: args.truncation,
        output_dir: args.out,
    };
    let job = JobConfig::parse(&text, &args.config.display().to_string(), &overrides)?;
    let artifacts = job::run(command, &job)?;
    for path in job::write_artifacts(&job.output_dir, &artifacts)? {
        println!("{}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
