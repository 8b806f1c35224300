//! Subcommand pipelines. Each returns the artifacts as `(file name, contents)`
//! and touches the file system only afterwards, so a failed run writes
//! nothing.

use std::fs;
use std::path::{Path, PathBuf};

use numrange::{
    boundary_shape, explicit_matrix_2periodic, oracle_matrix_support, Error, SupportFunction, SymbolOracle,
    TruncationOracle,
};

use crate::config::{JobConfig, Output};
use crate::error::CliError;
use crate::output;

pub type Artifact = (&'static str, String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Every output listed in the config.
    Range,
    Poly,
    Oracle,
    Witness,
}

pub fn run(command: Command, job: &JobConfig) -> Result<Vec<Artifact>, CliError> {
    let forms = job.operator.coupling_forms();
    let support = SupportFunction::new(&forms).map_err(CliError::compute("range polynomial"))?;
    let wants = |o: Output| match command {
        Command::Range => job.outputs.contains(&o),
        Command::Poly => o == Output::PolynomialJson,
        Command::Oracle => o == Output::OraclesCsv,
        Command::Witness => false,
    };

    let mut artifacts = Vec::new();
    if command == Command::Witness {
        let s = explicit_matrix_2periodic(&forms).map_err(|e| match e {
            Error::PreconditionViolated(msg) => CliError::Config(format!("witness: {msg}")),
            other => CliError::compute("witness matrix")(other),
        })?;
        let rows = numrange::numrange::uniform_angles::<f64>(job.theta_samples)
            .into_iter()
            .map(|theta| {
                let p = support.value(theta).map_err(CliError::compute(format!("support at theta={theta}")))?;
                let w = oracle_matrix_support(&s, theta).map_err(CliError::compute("witness support"))?;
                Ok([theta, p, w])
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        artifacts.push(("witness.json", output::witness_json(&s)));
        artifacts.push(("witness_profile.csv", output::witness_profile_csv(&rows)));
        return Ok(artifacts);
    }

    if wants(Output::PolynomialJson) {
        artifacts.push(("polynomial.json", output::polynomial_json(support.polynomial())));
    }
    if wants(Output::ProfileCsv) || wants(Output::BoundarySvg) {
        let profile = support.profile(job.theta_samples).map_err(CliError::compute("support profile"))?;
        if wants(Output::ProfileCsv) {
            artifacts.push(("profile.csv", output::profile_csv(&profile)));
        }
        if wants(Output::BoundarySvg) {
            let shape = boundary_shape(&profile).map_err(CliError::compute("boundary"))?;
            artifacts.push(("boundary.svg", output::boundary_svg(&shape)));
        }
    }
    if wants(Output::OraclesCsv) {
        let symbol = SymbolOracle::new(&job.operator, job.phi_grid).map_err(CliError::compute("symbol oracle"))?;
        let section = TruncationOracle::new(&job.operator, job.truncation_size)
            .map_err(CliError::compute("truncation oracle"))?;
        let rows = numrange::numrange::uniform_angles::<f64>(job.theta_samples)
            .into_iter()
            .map(|theta| {
                let ctx = || format!("oracles at theta={theta}");
                let p = support.value(theta).map_err(CliError::compute(ctx()))?;
                let s = symbol.value(theta).map_err(CliError::compute(ctx()))?;
                Ok([theta, p, s, section.value(theta)])
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        artifacts.push(("oracles.csv", output::oracles_csv(&rows)));
    }
    Ok(artifacts)
}

pub fn write_artifacts(dir: &Path, artifacts: &[Artifact]) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    artifacts
        .iter()
        .map(|(name, contents)| {
            let path = dir.join(name);
            fs::write(&path, contents).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(path)
        })
        .collect()
}
