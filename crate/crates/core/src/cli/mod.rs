//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning                               |
//! |------|---------------------------------------|
//! | 0    | success                               |
//! | 2    | bad command-line usage                |
//! | 10   | configuration file not found          |
//! | 11   | configuration does not parse          |
//! | 12   | configuration value out of range      |
//! | 13   | unknown configuration key             |
//! | 20   | infeasible design                     |
//! | 21   | design solver did not converge        |
//! | 22   | root or mode search failed            |
//! | 23   | other numerical domain error          |
//! | 30   | cannot write output                   |

mod commands;
mod config;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::{
    cmd_coupling_sweep, cmd_design, cmd_fidelity_map, cmd_mc_validate, cmd_snr_map, cmd_t1_spectrum,
};
pub use config::{parse_config, MonteCarloSection, ReadoutSection, RunConfig, SweepSection};
pub use output::format_number;

use crate::readout::RateConvention;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("configuration file not found: {}", .0.display())]
    MissingFile(PathBuf),
    #[error("configuration parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error("unknown configuration key(s): {}", .0.join(", "))]
    UnknownKey(Vec<String>),
    #[error(transparent)]
    Numeric(#[from] crate::Error),
    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use crate::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::MissingFile(_) => 10,
            CliError::Parse(_) => 11,
            CliError::Validation(_) => 12,
            CliError::UnknownKey(_) => 13,
            CliError::Numeric(E::Infeasible(_)) => 20,
            CliError::Numeric(E::NonConvergence { .. }) => 21,
            CliError::Numeric(E::Search(_)) => 22,
            CliError::Numeric(_) => 23,
            CliError::Output(_) => 30,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    /// κ divided by 2π wherever it multiplies a time
    Paper,
    /// κ used in rad/s throughout
    Angular,
}

impl From<ConventionArg> for RateConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => RateConvention::Cyclic,
            ConventionArg::Angular => RateConvention::Angular,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "notch-readout", version, about = "Purcell notch-filter readout analysis and design")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// TOML configuration; nominal device values are used for anything omitted
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output directory (overrides `out_dir`)
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Random seed for the Monte Carlo oracle (overrides `seed`)
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Rate convention for measurement-time formulas (overrides `convention`)
    #[arg(long, global = true, value_enum)]
    pub convention: Option<ConventionArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Exact T1 versus qubit frequency for each filter capacitor
    T1Spectrum,
    /// Exact g versus qubit frequency for each C_F and each C_q
    CouplingSweep,
    /// κ/2|χ| over the (C_F, C_q) grid
    SnrMap,
    /// Assignment fidelity over photon number and measurement time
    FidelityMap,
    /// Solve for the coupling capacitors and write the full report
    Design,
    /// Compare Monte Carlo trajectories against the closed-form fidelity
    McValidate,
}

/// Loads the configuration named on the command line and applies flag overrides.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => parse_config(p)?,
        None => RunConfig::default(),
    };
    if let Some(o) = &cli.out {
        cfg.out_dir = o.clone();
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(c) = cli.convention {
        cfg.convention = c.into();
    }
    Ok(cfg)
}

/// Runs one parsed invocation and returns the files it wrote.
pub fn run(cli: &Cli) -> Result<Vec<PathBuf>, CliError> {
    let cfg = resolve_config(cli)?;
    match cli.command {
        Command::T1Spectrum => cmd_t1_spectrum(&cfg),
        Command::CouplingSweep => cmd_coupling_sweep(&cfg),
        Command::SnrMap => cmd_snr_map(&cfg),
        Command::FidelityMap => cmd_fidelity_map(&cfg),
        Command::Design => cmd_design(&cfg),
        Command::McValidate => cmd_mc_validate(&cfg),
    }
}

/// Entry point shared by the binary and the tests; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(files) => {
            for f in files {
                println!("wrote {}", f.display());
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
