//! Command-line front end: scenario files in, region reports, comparisons,
//! overlap sweeps and oracle verification out.

// Errors carry exact rationals for their messages and only occur on
// validation paths, so their size is not worth boxing.
#![allow(clippy::result_large_err)]

pub mod commands;
pub mod error;
pub mod output;
pub mod scenario;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fddof::Rational;

pub use commands::{Outcome, OutputPaths, VerifyOptions};
pub use error::{CliError, EXIT_VERIFICATION_FAILED};
pub use scenario::Scenario;

#[derive(Debug, Parser)]
#[command(
    name = "fddof",
    version,
    about = "Degrees-of-freedom regions of a full-duplex three-node channel"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Caps, corner points and vertices of the full-duplex region.
    Region(CommonArgs),
    /// Full duplex against time-shared half duplex.
    Compare(CommonArgs),
    /// Regions of a symmetric scenario across backscatter overlaps.
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated overlaps, e.g. `1,3/4,1/2`; defaults to five
        /// evenly spaced values from the largest feasible overlap to 0.
        #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
        grid: Option<Vec<Rational>>,
    },
    /// Check the closed forms against random discretized operators.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Scenario JSON file.
    pub scenario: PathBuf,
    /// Write the region's vertices (or the sweep table) as CSV.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Write an SVG plot of the region(s).
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Number of random channels, seeded 0..N.
    #[arg(long, value_name = "N")]
    pub seeds: Option<u64>,
    /// Scale all arrays by the smallest integer that makes every dimension
    /// integral, instead of failing.
    #[arg(long)]
    pub auto_rescale: bool,
    /// Singular values at or below X times the reference norm count as zero.
    #[arg(long, value_name = "X")]
    pub rank_tol: Option<f64>,
    /// Fill the zero blocks of the self-interference operator (negative
    /// control: verification must fail).
    #[arg(long, hide = true)]
    pub corrupt_support: bool,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    fddof::rational::parse(s).ok_or_else(|| format!("`{s}` is not a rational"))
}

impl CommonArgs {
    fn outputs(&self) -> OutputPaths {
        OutputPaths {
            csv: self.csv.clone(),
            svg: self.svg.clone(),
        }
    }
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Region(c) => commands::region(&Scenario::load(&c.scenario)?, &c.outputs()),
        Command::Compare(c) => commands::compare(&Scenario::load(&c.scenario)?, &c.outputs()),
        Command::Sweep { common, grid } => commands::sweep(
            &Scenario::load(&common.scenario)?,
            grid.as_deref(),
            &common.outputs(),
        ),
        Command::Verify { common, oracle } => commands::verify(
            &Scenario::load(&common.scenario)?,
            &VerifyOptions {
                seeds: oracle.seeds,
                auto_rescale: oracle.auto_rescale,
                rank_tol: oracle.rank_tol,
                corrupt_support: oracle.corrupt_support,
            },
            &common.outputs(),
        ),
    }
}

/// Process exit status for a command result.
pub fn exit_code(result: &Result<Outcome, CliError>) -> u8 {
    match result {
        Ok(o) if o.success => 0,
        Ok(_) => EXIT_VERIFICATION_FAILED,
        Err(e) => e.exit_code(),
    }
}
