//! Argument definitions. Anything that can also come from a config file is
//! an `Option` here so that precedence can be resolved afterwards.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "scatbench", version, about = "Exact and Numerov scattering for reflectionless sech^2 wells")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Half-width of the integration domain.
    #[arg(long, global = true)]
    pub x_max: Option<f64>,
    /// Numerov grid step.
    #[arg(long, global = true)]
    pub step: Option<f64>,
    /// Bound-state energy tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Flat key=value configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output file (directory for plot-data); standard output when absent or `-`.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Output format [default: csv].
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Show phase shifts in degrees on standard output. Files stay in radians.
    #[arg(long, global = true)]
    pub degrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Analytic,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremArg {
    Direct,
    Parity,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceArg {
    Analytic,
    Numeric,
    Both,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PotentialSelector {
    /// Order of the reflectionless well.
    #[arg(long)]
    pub ell: Option<u32>,
    /// CSV table with an `x,v` header.
    #[arg(long, value_name = "PATH")]
    pub potential_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Sweep {
    /// Smallest momentum of the sweep [default: 0.05].
    #[arg(long)]
    pub k_min: Option<f64>,
    /// Largest momentum of the sweep [default: 10].
    #[arg(long)]
    pub k_max: Option<f64>,
    /// Number of geometrically spaced momenta [default: 200].
    #[arg(long)]
    pub k_steps: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Phase shift over a geometric momentum sweep, with the k -> 0 limit.
    PhaseShift {
        #[command(flatten)]
        potential: PotentialSelector,
        /// Defaults to both for --ell and to numeric for a file.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Bound-state energies, parities and node counts.
    BoundStates {
        #[command(flatten)]
        potential: PotentialSelector,
        /// Defaults to both for --ell and to numeric for a file.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Levinson-type predictions against the computed zero-momentum phase.
    Audit {
        /// Order of the reflectionless well.
        #[arg(long, conflicts_with = "ell_range", required_unless_present = "ell_range")]
        ell: Option<u32>,
        /// Inclusive range `A..B`.
        #[arg(long, value_name = "A..B")]
        ell_range: Option<String>,
        /// Predictor(s) to audit [default: both].
        #[arg(long, value_enum)]
        theorem: Option<TheoremArg>,
        /// Route for the census and delta(0) [default: analytic].
        #[arg(long, value_enum)]
        source: Option<SourceArg>,
    },
    /// Whitespace-separated (k, delta) files plus a JSON manifest.
    PlotData {
        #[command(flatten)]
        potential: PotentialSelector,
        /// Defaults to both for --ell and to numeric for a file.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Full scattering result at one momentum.
    Scatter {
        #[command(flatten)]
        potential: PotentialSelector,
        /// Defaults to both for --ell and to numeric for a file.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Momentum.
        #[arg(long)]
        k: f64,
    },
}
