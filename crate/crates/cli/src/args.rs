use std::path::PathBuf;

use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Lowest bound states with energies, wavenumbers and region probabilities.
    Spectrum,
    /// Step heights that put state n exactly at E = V0.
    Tune,
    /// Coefficients and probabilities of one state.
    State,
    /// Position-space psi and |psi|^2 on a grid.
    Density,
    /// Momentum-space |phi|^2 on a grid.
    Momentum,
    /// Momentum probability split at p = +-hbar k/2 for a zero-curvature state.
    Partition,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Tune => "tune",
            Command::State => "state",
            Command::Density => "density",
            Command::Momentum => "momentum",
            Command::Partition => "partition",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "aisw",
    version,
    about = "Bound states of the asymmetric infinite square well",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Width of the left (V = 0) region [default: 3]
    #[arg(long)]
    pub a: Option<f64>,
    /// Width of the step region [default: 3]
    #[arg(long)]
    pub b: Option<f64>,
    /// Step height; partition tunes it when omitted [default: 33]
    #[arg(long)]
    pub v0: Option<f64>,
    /// [default: 1]
    #[arg(long)]
    pub hbar: Option<f64>,
    /// [default: 0.5]
    #[arg(long)]
    pub mass: Option<f64>,
    /// State index, from 1 [default: 1]
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<usize>,
    /// Number of states [default: 9]
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    /// Grid size [default: 2001 for density, 4001 for momentum]
    #[arg(long)]
    pub points: Option<usize>,
    /// Momentum grid half-width [default: 3 hbar k]
    #[arg(long = "p-max")]
    pub p_max: Option<f64>,
    /// Relative half-width of the E = V0 band [default: 1e-6]
    #[arg(long = "regime-tol")]
    pub regime_tol: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat `key = value` file; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}
