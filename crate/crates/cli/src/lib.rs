//! Command-line front end for `aisw-core`.

pub mod args;
pub mod config;
pub mod error;
pub mod format;
pub mod report;

use std::fs;
use std::io::{self, Write};

use aisw_core::eigensolver::{solve_spectrum_with, solve_state_with};
use aisw_core::momentum::{peak_partition, sample_momentum_density};
use aisw_core::wavefunction::{count_nodes, region_probabilities, sample_density};
use aisw_core::{tune_all, tune_v0, Eigenstate64, SolverOptions, Well64};

pub use args::{Cli, Command, Format};
pub use config::RunConfig;
pub use error::{CliError, Result};
use report::*;

fn options(cfg: &RunConfig) -> SolverOptions<f64> {
    SolverOptions::with_regime_tol(cfg.regime_tol)
}

fn fixed_well(cfg: &RunConfig) -> Well64 {
    cfg.well
        .expect("commands other than tune and partition always have a step height")
}

fn state(cfg: &RunConfig, well: &Well64) -> Result<Eigenstate64> {
    Ok(solve_state_with(well, cfg.n, &options(cfg))?)
}

pub fn compute(cfg: &RunConfig) -> Result<Report> {
    Ok(match cfg.command {
        Command::Spectrum => {
            let well = fixed_well(cfg);
            let spectrum = solve_spectrum_with(&well, cfg.n_max, &options(cfg))?;
            let states = spectrum
                .states
                .iter()
                .map(|s| {
                    let (p_i, p_ii) = region_probabilities(s, &well);
                    SpectrumRow {
                        n: s.n,
                        energy: s.energy,
                        regime: s.regime.as_str().into(),
                        k: s.k,
                        secondary: s.secondary,
                        p_i,
                        p_ii,
                    }
                })
                .collect();
            Report::Spectrum(SpectrumReport {
                well: (&well).into(),
                states,
            })
        }
        Command::Tune => {
            let results = tune_all(cfg.a, cfg.b, cfg.n_max, &cfg.constants)?
                .into_iter()
                .map(|t| TuneRow {
                    n: t.n,
                    v0: t.v0,
                    k: t.k,
                    residual: t.residual,
                })
                .collect();
            Report::Tune(TuneReport {
                a: cfg.a,
                b: cfg.b,
                hbar: cfg.constants.hbar(),
                mass: cfg.constants.mass(),
                results,
            })
        }
        Command::State => {
            let well = fixed_well(cfg);
            let s = state(cfg, &well)?;
            let (p_i, p_ii) = region_probabilities(&s, &well);
            Report::State(StateReport {
                well: (&well).into(),
                n: s.n,
                energy: s.energy,
                regime: s.regime.as_str().into(),
                k: s.k,
                secondary: s.secondary,
                a_coeff: s.a_coeff(),
                c_coeff: s.c_coeff(),
                p_i,
                p_ii,
                nodes: count_nodes(&s, &well),
            })
        }
        Command::Density => {
            let well = fixed_well(cfg);
            let s = state(cfg, &well)?;
            let d = sample_density(&s, &well, cfg.points)?;
            let psi = d.amplitudes.as_deref().expect("position samples carry psi");
            let points = (0..d.len())
                .map(|i| DensityRow {
                    x: d.abscissae[i],
                    psi: psi[i],
                    density: d.values[i],
                })
                .collect();
            Report::Density(DensityReport {
                well: (&well).into(),
                n: s.n,
                energy: s.energy,
                regime: s.regime.as_str().into(),
                points,
            })
        }
        Command::Momentum => {
            let well = fixed_well(cfg);
            let s = state(cfg, &well)?;
            let p_max = cfg.p_max.unwrap_or(3.0 * well.constants().hbar() * s.k);
            let d = sample_momentum_density(&s, &well, p_max, cfg.points)?;
            let points = d
                .abscissae
                .iter()
                .zip(&d.values)
                .map(|(&p, &density)| MomentumRow { p, density })
                .collect();
            Report::Momentum(MomentumReport {
                well: (&well).into(),
                n: s.n,
                energy: s.energy,
                regime: s.regime.as_str().into(),
                p_max,
                points,
            })
        }
        Command::Partition => {
            let well = match cfg.well {
                Some(w) => w,
                None => {
                    let tuned = tune_v0(cfg.a, cfg.b, cfg.n, &cfg.constants)?;
                    Well64::with_constants(cfg.a, cfg.b, tuned.v0, cfg.constants)?
                }
            };
            let s = state(cfg, &well)?;
            let part = peak_partition(&s, &well).map_err(|e| {
                CliError::usage(format!(
                    "{e} (state {} at V0 = {}; omit --v0 to tune it)",
                    s.n,
                    well.v0()
                ))
            })?;
            Report::Partition(PartitionReport {
                well: (&well).into(),
                n: s.n,
                energy: s.energy,
                left: part.left,
                center: part.center,
                right: part.right,
            })
        }
    })
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    let cfg = RunConfig::resolve(cli)?;
    let text = render(&compute(&cfg)?, cfg.format);
    match &cfg.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}
