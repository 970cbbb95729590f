use std::fs;
use std::path::PathBuf;

use aisw_core::model::{parse_record, parse_scalar};
use aisw_core::{Constants64, Well64};

use crate::args::{Cli, Command, Format};
use crate::error::{CliError, Result};

pub const DEFAULT_A: f64 = 3.0;
pub const DEFAULT_B: f64 = 3.0;
pub const DEFAULT_V0: f64 = 33.0;
pub const DEFAULT_N_MAX: usize = 9;
pub const DEFAULT_DENSITY_POINTS: usize = 2001;
pub const DEFAULT_MOMENTUM_POINTS: usize = 4001;
pub const DEFAULT_REGIME_TOL: f64 = 1e-6;

const FILE_KEYS: [&str; 12] = [
    "a",
    "b",
    "v0",
    "hbar",
    "mass",
    "n",
    "n_max",
    "points",
    "p_max",
    "regime_tol",
    "format",
    "out",
];

/// Fully resolved invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` only for partition without an explicit step height.
    pub well: Option<Well64>,
    pub a: f64,
    pub b: f64,
    pub constants: Constants64,
    pub n: usize,
    pub n_max: usize,
    pub points: usize,
    pub p_max: Option<f64>,
    pub regime_tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default)]
struct Layer {
    a: Option<f64>,
    b: Option<f64>,
    v0: Option<f64>,
    hbar: Option<f64>,
    mass: Option<f64>,
    n: Option<usize>,
    n_max: Option<usize>,
    points: Option<usize>,
    p_max: Option<f64>,
    regime_tol: Option<f64>,
    format: Option<Format>,
    out: Option<PathBuf>,
}

fn parse_count(key: &str, raw: &str) -> Result<usize> {
    raw.parse().map_err(|_| {
        CliError::usage(format!(
            "`{key}`: expected a non-negative integer, got `{raw}`"
        ))
    })
}

fn parse_file(text: &str) -> Result<Layer> {
    let pairs = parse_record(text)?;
    let mut layer = Layer::default();
    for (key, raw) in &pairs {
        let real = || -> Result<Option<f64>> { Ok(Some(parse_scalar(key, raw)?)) };
        match key.as_str() {
            "a" => layer.a = real()?,
            "b" => layer.b = real()?,
            "v0" => layer.v0 = real()?,
            "hbar" => layer.hbar = real()?,
            "mass" => layer.mass = real()?,
            "p_max" => layer.p_max = real()?,
            "regime_tol" => layer.regime_tol = real()?,
            "n" => layer.n = Some(parse_count(key, raw)?),
            "n_max" => layer.n_max = Some(parse_count(key, raw)?),
            "points" => layer.points = Some(parse_count(key, raw)?),
            "format" => {
                layer.format = Some(match raw.as_str() {
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    _ => {
                        return Err(CliError::usage(format!(
                            "`format`: expected csv or json, got `{raw}`"
                        )))
                    }
                })
            }
            "out" => layer.out = Some(PathBuf::from(raw)),
            _ => {
                return Err(CliError::usage(format!(
                    "unknown config key `{key}` (expected one of {})",
                    FILE_KEYS.join(", ")
                )))
            }
        }
    }
    Ok(layer)
}

fn flag_layer(cli: &Cli) -> Layer {
    Layer {
        a: cli.a,
        b: cli.b,
        v0: cli.v0,
        hbar: cli.hbar,
        mass: cli.mass,
        n: cli.n,
        n_max: cli.n_max,
        points: cli.points,
        p_max: cli.p_max,
        regime_tol: cli.regime_tol,
        format: cli.format,
        out: cli.out.clone(),
    }
}

// Flags a command has no use for are rejected so typos do not pass silently.
fn check_flags(cli: &Cli) -> Result<()> {
    let cmd = cli.command;
    let unused = |flag: &str| {
        Err(CliError::usage(format!(
            "`{}` does not take --{flag}",
            cmd.name()
        )))
    };
    let takes_n = !matches!(cmd, Command::Spectrum | Command::Tune);
    if cli.n.is_some() && !takes_n {
        return unused("n (use --n-max)");
    }
    if cli.n_max.is_some() && takes_n {
        return unused("n-max (use --n)");
    }
    if cli.points.is_some() && !matches!(cmd, Command::Density | Command::Momentum) {
        return unused("points");
    }
    if cli.p_max.is_some() && cmd != Command::Momentum {
        return unused("p-max");
    }
    if cmd == Command::Tune && cli.v0.is_some() {
        return unused("v0");
    }
    if cmd == Command::Tune && cli.regime_tol.is_some() {
        return unused("regime-tol");
    }
    Ok(())
}

fn positive(name: &str, x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::usage(format!("{name} must be positive, got {x}")))
    }
}

fn at_least(name: &str, x: usize, min: usize) -> Result<usize> {
    if x >= min {
        Ok(x)
    } else {
        Err(CliError::usage(format!(
            "{name} must be at least {min}, got {x}"
        )))
    }
}

impl RunConfig {
    pub fn resolve(cli: &Cli) -> Result<Self> {
        check_flags(cli)?;
        let file = match &cli.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_file(&text)?
            }
            None => Layer::default(),
        };
        let flags = flag_layer(cli);
        macro_rules! pick {
            ($field:ident) => {
                flags.$field.or(file.$field)
            };
        }

        let a = positive("a", pick!(a).unwrap_or(DEFAULT_A))?;
        let b = positive("b", pick!(b).unwrap_or(DEFAULT_B))?;
        let constants = Constants64::new(
            positive("hbar", pick!(hbar).unwrap_or(1.0))?,
            positive("mass", pick!(mass).unwrap_or(0.5))?,
        )?;
        let v0 = match (cli.command, pick!(v0)) {
            (Command::Tune, _) | (Command::Partition, None) => None,
            (_, v0) => Some(v0.unwrap_or(DEFAULT_V0)),
        };
        let well = v0
            .map(|v0| Well64::with_constants(a, b, v0, constants))
            .transpose()?;
        let default_points = match cli.command {
            Command::Momentum => DEFAULT_MOMENTUM_POINTS,
            _ => DEFAULT_DENSITY_POINTS,
        };
        Ok(RunConfig {
            command: cli.command,
            well,
            a,
            b,
            constants,
            n: at_least("n", pick!(n).unwrap_or(1), 1)?,
            n_max: at_least("n_max", pick!(n_max).unwrap_or(DEFAULT_N_MAX), 1)?,
            points: at_least("points", pick!(points).unwrap_or(default_points), 2)?,
            p_max: pick!(p_max).map(|p| positive("p_max", p)).transpose()?,
            regime_tol: positive(
                "regime_tol",
                pick!(regime_tol).unwrap_or(DEFAULT_REGIME_TOL),
            )?,
            format: pick!(format).unwrap_or(Format::Csv),
            out: flags.out.or(file.out),
        })
    }
}

#[cfg(test)]
mod tests {
    use clap::Parser;

    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("aisw").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn defaults() {
        let cfg = RunConfig::resolve(&cli(&["spectrum"])).unwrap();
        assert_eq!(cfg.well, Some(Well64::new(3.0, 3.0, 33.0).unwrap()));
        assert_eq!((cfg.n_max, cfg.format), (9, Format::Csv));
        let cfg = RunConfig::resolve(&cli(&["momentum"])).unwrap();
        assert_eq!(cfg.points, DEFAULT_MOMENTUM_POINTS);
        let cfg = RunConfig::resolve(&cli(&["partition", "--n", "9"])).unwrap();
        assert_eq!(cfg.well, None);
    }

    #[test]
    fn flags_override_file() {
        let file = parse_file("a = 2\nv0 = 5 # step\nn = 4\nformat = json\n").unwrap();
        assert_eq!(
            (file.a, file.v0, file.n, file.format),
            (Some(2.0), Some(5.0), Some(4), Some(Format::Json))
        );
        let dir = std::env::temp_dir().join(format!("aisw-config-{}", std::process::id()));
        fs::write(&dir, "a = 2\nv0 = 5\nn = 4\n").unwrap();
        let path = dir.to_str().unwrap();
        let cfg = RunConfig::resolve(&cli(&["state", "--config", path, "--v0", "7"])).unwrap();
        fs::remove_file(&dir).unwrap();
        let well = cfg.well.unwrap();
        assert_eq!((well.a(), well.v0(), cfg.n), (2.0, 7.0, 4));
    }

    #[test]
    fn rejects_bad_input() {
        for args in [
            &["spectrum", "--a", "-1"][..],
            &["spectrum", "--v0", "-2"],
            &["spectrum", "--n", "3"],
            &["state", "--n-max", "3"],
            &["state", "--n", "0"],
            &["tune", "--v0", "3"],
            &["density", "--points", "1"],
            &["spectrum", "--p-max", "2"],
            &["momentum", "--p-max", "0"],
        ] {
            let err = RunConfig::resolve(&cli(args)).unwrap_err();
            assert_eq!(err.exit_code(), 1, "{args:?}");
        }
        assert!(parse_file("color = red\n").is_err());
        assert!(parse_file("n = 2.5\n").is_err());
        assert!(parse_file("format = xml\n").is_err());
    }
}
