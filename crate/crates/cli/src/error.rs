use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::format::fmt_g;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("solver failed on [{}, {}]: {reason}", fmt_g(*lo), fmt_g(*hi))]
    Solver { lo: f64, hi: f64, reason: String },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// 1 for bad input or I/O, 2 when the solver gave up.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Solver { .. } => 2,
        }
    }
}

impl From<aisw_core::Error> for CliError {
    fn from(err: aisw_core::Error) -> Self {
        match err {
            aisw_core::Error::Solver { lo, hi, reason } => CliError::Solver { lo, hi, reason },
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
