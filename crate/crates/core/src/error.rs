use thiserror::Error;

use crate::model::Regime;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid well: {0}")]
    InvalidWell(String),
    /// Root search failed; `lo..hi` is the energy (or wavenumber) interval being searched.
    #[error("solver failed on [{lo}, {hi}]: {reason}")]
    Solver { lo: f64, hi: f64, reason: String },
    #[error("operation needs a zero-curvature state, got {0}")]
    UnsupportedRegime(Regime),
    #[error("bad well record: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
