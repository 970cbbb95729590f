//! Bound states of the asymmetric infinite square well: infinite walls at
//! `x = -a` and `x = b`, zero potential on `(-a, 0)` and a step `V0` on `(0, b)`.
//!
//! The crate solves the spectrum in all three regimes (`E` below, at, or
//! above `V0`), tunes `V0` so that a chosen state sits exactly at the step
//! (a zero-curvature state, linear in the step region), and evaluates
//! position and momentum probabilities in closed form with independent
//! quadrature cross-checks.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`.

// `!(x > 0)` checks are deliberate: they reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eigensolver;
mod error;
pub mod model;
pub mod momentum;
pub mod quadrature;
pub mod roots;
mod scalar;
pub mod special;
pub mod tuner;
pub mod wavefunction;

pub use eigensolver::{characteristic, solve_spectrum, solve_state, SolverOptions, Spectrum};
pub use error::{Error, Result};
pub use model::{Constants, Eigenstate, Regime, WellConfig};
pub use momentum::{ComponentIntegrals, MomentumAmplitude, PeakPartition};
pub use scalar::Scalar;
pub use tuner::{tune_all, tune_v0, TuneResult};
pub use wavefunction::{SampledDensity, Space};

pub type Constants64 = Constants<f64>;
pub type Well64 = WellConfig<f64>;
pub type Eigenstate64 = Eigenstate<f64>;
pub type Spectrum64 = Spectrum<f64>;
pub type TuneResult64 = TuneResult<f64>;
pub type SampledDensity64 = SampledDensity<f64>;
pub type MomentumAmplitude64 = MomentumAmplitude<f64>;
pub type ComponentIntegrals64 = ComponentIntegrals<f64>;
pub type PeakPartition64 = PeakPartition<f64>;
