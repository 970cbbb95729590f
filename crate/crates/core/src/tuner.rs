//! Inverse design: the step height that puts state `n` exactly at `E = V0`.
//!
//! At zero curvature the matching condition `tan(ka) = -kb` involves only
//! `k = sqrt(2mV0)/hbar`, so it is solved in `k` with the pole-free residual
//! `h(k) = sin(ka) + kb cos(ka)`. On the `n`-th branch
//! `((2n - 1)π/2a, nπ/a)` the residual runs from `±1` to `∓nπb/a` and has
//! exactly one zero.

use crate::model::Constants;
use crate::roots::bisect_polish;
use crate::{Error, Result, Scalar};

/// Offset of the bracket ends from the branch edges.
const BRACKET_INSET: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TuneResult<T> {
    pub n: usize,
    pub v0: T,
    /// `sqrt(2 m V0) / hbar`.
    pub k: T,
    /// `sin(ka) + kb cos(ka)` at the returned `k`.
    pub residual: T,
}

/// Pole-free zero-curvature residual.
pub fn zero_curvature_residual<T: Scalar>(k: T, a: T, b: T) -> T {
    let (s, c) = (k * a).sin_cos();
    s + k * b * c
}

/// Open `k`-interval that holds the `n`-th zero-curvature root.
pub fn branch<T: Scalar>(a: T, n: usize) -> (T, T) {
    let pi = T::PI();
    let n = T::from_count(n);
    (
        (T::lit(2.0) * n - T::one()) * pi / (T::lit(2.0) * a),
        n * pi / a,
    )
}

/// Step height making state `n` a zero-curvature state of the `(a, b)` well.
pub fn tune_v0<T: Scalar>(a: T, b: T, n: usize, c: &Constants<T>) -> Result<TuneResult<T>> {
    if !(a > T::zero() && b > T::zero() && a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidWell(format!(
            "widths must be positive, got a = {a}, b = {b}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("quantum number starts at 1".into()));
    }
    let (left, right) = branch(a, n);
    let inset = T::tol(BRACKET_INSET, 4.0) * right;
    let root = bisect_polish(
        |k| zero_curvature_residual(k, a, b),
        left + inset,
        right - inset,
        T::zero(),
    )?;
    let k = root.x;
    Ok(TuneResult {
        n,
        v0: c.energy_per_wavenumber_sq() * k * k,
        k,
        residual: root.fx,
    })
}

/// `tune_v0` for `n = 1..=n_max`.
pub fn tune_all<T: Scalar>(
    a: T,
    b: T,
    n_max: usize,
    c: &Constants<T>,
) -> Result<Vec<TuneResult<T>>> {
    (1..=n_max).map(|n| tune_v0(a, b, n, c)).collect()
}
