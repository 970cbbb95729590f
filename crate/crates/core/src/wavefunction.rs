//! Normalized position-space eigenfunctions, densities and region probabilities.
//!
//! Every state is `A sin(k(x + a))` on `[-a, 0]`. On `[0, b]` it is
//! `C sinh(κ(x - b))`, `C sin(q(x - b))` or `C (x - b)` for energies below,
//! above or at the step. Both walls are zeros of the segment formulas
//! themselves, so the boundary conditions hold exactly.
//!
//! At zero curvature the two region probabilities tend, as `n` grows and
//! `ka -> (2n - 1)π/2`, to `3a/(3a + 2b)` and `2b/(3a + 2b)`.

use crate::model::{Eigenstate, Regime, WellConfig};
use crate::special::{one_minus_sinc, sinh_ratio, sinh_sq_mass};
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Position,
    Momentum,
}

impl Space {
    pub fn as_str(self) -> &'static str {
        match self {
            Space::Position => "position",
            Space::Momentum => "momentum",
        }
    }
}

/// Which state a sampled density belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateMeta<T> {
    pub n: usize,
    pub energy: T,
    pub regime: Regime,
    pub well: WellConfig<T>,
}

impl<T: Scalar> StateMeta<T> {
    pub fn of(state: &Eigenstate<T>, well: &WellConfig<T>) -> Self {
        Self {
            n: state.n,
            energy: state.energy,
            regime: state.regime,
            well: *well,
        }
    }
}

/// Probability density tabulated on an ordered grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledDensity<T> {
    pub space: Space,
    pub abscissae: Vec<T>,
    pub values: Vec<T>,
    /// The real wavefunction at each abscissa (position space only).
    pub amplitudes: Option<Vec<T>>,
    pub meta: StateMeta<T>,
}

impl<T: Scalar> SampledDensity<T> {
    pub fn len(&self) -> usize {
        self.abscissae.len()
    }

    pub fn is_empty(&self) -> bool {
        self.abscissae.is_empty()
    }

    /// Trapezoid integral of the samples.
    pub fn integral(&self) -> T {
        crate::quadrature::trapezoid(&self.abscissae, &self.values)
    }
}

/// Normalized `ψ` on `[0, b]`. Below the step `C sinh(κ(x - b))` is
/// evaluated as `A sin(ka) sinh(κ(b - x))/sinh(κb)`, the same function
/// without the overflow.
fn region_two_psi<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>, x: T) -> T {
    let y = x - well.b();
    match state.regime {
        Regime::Below => {
            let sin_ka = (state.k * well.a()).sin();
            state.a_coeff() * sin_ka * sinh_ratio(state.secondary, -y, well.b())
        }
        Regime::Above => state.c_coeff() * (state.secondary * y).sin(),
        Regime::ZeroCurvature => state.c_coeff() * y,
    }
}

/// `∫_{-a}^{0} sin^2(k(x + a)) dx = (a/2)(1 - sin(2ka)/2ka)`.
fn region_one_integral<T: Scalar>(k: T, a: T) -> T {
    a / T::lit(2.0) * one_minus_sinc(T::lit(2.0) * k * a)
}

/// `∫_0^b |ψ_II|^2 dx` before normalization.
fn region_two_mass<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>) -> T {
    let b = well.b();
    let half_b = b / T::lit(2.0);
    let two = T::lit(2.0);
    match state.regime {
        Regime::Below => {
            // C = -amp_i sin(ka)/sinh(κb); fold 1/sinh² into the integral
            let s = state.amp_i * (state.k * well.a()).sin();
            s * s * half_b * sinh_sq_mass(state.secondary * b)
        }
        Regime::Above => {
            state.amp_ii * state.amp_ii * half_b * one_minus_sinc(two * state.secondary * b)
        }
        Regime::ZeroCurvature => state.amp_ii * state.amp_ii * b * b * b / T::lit(3.0),
    }
}

fn unnormalized_masses<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>) -> (T, T) {
    let first = state.amp_i * state.amp_i * region_one_integral(state.k, well.a());
    (first, region_two_mass(state, well))
}

/// Constant that makes `∫|ψ|^2 = 1` for the state's unnormalized amplitudes.
/// At zero curvature this is
/// `[(a/2)(1 - sin(2ka)/2ka) + b sin^2(ka)/3]^(-1/2)`.
pub fn normalization<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>) -> T {
    let (first, second) = unnormalized_masses(state, well);
    (first + second).sqrt().recip()
}

/// Normalized `ψ(x)` for `x` in `[-a, b]`.
pub fn eval_psi<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>, x: T) -> Result<T> {
    if !(x >= -well.a() && x <= well.b()) {
        return Err(Error::Domain(format!(
            "x = {x} outside the well [{}, {}]",
            -well.a(),
            well.b()
        )));
    }
    Ok(psi_unchecked(state, well, x))
}

pub(crate) fn psi_unchecked<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>, x: T) -> T {
    if x <= T::zero() {
        state.a_coeff() * (state.k * (x + well.a())).sin()
    } else {
        region_two_psi(state, well, x)
    }
}

/// `(P_I, P_II)`: probability on `[-a, 0]` and on `[0, b]`.
pub fn region_probabilities<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>) -> (T, T) {
    let (first, second) = unnormalized_masses(state, well);
    let n2 = state.norm * state.norm;
    (n2 * first, n2 * second)
}

/// Large-`n` limit of the zero-curvature region probabilities.
pub fn asymptotic_region_probabilities<T: Scalar>(a: T, b: T) -> Result<(T, T)> {
    if !(a > T::zero() && b > T::zero()) {
        return Err(Error::Domain(format!(
            "widths must be positive, got a = {a}, b = {b}"
        )));
    }
    let three_a = T::lit(3.0) * a;
    let two_b = T::lit(2.0) * b;
    let total = three_a + two_b;
    Ok((three_a / total, two_b / total))
}

/// `|ψ|^2` on `n_points` uniformly spaced abscissae covering `[-a, b]`.
pub fn sample_density<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    n_points: usize,
) -> Result<SampledDensity<T>> {
    if n_points < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 points, got {n_points}"
        )));
    }
    let lo = -well.a();
    let h = well.width() / T::from_count(n_points - 1);
    let abscissae: Vec<T> = (0..n_points)
        .map(|i| {
            if i + 1 == n_points {
                well.b()
            } else {
                lo + h * T::from_count(i)
            }
        })
        .collect();
    let psi: Vec<T> = abscissae
        .iter()
        .map(|&x| psi_unchecked(state, well, x))
        .collect();
    let values = psi.iter().map(|&p| p * p).collect();
    Ok(SampledDensity {
        space: Space::Position,
        abscissae,
        values,
        amplitudes: Some(psi),
        meta: StateMeta::of(state, well),
    })
}

/// Sign changes of `ψ` on the open interval `(-a, b)`, sampled finely
/// enough to resolve every half-wavelength.
pub fn count_nodes<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>) -> usize {
    let per_half_wave = T::lit(32.0) * state.k * well.width() / T::PI();
    let n = per_half_wave.ceil().to_usize().unwrap_or(0).max(4096);
    count_nodes_on_grid(state, well, n)
}

pub fn count_nodes_on_grid<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    n: usize,
) -> usize {
    let lo = -well.a();
    let h = well.width() / T::from_count(n);
    let mut nodes = 0;
    let mut last = T::zero();
    for i in 1..n {
        let v = psi_unchecked(state, well, lo + h * T::from_count(i));
        if v == T::zero() {
            continue;
        }
        if last != T::zero() && v.signum() != last.signum() {
            nodes += 1;
        }
        last = v;
    }
    nodes
}
