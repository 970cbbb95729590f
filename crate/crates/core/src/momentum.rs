//! Momentum-space amplitudes `φ(p) = (2πħ)^(-1/2) ∫ ψ(x) e^(-ipx/ħ) dx`.
//!
//! For zero-curvature states `φ` splits into three closed-form pieces:
//! `φ₊` and `φ₋` from the two exponentials of `sin(k(x + a))` on the left
//! (peaked at `p = -ħk` and `p = +ħk`) and `φ₀` from the linear segment on
//! the right (peaked at `p = 0`). Other regimes go through the quadrature
//! oracle, which also cross-checks the closed forms.

use num_complex::Complex;

use crate::model::{Eigenstate, Regime, WellConfig};
use crate::quadrature::{piecewise_simpson, SimpsonOptions};
use crate::special::{sinc, x_minus_sin_over_cube};
use crate::wavefunction::{psi_unchecked, SampledDensity, Space, StateMeta};
use crate::{Error, Result, Scalar};

/// Upper bound on the probability left outside `[-P, P]` by the truncation window.
pub const TAIL_BUDGET: f64 = 1e-4;

/// Absolute tolerance of the Fourier oracle.
pub const ORACLE_TOL: f64 = 1e-12;

/// Absolute tolerance of each momentum-space integral.
const MOMENTUM_QUAD_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumAmplitude<T> {
    pub p: T,
    pub phi_plus: Complex<T>,
    pub phi_minus: Complex<T>,
    pub phi_zero: Complex<T>,
    /// `phi_plus + phi_minus + phi_zero`.
    pub total: Complex<T>,
}

impl<T: Scalar> MomentumAmplitude<T> {
    /// `|φ(p)|^2`.
    pub fn density(&self) -> T {
        self.total.norm_sqr()
    }

    /// Interference between the linear-segment piece and the two
    /// left-region pieces: `2 Re[φ₀* (φ₊ + φ₋)]`.
    pub fn zero_cross_term(&self) -> T {
        T::lit(2.0) * (self.phi_zero.conj() * (self.phi_plus + self.phi_minus)).re
    }

    /// `2 Re[φ₋* φ₊]`.
    pub fn pm_cross_term(&self) -> T {
        T::lit(2.0) * (self.phi_minus.conj() * self.phi_plus).re
    }
}

/// Integrals over all `p` of the direct and interference pieces of `|φ|^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentIntegrals<T> {
    pub i_plus: T,
    pub i_minus: T,
    pub i_zero: T,
    /// `∫ 2 Re[φ₋* φ₊] dp`.
    pub cross_pm: T,
    /// `∫ 2 Re[φ₀* (φ₊ + φ₋)] dp`.
    pub cross_zero: T,
}

impl<T: Scalar> ComponentIntegrals<T> {
    pub fn total(&self) -> T {
        self.i_plus + self.i_minus + self.i_zero + self.cross_pm + self.cross_zero
    }

    fn plus(&self, other: &Self) -> Self {
        Self {
            i_plus: self.i_plus + other.i_plus,
            i_minus: self.i_minus + other.i_minus,
            i_zero: self.i_zero + other.i_zero,
            cross_pm: self.cross_pm + other.cross_pm,
            cross_zero: self.cross_zero + other.cross_zero,
        }
    }
}

/// Quadrature of the component integrands over `[-window, window]` plus
/// asymptotic estimates of what lies outside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericComponents<T> {
    pub window: T,
    pub truncated: ComponentIntegrals<T>,
    pub tails: ComponentIntegrals<T>,
}

impl<T: Scalar> NumericComponents<T> {
    pub fn corrected(&self) -> ComponentIntegrals<T> {
        self.truncated.plus(&self.tails)
    }
}

/// Momentum probability split at `p = ±ħk/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakPartition<T> {
    pub left: T,
    pub center: T,
    pub right: T,
}

impl<T: Scalar> PeakPartition<T> {
    pub fn total(&self) -> T {
        self.left + self.center + self.right
    }
}

fn require_zero_curvature<T: Scalar>(state: &Eigenstate<T>) -> Result<()> {
    match state.regime {
        Regime::ZeroCurvature => Ok(()),
        other => Err(Error::UnsupportedRegime(other)),
    }
}

fn fourier_prefactor<T: Scalar>(well: &WellConfig<T>) -> T {
    (T::lit(2.0) * T::PI() * well.constants().hbar())
        .sqrt()
        .recip()
}

/// Closed-form `φ₊`, `φ₋`, `φ₀` of a zero-curvature state.
pub fn phi_components<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    p: T,
) -> Result<MomentumAmplitude<T>> {
    require_zero_curvature(state)?;
    Ok(closed_form(state, well, p))
}

fn closed_form<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    p: T,
) -> MomentumAmplitude<T> {
    let hbar = well.constants().hbar();
    let (a, b, k) = (well.a(), well.b(), state.k);
    let two = T::lit(2.0);
    let pref = state.a_coeff() * fourier_prefactor(well);
    let i = Complex::<T>::i();
    let ka = k * a;

    // φ₊ = +pref (ia/2) e^{-ika} e^{iβ} sinc β,  β = (p + ħk) a / 2ħ
    let beta = (p + hbar * k) * a / (two * hbar);
    let phi_plus = i * Complex::from_polar(pref * a / two * sinc(beta), beta - ka);
    // φ₋ = -pref (ia/2) e^{+ika} e^{iγ} sinc γ,  γ = (p - ħk) a / 2ħ
    let gamma = (p - hbar * k) * a / (two * hbar);
    let phi_minus = -i * Complex::from_polar(pref * a / two * sinc(gamma), gamma + ka);

    // φ₀ = pref sin(ka) b (1 - ix - e^{-ix}) / x^2,  x = pb/ħ
    let x = p * b / hbar;
    let half = sinc(x / two);
    let shape = Complex::new(half * half / two, -x * x_minus_sin_over_cube(x));
    let phi_zero = shape * (pref * ka.sin() * b);

    MomentumAmplitude {
        p,
        phi_plus,
        phi_minus,
        phi_zero,
        total: phi_plus + phi_minus + phi_zero,
    }
}

/// `φ(p)` by adaptive quadrature of the defining integral, split at `x = 0`.
/// Works for every regime.
pub fn numeric_fourier_oracle<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    p: T,
) -> Complex<T> {
    let hbar = well.constants().hbar();
    let s = p / hbar;
    let rate = s.abs() + state.k + state.secondary;
    let panels = (rate * well.a().max(well.b()) / T::PI())
        .ceil()
        .to_usize()
        .unwrap_or(0)
        * 2
        + 8;
    let opts = SimpsonOptions::with_tol(T::tol(ORACLE_TOL, 64.0)).panels(panels);
    let integral: Complex<T> = piecewise_simpson(
        |x: T| Complex::from_polar(psi_unchecked(state, well, x), -s * x),
        &[-well.a(), T::zero(), well.b()],
        &opts,
    );
    integral * fourier_prefactor(well)
}

/// `|φ(p)|^2`: closed form at zero curvature, quadrature otherwise.
pub fn momentum_density<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>, p: T) -> T {
    match state.regime {
        Regime::ZeroCurvature => closed_form(state, well, p).density(),
        _ => numeric_fourier_oracle(state, well, p).norm_sqr(),
    }
}

/// Exact component integrals of a zero-curvature state. They sum to one by
/// the normalization condition.
pub fn component_integrals<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
) -> Result<ComponentIntegrals<T>> {
    require_zero_curvature(state)?;
    let a2 = state.a_coeff() * state.a_coeff();
    let (a, b) = (well.a(), well.b());
    let ka = state.k * a;
    let s = ka.sin();
    let direct = a2 * a / T::lit(4.0);
    Ok(ComponentIntegrals {
        i_plus: direct,
        i_minus: direct,
        i_zero: a2 * b * s * s / T::lit(3.0),
        // -A^2 a sin(2ka) / 4ka
        cross_pm: -a2 * a / T::lit(2.0) * sinc(T::lit(2.0) * ka),
        cross_zero: T::zero(),
    })
}

/// Half-width `P` of the momentum window used for numeric integrals:
/// `max(10ħk, 40ħ/b)`, widened until the `1/p^2` tails of the individual
/// components carry less than [`TAIL_BUDGET`].
pub fn truncation_momentum<T: Scalar>(state: &Eigenstate<T>, well: &WellConfig<T>) -> T {
    let hbar = well.constants().hbar();
    let a2 = state.a_coeff() * state.a_coeff();
    // every component tail is bounded by A^2 ħ / (π P)
    let budget = a2 * hbar / (T::PI() * T::lit(TAIL_BUDGET));
    (T::lit(10.0) * hbar * state.k)
        .max(T::lit(40.0) * hbar / well.b())
        .max(budget)
}

fn momentum_quadrature<T, F>(
    f: F,
    window: T,
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    lo: T,
    hi: T,
) -> T
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let hbar = well.constants().hbar();
    let pk = hbar * state.k;
    // break at the peak centres inside (lo, hi)
    let mut cuts = vec![lo];
    for c in [-pk, T::zero(), pk] {
        if c > lo && c < hi {
            cuts.push(c);
        }
    }
    cuts.push(hi);
    // two panels per period of the fastest oscillation, e^{i(a+b)p/ħ}
    let per_unit = well.width() / (T::PI() * hbar);
    let panels = ((hi - lo) * per_unit).ceil().to_usize().unwrap_or(0) / cuts.len().max(1) + 4;
    let share = (hi - lo) / (T::lit(2.0) * window);
    let opts = SimpsonOptions::with_tol(T::tol(MOMENTUM_QUAD_TOL, 64.0) * share).panels(panels);
    piecewise_simpson(f, &cuts, &opts)
}

// ∫_B^∞ sin²β/β² dβ to O(B^-3)
fn sinc_sq_tail<T: Scalar>(big_b: T) -> T {
    T::one() / (T::lit(2.0) * big_b) + (T::lit(2.0) * big_b).sin() / (T::lit(4.0) * big_b * big_b)
}

/// Asymptotic contribution of `|p| > window` to each component integral.
pub fn component_tails<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    window: T,
) -> ComponentIntegrals<T> {
    let hbar = well.constants().hbar();
    let (a, b, k) = (well.a(), well.b(), state.k);
    let two = T::lit(2.0);
    let pi = T::PI();
    let a2 = state.a_coeff() * state.a_coeff();
    let ka = k * a;
    let (s, c) = ka.sin_cos();
    let pk = hbar * k;

    // |φ±|^2 = c² sinc² with c² = A² a² / 8πħ, dp = (2ħ/a) dβ
    let c2 = a2 * a * a / (T::lit(8.0) * pi * hbar);
    let b_far = (window + pk) * a / (two * hbar);
    let b_near = (window - pk) * a / (two * hbar);
    let direct = c2 * (two * hbar / a) * (sinc_sq_tail(b_far) + sinc_sq_tail(b_near));

    // 2Re φ₋*φ₊ = -2c² cos(ka) sinc β sinc γ, mean over a period cos(ka)/2βγ
    let log_ratio = if pk > T::zero() {
        (two * pk / (window - pk)).ln_1p() / pk
    } else {
        two / window
    };
    let cross_pm = -c2 * c * c * (two * hbar / a).powi(2) * log_ratio;

    // |φ₀|^2 = d² |F(x)|^2, d² = A² sin²(ka) b² / 2πħ, dp = (ħ/b) dx
    let d2 = a2 * s * s * b * b / (two * pi * hbar);
    let x = window * b / hbar;
    let f_tail = T::one() / x + (T::lit(2.0 / 3.0) - two * x.cos()) / (x * x * x);
    let i_zero = d2 * (hbar / b) * two * f_tail;

    // leading 1/p^2 behaviour of 2Re φ₀*(φ₊ + φ₋)
    let cross_zero = -two * a2 * s * s * hbar / (pi * window);

    ComponentIntegrals {
        i_plus: direct,
        i_minus: direct,
        i_zero,
        cross_pm,
        cross_zero,
    }
}

/// Component integrals by quadrature over `[-P, P]` (see
/// [`truncation_momentum`]) with tail estimates kept separately.
pub fn numeric_component_integrals<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
) -> Result<NumericComponents<T>> {
    require_zero_curvature(state)?;
    let window = truncation_momentum(state, well);
    let amp = |p: T| closed_form(state, well, p);
    let q = |f: &dyn Fn(T) -> T| momentum_quadrature(f, window, state, well, -window, window);
    let truncated = ComponentIntegrals {
        i_plus: q(&|p| amp(p).phi_plus.norm_sqr()),
        i_minus: q(&|p| amp(p).phi_minus.norm_sqr()),
        i_zero: q(&|p| amp(p).phi_zero.norm_sqr()),
        cross_pm: q(&|p| amp(p).pm_cross_term()),
        cross_zero: q(&|p| amp(p).zero_cross_term()),
    };
    Ok(NumericComponents {
        window,
        truncated,
        tails: component_tails(state, well, window),
    })
}

/// Probability in `p < -ħk/2`, `|p| < ħk/2` and `p > ħk/2`. The total
/// density falls off like `1/p^4`, so the truncation to `[-P, P]` is far
/// below the quadrature tolerance.
pub fn peak_partition<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
) -> Result<PeakPartition<T>> {
    require_zero_curvature(state)?;
    if !(state.k > T::zero()) {
        return Err(Error::Domain("peak partition needs k > 0".into()));
    }
    let window = truncation_momentum(state, well);
    let edge = well.constants().hbar() * state.k / T::lit(2.0);
    let density = |p: T| closed_form(state, well, p).density();
    Ok(PeakPartition {
        left: momentum_quadrature(density, window, state, well, -window, -edge),
        center: momentum_quadrature(density, window, state, well, -edge, edge),
        right: momentum_quadrature(density, window, state, well, edge, window),
    })
}

/// `|φ(p)|^2` on `n_points` abscissae spaced uniformly over `[-p_max, p_max]`.
/// The grid is mirror-symmetric bit for bit.
pub fn sample_momentum_density<T: Scalar>(
    state: &Eigenstate<T>,
    well: &WellConfig<T>,
    p_max: T,
    n_points: usize,
) -> Result<SampledDensity<T>> {
    if n_points < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 points, got {n_points}"
        )));
    }
    if !(p_max > T::zero() && p_max.is_finite()) {
        return Err(Error::Domain(format!(
            "p_max must be positive, got {p_max}"
        )));
    }
    let last = n_points - 1;
    let denom = T::from_count(last);
    let abscissae: Vec<T> = (0..n_points)
        .map(|i| {
            let twice = 2 * i as i64 - last as i64;
            p_max * T::from_i64(twice).expect("grid index") / denom
        })
        .collect();
    let values = abscissae
        .iter()
        .map(|&p| momentum_density(state, well, p))
        .collect();
    Ok(SampledDensity {
        space: Space::Momentum,
        abscissae,
        values,
        amplitudes: None,
        meta: StateMeta::of(state, well),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigensolver::{solve_state, solve_state_with, SolverOptions};
    use crate::tuner::tune_v0;
    use crate::Constants;

    fn tuned(n: usize) -> (Eigenstate<f64>, WellConfig<f64>) {
        let t = tune_v0(3.0, 3.0, n, &Constants::default()).unwrap();
        let w = WellConfig::new(3.0, 3.0, t.v0).unwrap();
        (solve_state(&w, n).unwrap(), w)
    }

    #[test]
    fn sinc_peaks_at_plus_minus_hbar_k() {
        let (s, w) = tuned(3);
        let expect = s.a_coeff() / (2.0 * std::f64::consts::PI).sqrt() * 1.5;
        let at_minus = phi_components(&s, &w, -s.k).unwrap();
        let at_plus = phi_components(&s, &w, s.k).unwrap();
        assert!((at_minus.phi_plus.norm() - expect).abs() < 1e-14);
        assert!((at_plus.phi_minus.norm() - expect).abs() < 1e-14);
    }

    #[test]
    fn phi_zero_at_origin_is_region_two_integral() {
        let (s, w) = tuned(2);
        let amp = phi_components(&s, &w, 0.0).unwrap();
        let expect = s.a_coeff() / (2.0 * std::f64::consts::PI).sqrt() * (s.k * 3.0).sin() * 1.5;
        assert!((amp.phi_zero.re - expect).abs() < 1e-15);
        assert_eq!(amp.phi_zero.im, 0.0);
        // continuity through the Taylor switch
        let tiny = phi_components(&s, &w, 1e-9).unwrap();
        assert!((tiny.phi_zero - amp.phi_zero).norm() < 1e-9);
    }

    #[test]
    fn other_regimes_are_rejected() {
        let w = WellConfig::new(3.0, 3.0, 33.0).unwrap();
        let s = solve_state(&w, 1).unwrap();
        assert!(matches!(
            phi_components(&s, &w, 0.0),
            Err(Error::UnsupportedRegime(Regime::Below))
        ));
        assert!(component_integrals(&s, &w).is_err());
        assert!(peak_partition(&s, &w).is_err());
        assert!(numeric_component_integrals(&s, &w).is_err());
    }

    #[test]
    fn hermitian_symmetry() {
        let (s, w) = tuned(4);
        for &p in &[0.3, 1.7, 4.2, 9.9] {
            let plus = phi_components(&s, &w, p).unwrap().total;
            let minus = phi_components(&s, &w, -p).unwrap().total;
            assert!((plus - minus.conj()).norm() < 1e-14);
        }
    }

    #[test]
    fn grid_is_mirror_symmetric() {
        let (s, w) = tuned(1);
        let d = sample_momentum_density(&s, &w, 3.0, 101).unwrap();
        for i in 0..d.len() {
            assert_eq!(d.abscissae[i], -d.abscissae[d.len() - 1 - i]);
        }
        assert_eq!(d.abscissae[50], 0.0);
        assert!(sample_momentum_density(&s, &w, 0.0, 10).is_err());
        assert!(sample_momentum_density(&s, &w, 1.0, 1).is_err());
    }

    #[test]
    fn loose_band_state_still_uses_closed_form() {
        let w = WellConfig::new(3.0, 3.0, 0.457318).unwrap();
        let s = solve_state_with(&w, 1, &SolverOptions::with_regime_tol(1e-4)).unwrap();
        assert_eq!(s.regime, Regime::ZeroCurvature);
        let closed = phi_components(&s, &w, 0.4).unwrap().total;
        let oracle = numeric_fourier_oracle(&s, &w, 0.4);
        assert!((closed - oracle).norm() < 1e-12);
    }
}
