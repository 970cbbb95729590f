//! Bound-state spectrum of the asymmetric infinite square well.
//!
//! Eigenvalues are the zeros of a single characteristic function that is
//! continuous in `E` across all three regimes:
//!
//! ```text
//! g(E) = sin(ka) cosh(κb) + k cos(ka) sinh(κb)/κ    E < V0
//! g(E) = sin(ka) + k b cos(ka)                       E = V0
//! g(E) = sin(ka) cos(qb)  + k cos(ka) sin(qb)/q      E > V0
//! ```
//!
//! `g(E)` is the value at `x = b` of the solution that starts as
//! `sin(k(x + a))` at the left wall, so its zeros are exactly the energies at
//! which the right wall condition is also met. The number of interior zeros
//! of that same solution counts the eigenvalues below `E`. Bisecting on that
//! count between `E_n(a + b)` and `V0 + E_n(a + b)` (infinite-well levels)
//! isolates the `n`-th eigenvalue, which is then refined on `g`.

use crate::model::{wavenumber_k, Eigenstate, Regime, WellConfig, DEFAULT_REGIME_TOL};
use crate::roots::bisect_polish;
use crate::special::sinhc;
use crate::wavefunction;
use crate::{Error, Result, Scalar};

/// Bisection steps allowed on the zero count; enough to resolve any pair of
/// adjacent `f64` levels between the bounds.
const MAX_COUNT_STEPS: usize = 4096;

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions<T> {
    /// Relative half-width of the zero-curvature band.
    pub regime_tol: T,
    /// Bisection stops once the bracket is below `root_tol * E`.
    pub root_tol: T,
}

impl<T: Scalar> Default for SolverOptions<T> {
    fn default() -> Self {
        Self {
            regime_tol: T::tol(DEFAULT_REGIME_TOL, 4.0),
            root_tol: T::tol(1e-13, 4.0),
        }
    }
}

impl<T: Scalar> SolverOptions<T> {
    pub fn with_regime_tol(regime_tol: T) -> Self {
        Self {
            regime_tol,
            ..Self::default()
        }
    }
}

/// The lowest `states.len()` bound states of `well`, in increasing energy.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub well: WellConfig<T>,
    pub states: Vec<Eigenstate<T>>,
}

impl<T: Scalar> Spectrum<T> {
    pub fn energies(&self) -> Vec<T> {
        self.states.iter().map(|s| s.energy).collect()
    }

    pub fn count(&self, regime: Regime) -> usize {
        self.states.iter().filter(|s| s.regime == regime).count()
    }
}

// Region II data of the left-wall solution at energy `e`.
enum RegionTwo<T> {
    Evanescent { kappa: T },
    Linear,
    Oscillatory { q: T },
}

fn region_two<T: Scalar>(e: T, well: &WellConfig<T>) -> RegionTwo<T> {
    let s = well.constants().wavenumber_sq_per_energy();
    if e < well.v0() {
        RegionTwo::Evanescent {
            kappa: (s * (well.v0() - e)).sqrt(),
        }
    } else if e > well.v0() {
        RegionTwo::Oscillatory {
            q: (s * (e - well.v0())).sqrt(),
        }
    } else {
        RegionTwo::Linear
    }
}

fn check_energy<T: Scalar>(e: T) -> Result<()> {
    if e > T::zero() && e.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "characteristic function needs E > 0, got {e}"
        )))
    }
}

/// Pole-free characteristic function `g(E)`; its zeros are the eigenvalues.
pub fn characteristic<T: Scalar>(e: T, well: &WellConfig<T>) -> Result<T> {
    check_energy(e)?;
    let k = wavenumber_k(e, well.constants())?;
    let (s, c) = (k * well.a()).sin_cos();
    let b = well.b();
    Ok(match region_two(e, well) {
        RegionTwo::Evanescent { kappa } => s * (kappa * b).cosh() + k * c * b * sinhc(kappa * b),
        RegionTwo::Linear => s + k * b * c,
        RegionTwo::Oscillatory { q } => s * (q * b).cos() + k * c * b * crate::special::sinc(q * b),
    })
}

// g(E) times exp(-κb) below V0 (a positive factor, so zeros and signs are
// unchanged); identical to g elsewhere. Stays finite for deep steps.
fn scaled_characteristic<T: Scalar>(e: T, well: &WellConfig<T>) -> T {
    let k = (well.constants().wavenumber_sq_per_energy() * e).sqrt();
    let (s, c) = (k * well.a()).sin_cos();
    let b = well.b();
    match region_two(e, well) {
        RegionTwo::Evanescent { kappa } => {
            let y = kappa * b;
            let damp = (-T::lit(2.0) * y).exp();
            let half = T::lit(0.5);
            // cosh(y) e^{-y} and sinh(y)/y e^{-y}
            let ch = half * (T::one() + damp);
            let sh_over_y = if y < T::lit(0.5) {
                sinhc(y) * (-y).exp()
            } else {
                half * (T::one() - damp) / y
            };
            s * ch + k * c * b * sh_over_y
        }
        RegionTwo::Linear => s + k * b * c,
        RegionTwo::Oscillatory { q } => s * (q * b).cos() + k * c * b * crate::special::sinc(q * b),
    }
}

/// Number of zeros on `(-a, b)` of the solution that vanishes at `x = -a`.
/// Equals the number of eigenvalues strictly below `e` when `e` is not
/// itself an eigenvalue.
pub fn zero_count<T: Scalar>(e: T, well: &WellConfig<T>) -> usize {
    let k = (well.constants().wavenumber_sq_per_energy() * e).sqrt();
    let ka = k * well.a();
    let (s, c) = ka.sin_cos();
    let region_one = (ka / T::PI()).floor_count();
    let region_two = match region_two(e, well) {
        RegionTwo::Oscillatory { q } => {
            // psi_II(x) = R sin(q x + theta)
            let theta = s.atan2(k * c / q);
            let lo = theta / T::PI();
            let hi = (q * well.b() + theta) / T::PI();
            let n = hi.ceil() - lo.floor() - T::one();
            n.floor_count()
        }
        _ => {
            let end = scaled_characteristic(e, well);
            usize::from(s != T::zero() && s * end < T::zero())
        }
    };
    region_one.saturating_add(region_two)
}

/// `n`-th level of the infinite well of width `a + b`, a lower bound on `E_n`.
pub fn energy_lower_bound<T: Scalar>(well: &WellConfig<T>, n: usize) -> T {
    let c = well.constants();
    c.energy_per_wavenumber_sq() * (T::from_count(n) * T::PI() / well.width()).powi(2)
}

/// Upper bound on the `n`-th eigenvalue: the potential never exceeds `V0`,
/// so `E_n <= V0 + E_n(infinite well of width a + b)`.
pub fn energy_upper_bound<T: Scalar>(well: &WellConfig<T>, n: usize) -> T {
    well.v0() + energy_lower_bound(well, n)
}

/// Lowest `n_max` states of `well`.
pub fn solve_spectrum<T: Scalar>(well: &WellConfig<T>, n_max: usize) -> Result<Spectrum<T>> {
    solve_spectrum_with(well, n_max, &SolverOptions::default())
}

pub fn solve_spectrum_with<T: Scalar>(
    well: &WellConfig<T>,
    n_max: usize,
    opts: &SolverOptions<T>,
) -> Result<Spectrum<T>> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let states = (1..=n_max)
        .map(|n| build_state(well, n, find_level(well, n, opts)?, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum {
        well: *well,
        states,
    })
}

/// The `n`-th state (1-based), checked to have `n - 1` interior nodes.
pub fn solve_state<T: Scalar>(well: &WellConfig<T>, n: usize) -> Result<Eigenstate<T>> {
    solve_state_with(well, n, &SolverOptions::default())
}

pub fn solve_state_with<T: Scalar>(
    well: &WellConfig<T>,
    n: usize,
    opts: &SolverOptions<T>,
) -> Result<Eigenstate<T>> {
    if n == 0 {
        return Err(Error::Domain("quantum number starts at 1".into()));
    }
    let e = find_level(well, n, opts)?;
    let state = build_state(well, n, e, opts)?;
    let nodes = wavefunction::count_nodes(&state, well);
    if nodes != n - 1 {
        return Err(Error::Solver {
            lo: e.as_f64(),
            hi: e.as_f64(),
            reason: format!("state {n} has {nodes} interior nodes"),
        });
    }
    Ok(state)
}

fn solver_error<T: Scalar>(lo: T, hi: T, reason: impl Into<String>) -> Error {
    Error::Solver {
        lo: lo.as_f64(),
        hi: hi.as_f64(),
        reason: reason.into(),
    }
}

/// Bracket `[lo, hi]` with exactly `n - 1` eigenvalues below `lo` and `n`
/// below `hi`.
pub fn isolate_level<T: Scalar>(well: &WellConfig<T>, n: usize) -> Result<(T, T)> {
    let bottom = energy_lower_bound(well, n);
    let top = energy_upper_bound(well, n);
    let mut lo = bottom / T::lit(2.0);
    let mut hi = top + top * T::lit(1e-6);
    let (mut count_lo, mut count_hi) = (zero_count(lo, well), zero_count(hi, well));
    if count_lo >= n || count_hi < n {
        return Err(solver_error(
            lo,
            hi,
            format!("level {n} is not between the infinite-well bounds"),
        ));
    }
    for _ in 0..MAX_COUNT_STEPS {
        if count_lo == n - 1 && count_hi == n {
            return Ok((lo, hi));
        }
        let mid = lo + (hi - lo) / T::lit(2.0);
        if !(mid > lo && mid < hi) {
            break;
        }
        let count = zero_count(mid, well);
        if count >= n {
            hi = mid;
            count_hi = count;
        } else {
            lo = mid;
            count_lo = count;
        }
    }
    Err(solver_error(
        lo,
        hi,
        format!("could not separate level {n} from its neighbours"),
    ))
}

fn find_level<T: Scalar>(well: &WellConfig<T>, n: usize, opts: &SolverOptions<T>) -> Result<T> {
    let (lo, hi) = isolate_level(well, n)?;
    let g = |e: T| scaled_characteristic(e, well);
    let e = if g(hi) == T::zero() {
        hi
    } else if g(lo) == T::zero() {
        lo
    } else {
        bisect_polish(g, lo, hi, opts.root_tol)?.x
    };
    Ok(e)
}

/// Residual of the regime's tan/tanh eigenvalue condition, relative to the
/// size of its terms, or `None` where the condition has a pole.
pub fn condition_residual<T: Scalar>(e: T, well: &WellConfig<T>) -> Option<T> {
    let k = (well.constants().wavenumber_sq_per_energy() * e).sqrt();
    let ka = k * well.a();
    let b = well.b();
    let pole = T::lit(1e-6);
    if ka.cos().abs() < pole {
        return None;
    }
    let t = ka.tan();
    let (lhs, rhs) = match region_two(e, well) {
        RegionTwo::Evanescent { kappa } => (kappa * t, -k * (kappa * b).tanh()),
        RegionTwo::Linear => (t, -k * b),
        RegionTwo::Oscillatory { q } => {
            if (q * b).cos().abs() < pole {
                return None;
            }
            (q * t, -k * (q * b).tan())
        }
    };
    Some((lhs - rhs).abs() / (lhs.abs() + rhs.abs() + T::one()))
}

/// Assembles the eigenstate record for a root `e` of the characteristic function.
pub fn build_state<T: Scalar>(
    well: &WellConfig<T>,
    n: usize,
    e: T,
    opts: &SolverOptions<T>,
) -> Result<Eigenstate<T>> {
    check_energy(e)?;
    let k = wavenumber_k(e, well.constants())?;
    let regime = well.classify(e, opts.regime_tol);
    let s = well.constants().wavenumber_sq_per_energy();
    let (sin_ka, cos_ka) = (k * well.a()).sin_cos();
    let b = well.b();
    let (secondary, amp_ii) = match regime {
        // psi_II = C (x - b): value matching at 0 gives C = -sin(ka)/b
        Regime::ZeroCurvature => (T::zero(), -sin_ka / b),
        Regime::Below => {
            let kappa = (s * (well.v0() - e)).sqrt();
            (kappa, -sin_ka / (kappa * b).sinh())
        }
        Regime::Above => {
            let q = (s * (e - well.v0())).sqrt();
            let (sin_qb, cos_qb) = (q * b).sin_cos();
            // value matching degenerates when sin(qb) -> 0; use the slope there
            let c = if sin_qb.abs() >= cos_qb.abs() {
                -sin_ka / sin_qb
            } else {
                k * cos_ka / (q * cos_qb)
            };
            (q, c)
        }
    };
    let mut state = Eigenstate {
        n,
        energy: e,
        regime,
        k,
        secondary,
        amp_i: T::one(),
        amp_ii,
        norm: T::one(),
    };
    state.norm = wavefunction::normalization(&state, well);
    Ok(state)
}
