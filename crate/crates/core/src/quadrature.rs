//! Adaptive Simpson quadrature for real and complex integrands.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;

use crate::Scalar;

/// Values the integrator can accumulate: reals and complex numbers over `T`.
pub trait Integrand<T: Scalar>:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<T, Output = Self>
{
    fn magnitude(self) -> T;
}

impl<T: Scalar> Integrand<T> for T {
    #[inline]
    fn magnitude(self) -> T {
        self.abs()
    }
}

impl<T: Scalar> Integrand<T> for Complex<T> {
    #[inline]
    fn magnitude(self) -> T {
        self.re.abs().max(self.im.abs())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SimpsonOptions<T> {
    /// Absolute error target for the whole interval.
    pub abs_tol: T,
    /// Uniform panels the interval is cut into before adapting. Oscillatory
    /// integrands need at least a few panels per period or the first
    /// Simpson estimate can agree with itself by accident.
    pub panels: usize,
    pub max_depth: u32,
}

impl<T: Scalar> Default for SimpsonOptions<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::tol(1e-12, 16.0),
            panels: 8,
            max_depth: 40,
        }
    }
}

impl<T: Scalar> SimpsonOptions<T> {
    pub fn with_tol(abs_tol: T) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    pub fn panels(mut self, panels: usize) -> Self {
        self.panels = panels.max(1);
        self
    }
}

struct Panel<T, V> {
    lo: T,
    hi: T,
    f_lo: V,
    f_mid: V,
    f_hi: V,
    whole: V,
}

fn refine<T, V, F>(f: &F, p: Panel<T, V>, tol: T, depth: u32) -> V
where
    T: Scalar,
    V: Integrand<T>,
    F: Fn(T) -> V,
{
    let two = T::lit(2.0);
    let mid = (p.lo + p.hi) / two;
    let left_mid = (p.lo + mid) / two;
    let right_mid = (mid + p.hi) / two;
    let f_lm = f(left_mid);
    let f_rm = f(right_mid);
    let sixth = (p.hi - p.lo) / T::lit(12.0);
    let left = (p.f_lo + f_lm * T::lit(4.0) + p.f_mid) * sixth;
    let right = (p.f_mid + f_rm * T::lit(4.0) + p.f_hi) * sixth;
    let both = left + right;
    let delta = both - p.whole;
    if depth == 0 || delta.magnitude() <= T::lit(15.0) * tol {
        // Richardson step
        return both + delta * T::lit(1.0 / 15.0);
    }
    let half_tol = tol / two;
    refine(
        f,
        Panel {
            lo: p.lo,
            hi: mid,
            f_lo: p.f_lo,
            f_mid: f_lm,
            f_hi: p.f_mid,
            whole: left,
        },
        half_tol,
        depth - 1,
    ) + refine(
        f,
        Panel {
            lo: mid,
            hi: p.hi,
            f_lo: p.f_mid,
            f_mid: f_rm,
            f_hi: p.f_hi,
            whole: right,
        },
        half_tol,
        depth - 1,
    )
}

/// Integrates `f` over `[lo, hi]`. Reversed limits flip the sign.
pub fn adaptive_simpson<T, V, F>(f: F, lo: T, hi: T, opts: &SimpsonOptions<T>) -> V
where
    T: Scalar,
    V: Integrand<T>,
    F: Fn(T) -> V,
{
    if hi < lo {
        return adaptive_simpson(f, hi, lo, opts) * -T::one();
    }
    let panels = opts.panels.max(1);
    let width = (hi - lo) / T::from_count(panels);
    let tol = opts.abs_tol / T::from_count(panels);
    let mut f_lo = f(lo);
    let mut acc: Option<V> = None;
    for i in 0..panels {
        let a = lo + width * T::from_count(i);
        let b = if i + 1 == panels {
            hi
        } else {
            lo + width * T::from_count(i + 1)
        };
        let m = (a + b) / T::lit(2.0);
        let f_mid = f(m);
        let f_hi = f(b);
        let whole = (f_lo + f_mid * T::lit(4.0) + f_hi) * ((b - a) / T::lit(6.0));
        let piece = refine(
            &f,
            Panel {
                lo: a,
                hi: b,
                f_lo,
                f_mid,
                f_hi,
                whole,
            },
            tol,
            opts.max_depth,
        );
        acc = Some(match acc {
            Some(s) => s + piece,
            None => piece,
        });
        f_lo = f_hi;
    }
    acc.expect("at least one panel")
}

/// Integrates over `[lo, hi]` split at each interior breakpoint, splitting
/// the tolerance evenly between the pieces.
pub fn piecewise_simpson<T, V, F>(f: F, breakpoints: &[T], opts: &SimpsonOptions<T>) -> V
where
    T: Scalar,
    V: Integrand<T>,
    F: Fn(T) -> V,
{
    assert!(breakpoints.len() >= 2, "need at least one interval");
    let pieces = breakpoints.len() - 1;
    let sub = SimpsonOptions {
        abs_tol: opts.abs_tol / T::from_count(pieces),
        ..*opts
    };
    let mut total: Option<V> = None;
    for w in breakpoints.windows(2) {
        let piece = adaptive_simpson(&f, w[0], w[1], &sub);
        total = Some(match total {
            Some(s) => s + piece,
            None => piece,
        });
    }
    total.expect("non-empty")
}

/// Trapezoid rule over tabulated samples.
pub fn trapezoid<T: Scalar>(xs: &[T], ys: &[T]) -> T {
    assert_eq!(xs.len(), ys.len());
    xs.windows(2)
        .zip(ys.windows(2))
        .fold(T::zero(), |acc, (x, y)| {
            acc + (x[1] - x[0]) * (y[0] + y[1]) / T::lit(2.0)
        })
}
