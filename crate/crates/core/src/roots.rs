//! Bracketed scalar root refinement.

use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy)]
pub struct Root<T> {
    pub x: T,
    pub fx: T,
    /// Final bracket after bisection.
    pub lo: T,
    pub hi: T,
}

/// Bisects `f` on `[lo, hi]` until the bracket is narrower than
/// `rel_tol * max(|lo|, |hi|)` (or stops shrinking), then takes one secant step
/// through the final bracket if it lands inside and improves `|f|`.
pub fn bisect_polish<T, F>(f: F, lo: T, hi: T, rel_tol: T) -> Result<Root<T>>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if !(f_lo.is_finite() && f_hi.is_finite()) {
        return Err(Error::Solver {
            lo: lo.as_f64(),
            hi: hi.as_f64(),
            reason: "non-finite function value at bracket end".into(),
        });
    }
    if f_lo == T::zero() {
        return Ok(Root {
            x: lo,
            fx: f_lo,
            lo,
            hi: lo,
        });
    }
    if f_hi == T::zero() {
        return Ok(Root {
            x: hi,
            fx: f_hi,
            lo: hi,
            hi,
        });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Solver {
            lo: lo.as_f64(),
            hi: hi.as_f64(),
            reason: "no sign change".into(),
        });
    }
    let two = T::lit(2.0);
    // enough halvings to cross the whole f64 range
    for _ in 0..2200 {
        let mid = lo + (hi - lo) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return Ok(Root {
                x: mid,
                fx: f_mid,
                lo: mid,
                hi: mid,
            });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        if hi - lo <= rel_tol * lo.abs().max(hi.abs()) {
            break;
        }
    }
    let (mut x, mut fx) = if f_lo.abs() <= f_hi.abs() {
        (lo, f_lo)
    } else {
        (hi, f_hi)
    };
    let secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    if secant > lo && secant < hi {
        let fs = f(secant);
        if fs.abs() < fx.abs() {
            x = secant;
            fx = fs;
        }
    }
    Ok(Root { x, fx, lo, hi })
}
