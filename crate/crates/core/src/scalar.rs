//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating-point type the solvers are written against (`f32` or `f64`).
///
/// Tolerances in this crate are quoted for `f64`; with `f32` they are
/// clamped to a small multiple of machine epsilon instead.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 literal representable")
    }

    /// Conversion from a count or index.
    #[inline]
    fn from_count(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("count representable")
    }

    /// Widening conversion used for diagnostics and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// `floor(self)` as a count: 0 for negative or NaN, saturating at `usize::MAX`.
    #[inline]
    fn floor_count(self) -> usize {
        let f = self.floor();
        if !(f > Self::zero()) {
            0
        } else {
            f.to_usize().unwrap_or(usize::MAX)
        }
    }

    /// `max(tol, factor * epsilon)`: the tightest tolerance that still makes sense for `Self`.
    #[inline]
    fn tol(tol: f64, factor: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(factor);
        let t = Self::lit(tol);
        if t > floor {
            t
        } else {
            floor
        }
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_count_saturates() {
        assert_eq!(2.9f64.floor_count(), 2);
        assert_eq!((-1.5f64).floor_count(), 0);
        assert_eq!(f64::NAN.floor_count(), 0);
        assert_eq!(1e300f64.floor_count(), usize::MAX);
        assert_eq!(3.0f32.floor_count(), 3);
    }
}
