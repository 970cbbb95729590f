//! Elementary functions with removable singularities, evaluated without
//! cancellation near the singular point.

use crate::Scalar;

/// Below this magnitude `sinc`/`sinhc` switch to their Taylor polynomials.
pub(crate) const TAYLOR_THRESHOLD: f64 = 1e-4;

/// Above this magnitude the cancelling differences are evaluated directly.
const SERIES_RADIUS: f64 = 0.5;

/// `sin(x)/x`, with `sinc(0) = 1`.
pub fn sinc<T: Scalar>(x: T) -> T {
    if x.abs() < T::lit(TAYLOR_THRESHOLD) {
        let x2 = x * x;
        T::one() - x2 / T::lit(6.0) + x2 * x2 / T::lit(120.0)
    } else {
        x.sin() / x
    }
}

/// `sinh(x)/x`, with `sinhc(0) = 1`.
pub fn sinhc<T: Scalar>(x: T) -> T {
    if x.abs() < T::lit(TAYLOR_THRESHOLD) {
        let x2 = x * x;
        T::one() + x2 / T::lit(6.0) + x2 * x2 / T::lit(120.0)
    } else {
        x.sinh() / x
    }
}

// Sums x^{2j} / (2j+1)! * sign^j for j >= 1 until the terms stop contributing.
fn odd_factorial_tail<T: Scalar>(x: T, alternating: bool) -> T {
    let x2 = x * x;
    let mut term = T::one();
    let mut sum = T::zero();
    let mut j = 1usize;
    loop {
        let d = T::from_count((2 * j) * (2 * j + 1));
        term = term * x2 / d;
        if alternating {
            term = -term;
        }
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() || j > 60 {
            return sum;
        }
        j += 1;
    }
}

/// `1 - sin(x)/x`.
pub fn one_minus_sinc<T: Scalar>(x: T) -> T {
    if x.abs() < T::lit(SERIES_RADIUS) {
        -odd_factorial_tail(x, true)
    } else {
        T::one() - x.sin() / x
    }
}

/// `sinh(x)/x - 1`.
pub fn sinhc_minus_one<T: Scalar>(x: T) -> T {
    if x.abs() < T::lit(SERIES_RADIUS) {
        odd_factorial_tail(x, false)
    } else {
        x.sinh() / x - T::one()
    }
}

/// `(x - sin x) / x^3`, equal to 1/6 at the origin.
pub fn x_minus_sin_over_cube<T: Scalar>(x: T) -> T {
    if x.abs() < T::lit(SERIES_RADIUS) {
        // 1/3! - x^2/5! + x^4/7! - ...
        let x2 = x * x;
        let mut term = T::lit(1.0 / 6.0);
        let mut sum = term;
        for j in 2..60usize {
            term = -term * x2 / T::from_count((2 * j) * (2 * j + 1));
            sum = sum + term;
            if term.abs() <= T::epsilon() * sum.abs() {
                break;
            }
        }
        sum
    } else {
        (x - x.sin()) / (x * x * x)
    }
}

/// `sinh(κ len) / sinh(κ total)` for `0 <= len <= total`, finite for any `κ`.
pub fn sinh_ratio<T: Scalar>(kappa: T, len: T, total: T) -> T {
    let v = kappa * total;
    if v < T::one() {
        len / total * sinhc(kappa * len) / sinhc(v)
    } else {
        let u = kappa * len;
        let two = T::lit(2.0);
        (u - v).exp() * (-(-two * u).exp_m1()) / (-(-two * v).exp_m1())
    }
}

/// `(sinh(2y)/2y - 1) / sinh^2(y)`, tending to 2/3 at the origin and to
/// `1/y` for large `y`.
pub fn sinh_sq_mass<T: Scalar>(y: T) -> T {
    if y < T::lit(1e-100) {
        T::lit(2.0 / 3.0)
    } else if y < T::lit(20.0) {
        let s = y.sinh();
        sinhc_minus_one(T::lit(2.0) * y) / (s * s)
    } else {
        let s = y.sinh();
        y.tanh().recip() / y - (s * s).recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinc_matches_direct_form_away_from_origin() {
        for &x in &[1e-3, 0.1, 1.0, 7.5, -3.2] {
            let direct: f64 = f64::sin(x) / x;
            assert!((sinc(x) - direct).abs() < 1e-15);
        }
        assert_eq!(sinc(0.0f64), 1.0);
        // continuity across the switch
        let t = TAYLOR_THRESHOLD;
        assert!((sinc(t * 0.999_999) - sinc(t * 1.000_001)).abs() < 1e-14);
    }

    #[test]
    fn series_agree_with_direct_forms_at_switch() {
        let x = SERIES_RADIUS * (1.0 - 1e-9);
        assert!((one_minus_sinc(x) - (1.0 - x.sin() / x)).abs() < 1e-15);
        assert!((sinhc_minus_one(x) - (x.sinh() / x - 1.0)).abs() < 1e-15);
        assert!((x_minus_sin_over_cube(x) - (x - x.sin()) / (x * x * x)).abs() < 1e-13);
    }

    #[test]
    fn sinh_helpers() {
        let (k, l, t) = (0.7f64, 1.2, 3.0);
        assert!((sinh_ratio(k, l, t) - (k * l).sinh() / (k * t).sinh()).abs() < 1e-15);
        assert!((sinh_ratio(1e-9f64, 1.0, 4.0) - 0.25).abs() < 1e-15);
        assert!((sinh_ratio(1e4f64, 2.999, 3.0) - (-10.0f64).exp()).abs() < 1e-15);
        assert!(sinh_ratio(1e4f64, 1.0, 3.0) == 0.0);
        for &y in &[0.3f64, 5.0, 19.999, 20.001, 40.0] {
            let direct = ((2.0 * y).sinh() / (2.0 * y) - 1.0) / y.sinh().powi(2);
            assert!((sinh_sq_mass(y) - direct).abs() < 1e-13, "y = {y}");
        }
        for &y in &[1e-8f64, 1e-4] {
            assert!((sinh_sq_mass(y) - (2.0 / 3.0 - 4.0 * y * y / 45.0)).abs() < 1e-15);
        }
        assert!((sinh_sq_mass(1e4f64) - 1e-4).abs() < 1e-18);
    }

    #[test]
    fn small_argument_limits() {
        let x = 1e-6f64;
        assert!((one_minus_sinc(x) / (x * x) - 1.0 / 6.0).abs() < 1e-12);
        assert!((sinhc_minus_one(x) / (x * x) - 1.0 / 6.0).abs() < 1e-12);
        assert!((x_minus_sin_over_cube(x) - 1.0 / 6.0).abs() < 1e-12);
        assert!((x_minus_sin_over_cube(0.0f64) - 1.0 / 6.0).abs() < 1e-15);
    }
}
