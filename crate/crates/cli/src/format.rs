//! Locale-independent number formatting for CSV output.

/// `%.12g`: twelve significant digits, trailing zeros dropped, exponent
/// form outside `1e-4 <= |x| < 1e12`.
pub fn fmt_g(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        trim_zeros(&format!("{x:.*}", (11 - exp) as usize)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (0.0, "0"),
            (-0.0, "0"),
            (1.0, "1"),
            (-2.5, "-2.5"),
            (0.457317596188283, "0.457317596188"),
            (79.4529543677676, "79.4529543678"),
            (1e-5, "1e-05"),
            (9.5e-6, "9.5e-06"),
            (1e-4, "0.0001"),
            (2.81428012312e-5, "2.81428012312e-05"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (9.99999999999951, "10"),
            (2.0f64.powi(-40), "9.09494701773e-13"),
            (f64::NAN, "nan"),
            (f64::NEG_INFINITY, "-inf"),
        ];
        for (x, want) in cases {
            assert_eq!(fmt_g(x), want, "{x:e}");
        }
    }

    #[test]
    fn twelve_digits_round_trip_to_that_precision() {
        for &x in &[
            std::f64::consts::PI,
            1.0 / 3.0,
            6.02214076e23,
            -1.602176634e-19,
        ] {
            let back: f64 = fmt_g(x).parse().unwrap();
            assert!(((back - x) / x).abs() < 1e-11);
        }
    }
}
