//! Well definition, physical constants, wavenumber maps and the eigenstate record.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, Scalar};

/// Default relative half-width of the zero-curvature band, `|E - V0| <= tol * max(1, V0)`.
pub const DEFAULT_REGIME_TOL: f64 = 1e-9;

/// Reduced Planck constant and particle mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants<T> {
    hbar: T,
    mass: T,
}

impl<T: Scalar> Constants<T> {
    pub fn new(hbar: T, mass: T) -> Result<Self> {
        if !(hbar > T::zero() && hbar.is_finite()) {
            return Err(Error::InvalidWell(format!(
                "hbar must be positive, got {hbar}"
            )));
        }
        if !(mass > T::zero() && mass.is_finite()) {
            return Err(Error::InvalidWell(format!(
                "mass must be positive, got {mass}"
            )));
        }
        let c = Self { hbar, mass };
        let (to_k, to_e) = (c.wavenumber_sq_per_energy(), c.energy_per_wavenumber_sq());
        if !(to_k > T::zero() && to_k.is_finite() && to_e > T::zero() && to_e.is_finite()) {
            return Err(Error::InvalidWell(format!(
                "hbar^2/2m out of range for hbar = {hbar}, mass = {mass}"
            )));
        }
        Ok(c)
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    /// `2m / hbar^2`: converts an energy into a squared wavenumber.
    pub fn wavenumber_sq_per_energy(&self) -> T {
        T::lit(2.0) * self.mass / (self.hbar * self.hbar)
    }

    /// `hbar^2 / 2m`: converts a squared wavenumber into an energy.
    pub fn energy_per_wavenumber_sq(&self) -> T {
        self.hbar * self.hbar / (T::lit(2.0) * self.mass)
    }
}

/// `hbar = 1`, `2m = 1`, so `hbar^2/2m = 1` and `E = k^2`.
impl<T: Scalar> Default for Constants<T> {
    fn default() -> Self {
        Self {
            hbar: T::one(),
            mass: T::lit(0.5),
        }
    }
}

/// Infinite walls at `x = -a` and `x = b`, potential `0` on `(-a, 0)` and `v0` on `(0, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellConfig<T> {
    a: T,
    b: T,
    v0: T,
    constants: Constants<T>,
}

impl<T: Scalar> WellConfig<T> {
    /// Well with the default constants.
    pub fn new(a: T, b: T, v0: T) -> Result<Self> {
        Self::with_constants(a, b, v0, Constants::default())
    }

    pub fn with_constants(a: T, b: T, v0: T, constants: Constants<T>) -> Result<Self> {
        if !(a > T::zero() && a.is_finite()) {
            return Err(Error::InvalidWell(format!("a must be positive, got {a}")));
        }
        if !(b > T::zero() && b.is_finite()) {
            return Err(Error::InvalidWell(format!("b must be positive, got {b}")));
        }
        if !(v0 >= T::zero() && v0.is_finite()) {
            return Err(Error::InvalidWell(format!(
                "v0 must be non-negative, got {v0}"
            )));
        }
        Ok(Self {
            a,
            b,
            v0,
            constants,
        })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn v0(&self) -> T {
        self.v0
    }

    pub fn constants(&self) -> &Constants<T> {
        &self.constants
    }

    /// Total width `a + b`.
    pub fn width(&self) -> T {
        self.a + self.b
    }

    /// `sqrt(2m|V0|)/hbar`. Nothing downstream consumes it.
    pub fn chi(&self) -> T {
        (self.constants.wavenumber_sq_per_energy() * self.v0.abs()).sqrt()
    }

    /// Same well with a different step height.
    pub fn with_v0(&self, v0: T) -> Result<Self> {
        Self::with_constants(self.a, self.b, v0, self.constants)
    }

    /// Regime of energy `e` with the zero-curvature band `tol * max(1, V0)`.
    pub fn classify(&self, e: T, tol: T) -> Regime {
        let band = tol * T::one().max(self.v0);
        if (e - self.v0).abs() <= band {
            Regime::ZeroCurvature
        } else if e < self.v0 {
            Regime::Below
        } else {
            Regime::Above
        }
    }

    /// Flat `key = value` record with keys `a`, `b`, `v0`, `hbar`, `mass`.
    pub fn to_record(&self) -> String {
        format!(
            "a = {}\nb = {}\nv0 = {}\nhbar = {}\nmass = {}\n",
            self.a, self.b, self.v0, self.constants.hbar, self.constants.mass
        )
    }

    /// Parses a record written by [`to_record`](Self::to_record). `hbar` and
    /// `mass` may be omitted; other unknown keys are rejected.
    pub fn from_record(text: &str) -> Result<Self> {
        let pairs = parse_record(text)?;
        if let Some(key) = pairs.keys().find(|k| !WELL_KEYS.contains(&k.as_str())) {
            return Err(Error::Parse(format!("unknown key `{key}`")));
        }
        let get = |key: &str| -> Result<T> {
            let raw = pairs
                .get(key)
                .ok_or_else(|| Error::Parse(format!("missing key `{key}`")))?;
            parse_scalar(key, raw)
        };
        let defaults = Constants::<T>::default();
        let hbar = match pairs.get("hbar") {
            Some(v) => parse_scalar("hbar", v)?,
            None => defaults.hbar,
        };
        let mass = match pairs.get("mass") {
            Some(v) => parse_scalar("mass", v)?,
            None => defaults.mass,
        };
        Self::with_constants(
            get("a")?,
            get("b")?,
            get("v0")?,
            Constants::new(hbar, mass)?,
        )
    }
}

/// Keys understood by [`WellConfig::from_record`].
pub const WELL_KEYS: [&str; 5] = ["a", "b", "v0", "hbar", "mass"];

/// Splits a flat `key = value` text (blank lines and `#` comments ignored)
/// into a map. Duplicate keys are an error.
pub fn parse_record(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `key = value`", lineno + 1)))?;
        let key = key.trim();
        if key.is_empty() {
            return Err(Error::Parse(format!("line {}: empty key", lineno + 1)));
        }
        if out
            .insert(key.to_string(), value.trim().to_string())
            .is_some()
        {
            return Err(Error::Parse(format!("duplicate key `{key}`")));
        }
    }
    Ok(out)
}

pub fn parse_scalar<T: Scalar>(key: &str, raw: &str) -> Result<T> {
    raw.parse::<T>()
        .map_err(|_| Error::Parse(format!("`{key}`: cannot parse `{raw}` as a number")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `E < V0`: evanescent in Region II.
    Below,
    /// `E > V0`: oscillatory in Region II.
    Above,
    /// `E = V0`: linear in Region II.
    ZeroCurvature,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Below => "below",
            Regime::Above => "above",
            Regime::ZeroCurvature => "zero-curvature",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "below" => Ok(Regime::Below),
            "above" => Ok(Regime::Above),
            "zero-curvature" => Ok(Regime::ZeroCurvature),
            other => Err(Error::Parse(format!("unknown regime `{other}`"))),
        }
    }
}

/// One bound state. The wavefunction is
/// `norm * amp_i * sin(k (x + a))` on `[-a, 0]` and `norm * amp_ii * R(x)` on
/// `[0, b]`, where `R` is `sinh(kappa (x - b))`, `sin(q (x - b))` or `(x - b)`
/// depending on the regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenstate<T> {
    /// 1-based; the state has `n - 1` interior nodes.
    pub n: usize,
    pub energy: T,
    pub regime: Regime,
    /// Region I wavenumber.
    pub k: T,
    /// `kappa` (below), `q` (above) or zero (zero curvature).
    pub secondary: T,
    pub amp_i: T,
    pub amp_ii: T,
    pub norm: T,
}

impl<T: Scalar> Eigenstate<T> {
    /// Normalized Region I amplitude, `A` in `A sin(k (x + a))`.
    pub fn a_coeff(&self) -> T {
        self.norm * self.amp_i
    }

    /// Normalized Region II amplitude.
    pub fn c_coeff(&self) -> T {
        self.norm * self.amp_ii
    }
}

fn domain<T: Scalar>(what: &str, e: T) -> Error {
    Error::Domain(format!("{what} (E = {e})"))
}

/// `sqrt(2 m E) / hbar`.
pub fn wavenumber_k<T: Scalar>(e: T, c: &Constants<T>) -> Result<T> {
    if !(e >= T::zero()) {
        return Err(domain("k needs E >= 0", e));
    }
    Ok((c.wavenumber_sq_per_energy() * e).sqrt())
}

/// `sqrt(2 m (V0 - E)) / hbar`, defined for `E <= V0`.
pub fn wavenumber_kappa<T: Scalar>(e: T, well: &WellConfig<T>) -> Result<T> {
    if !(e <= well.v0) {
        return Err(domain("kappa needs E <= V0", e));
    }
    Ok((well.constants.wavenumber_sq_per_energy() * (well.v0 - e)).sqrt())
}

/// `sqrt(2 m (E - V0)) / hbar`, defined for `E >= V0`.
pub fn wavenumber_q<T: Scalar>(e: T, well: &WellConfig<T>) -> Result<T> {
    if !(e >= well.v0) {
        return Err(domain("q needs E >= V0", e));
    }
    Ok((well.constants.wavenumber_sq_per_energy() * (e - well.v0)).sqrt())
}
