//! Extended reals, the principal branch of the Lambert W function, and the
//! tolerance policy shared by the rest of the crate.

use std::cmp::Ordering;
use std::f64::consts::E;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{domain, invalid, reject_nan, GbdError, Result};

/// A point of `[-inf, +inf]`. A finite value is never NaN.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ExtReal {
    Finite(f64),
    PosInf,
    NegInf,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite(0.0);

    /// Checked conversion; NaN is a domain error.
    pub fn new(v: f64) -> Result<Self> {
        if v.is_nan() {
            Err(domain("ExtReal::new", "NaN is not an extended real"))
        } else {
            Ok(Self::from(v))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_pos_inf(self) -> bool {
        matches!(self, ExtReal::PosInf)
    }

    /// The value as an `f64`, with the infinities mapped to `f64::INFINITY` and
    /// `f64::NEG_INFINITY`.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::Finite(v) => v,
            ExtReal::PosInf => f64::INFINITY,
            ExtReal::NegInf => f64::NEG_INFINITY,
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

/// Panics on NaN: a NaN reaching this point is a bug in the caller.
impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        assert!(!v.is_nan(), "NaN cannot be converted to an extended real");
        if v == f64::INFINITY {
            ExtReal::PosInf
        } else if v == f64::NEG_INFINITY {
            ExtReal::NegInf
        } else {
            ExtReal::Finite(v)
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.to_f64().partial_cmp(&other.to_f64())
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(v) => write!(f, "{v}"),
            ExtReal::PosInf => f.write_str("inf"),
            ExtReal::NegInf => f.write_str("-inf"),
        }
    }
}

/// Extended addition. `+inf + -inf` is a contract violation.
pub fn ext_add(a: ExtReal, b: ExtReal) -> Result<ExtReal> {
    use ExtReal::*;
    match (a, b) {
        (PosInf, NegInf) | (NegInf, PosInf) => {
            Err(GbdError::ContractViolation("+inf + -inf is undefined"))
        }
        (PosInf, _) | (_, PosInf) => Ok(PosInf),
        (NegInf, _) | (_, NegInf) => Ok(NegInf),
        (Finite(x), Finite(y)) => Ok(ExtReal::from(x + y)),
    }
}

/// Multiplication by a finite positive scalar.
pub fn ext_scale(c: f64, a: ExtReal) -> Result<ExtReal> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(domain("ext_scale", format!("scale must be finite and > 0, got {c}")));
    }
    Ok(match a {
        ExtReal::Finite(v) => ExtReal::from(c * v),
        inf => inf,
    })
}

/// Same as [`ext_add`] but panics on `+inf + -inf`.
impl Add for ExtReal {
    type Output = ExtReal;

    fn add(self, rhs: ExtReal) -> ExtReal {
        match ext_add(self, rhs) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

/// Absolute/relative tolerance pair: `|a - b| <= abs + rel * max(|a|, |b|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    abs: f64,
    rel: f64,
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Result<Self> {
        if !(abs >= 0.0 && rel >= 0.0) || abs + rel <= 0.0 || !(abs + rel).is_finite() {
            return Err(invalid(
                "tolerance",
                format!("need abs >= 0, rel >= 0, abs + rel > 0 (got abs={abs}, rel={rel})"),
            ));
        }
        Ok(Self { abs, rel })
    }

    pub const fn absolute(abs: f64) -> Self {
        Self { abs, rel: 0.0 }
    }

    pub fn abs(&self) -> f64 {
        self.abs
    }

    pub fn rel(&self) -> f64 {
        self.rel
    }

    /// Equal infinities compare equal; a finite value is never close to an infinite one.
    pub fn close(&self, a: f64, b: f64) -> bool {
        if a.is_infinite() || b.is_infinite() {
            return a == b;
        }
        (a - b).abs() <= self.abs + self.rel * a.abs().max(b.abs())
    }
}

/// Tolerances used throughout the crate.
pub mod tol {
    use super::Tolerance;

    /// Slack on membership tests of the form `gap <= eps`.
    pub const MEMBERSHIP: f64 = 1e-10;
    /// Slack on monotonicity assertions across a parameter ladder.
    pub const MONOTONE: f64 = 1e-9;
    /// Closed form vs brute-force envelope: `1e-6 * (1 + |value|)`.
    pub const ORACLE_ENV: Tolerance = Tolerance { abs: 1e-6, rel: 1e-6 };
    /// Prox-set Hausdorff distance against the brute-force oracle.
    pub const ORACLE_PROX: f64 = 2e-3;
    /// Relative width used to decide `gamma * e == 1` and similar parameter ties.
    pub const PARAM_TIE: f64 = 1e-12;
    /// Residual bound factor of [`super::lambert_w`]: `|w e^w - x| <= LAMBERT_RESIDUAL * (1 + |x|)`.
    pub const LAMBERT_RESIDUAL: f64 = 1e-12;
}

/// `-1/e`, the branch point of W.
pub const LAMBERT_BRANCH_POINT: f64 = -1.0 / E;

const LAMBERT_MAX_ITER: usize = 50;

/// Principal branch `W0` of the Lambert W function on `[-1/e, +inf)`.
///
/// Halley iteration from `log(1 + x)` (or a branch-point series below `-1/4`).
/// Arguments below `-1/e` by more than `1e-15` are rejected; arguments in that
/// slack band return `-1`.
pub fn lambert_w(x: f64) -> Result<f64> {
    reject_nan("lambert_w", &[x])?;
    if x < LAMBERT_BRANCH_POINT - 1e-15 {
        return Err(domain("lambert_w", format!("argument {x} < -1/e")));
    }
    if x <= LAMBERT_BRANCH_POINT {
        return Ok(-1.0);
    }
    if x == 0.0 || x == f64::INFINITY {
        return Ok(x);
    }

    let mut w = if x < -0.25 {
        let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else {
        x.ln_1p()
    };

    let bound = tol::LAMBERT_RESIDUAL * (1.0 + x.abs());
    for _ in 0..LAMBERT_MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            break;
        }
        let wp1 = w + 1.0;
        if wp1 <= 0.0 {
            // only reachable through rounding right at the branch point
            w = -1.0;
            break;
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        let next = w - step;
        if !next.is_finite() {
            break;
        }
        w = next.max(-1.0);
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) && f.abs() <= bound {
            break;
        }
    }
    Ok(w)
}

/// Evaluates `W` at arguments that the calling formula guarantees to be admissible.
pub(crate) fn w0(x: f64) -> f64 {
    lambert_w(x).unwrap_or_else(|e| panic!("{e}"))
}
