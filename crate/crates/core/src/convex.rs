//! A fixed catalog of proper lsc convex functions on the real line, each with
//! its Fenchel conjugate, subdifferential and effective domains in closed form.

use serde::{Deserialize, Serialize};

use crate::error::{domain, invalid, reject_nan, Result};
use crate::interval::Interval;
use crate::scalar::{tol, ExtReal};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ConvexFunction {
    /// `x^2 / 2`
    Energy,
    /// `x log x - x` on `[0, inf)` with `0 log 0 = 0`.
    BoltzmannShannon,
    /// `|x - center|`
    AbsShift { center: f64 },
    /// `0` on the set, `+inf` off it.
    Indicator(Interval),
    /// `slope * x`
    Linear { slope: f64 },
}

pub fn energy() -> ConvexFunction {
    ConvexFunction::Energy
}

pub fn boltzmann_shannon() -> ConvexFunction {
    ConvexFunction::BoltzmannShannon
}

pub fn abs_shift(center: f64) -> Result<ConvexFunction> {
    if !center.is_finite() {
        return Err(domain("abs_shift", format!("center must be finite, got {center}")));
    }
    Ok(ConvexFunction::AbsShift { center })
}

pub fn indicator(set: Interval) -> Result<ConvexFunction> {
    if set.is_empty() {
        return Err(invalid("indicator", "the set must be nonempty"));
    }
    Ok(ConvexFunction::Indicator(set))
}

pub fn linear(slope: f64) -> Result<ConvexFunction> {
    if !slope.is_finite() {
        return Err(domain("linear", format!("slope must be finite, got {slope}")));
    }
    Ok(ConvexFunction::Linear { slope })
}

/// `x log x` with `0 log 0 = 0`.
pub(crate) fn xlogx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

impl ConvexFunction {
    pub fn name(&self) -> String {
        match self {
            ConvexFunction::Energy => "energy".into(),
            ConvexFunction::BoltzmannShannon => "ent".into(),
            ConvexFunction::AbsShift { center } => format!("|x-{center}|"),
            ConvexFunction::Indicator(c) => format!("iota_{c}"),
            ConvexFunction::Linear { slope } => format!("{slope}x"),
        }
    }

    pub fn eval(&self, x: f64) -> ExtReal {
        match *self {
            ConvexFunction::Energy => ExtReal::from(0.5 * x * x),
            ConvexFunction::BoltzmannShannon => {
                if x < 0.0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::from(xlogx(x) - x)
                }
            }
            ConvexFunction::AbsShift { center } => ExtReal::from((x - center).abs()),
            ConvexFunction::Indicator(c) => {
                if c.contains(x) {
                    ExtReal::ZERO
                } else {
                    ExtReal::PosInf
                }
            }
            ConvexFunction::Linear { slope } => ExtReal::from(slope * x),
        }
    }

    /// Fenchel conjugate `f*(v) = sup_x (x v - f(x))`.
    pub fn conj(&self, v: f64) -> ExtReal {
        match *self {
            ConvexFunction::Energy => ExtReal::from(0.5 * v * v),
            ConvexFunction::BoltzmannShannon => ExtReal::from(v.exp()),
            ConvexFunction::AbsShift { center } => {
                if v.abs() <= 1.0 {
                    ExtReal::from(center * v)
                } else {
                    ExtReal::PosInf
                }
            }
            // support function of the set
            ConvexFunction::Indicator(c) => {
                if v > 0.0 {
                    ExtReal::from(c.hi().to_f64() * v)
                } else if v < 0.0 {
                    ExtReal::from(c.lo().to_f64() * v)
                } else {
                    ExtReal::ZERO
                }
            }
            ConvexFunction::Linear { slope } => {
                if v == slope {
                    ExtReal::ZERO
                } else {
                    ExtReal::PosInf
                }
            }
        }
    }

    /// The subdifferential `∂f(x)` as a closed interval (possibly empty or unbounded).
    pub fn subdiff(&self, x: f64) -> Interval {
        match *self {
            ConvexFunction::Energy => Interval::point(x),
            ConvexFunction::BoltzmannShannon => {
                if x > 0.0 {
                    Interval::point(x.ln())
                } else {
                    Interval::empty()
                }
            }
            ConvexFunction::AbsShift { center } => {
                if x > center {
                    Interval::point(1.0)
                } else if x < center {
                    Interval::point(-1.0)
                } else {
                    Interval::closed(-1.0, 1.0).expect("static interval")
                }
            }
            // normal cone
            ConvexFunction::Indicator(c) => {
                if !c.contains(x) {
                    return Interval::empty();
                }
                let at_lo = c.lo().finite() == Some(x);
                let at_hi = c.hi().finite() == Some(x);
                match (at_lo, at_hi) {
                    (true, true) => Interval::reals(),
                    (true, false) => Interval::at_most(0.0),
                    (false, true) => Interval::at_least(0.0),
                    (false, false) => Interval::point(0.0),
                }
            }
            ConvexFunction::Linear { slope } => Interval::point(slope),
        }
    }

    /// Effective domain `dom f`.
    pub fn dom(&self) -> Interval {
        match *self {
            ConvexFunction::BoltzmannShannon => Interval::nonnegative(),
            ConvexFunction::Indicator(c) => c,
            _ => Interval::reals(),
        }
    }

    /// `dom ∂f`
    pub fn dom_subdiff(&self) -> Interval {
        match *self {
            ConvexFunction::BoltzmannShannon => Interval::positive(),
            ConvexFunction::Indicator(c) => c,
            _ => Interval::reals(),
        }
    }

    /// Fenchel–Young gap `f(x) + f*(v) - x v`, `+inf` when either term is.
    pub fn fenchel_young_gap(&self, x: f64, v: f64) -> ExtReal {
        match (self.eval(x), self.conj(v)) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::from(a + b - x * v),
            _ => ExtReal::PosInf,
        }
    }
}

/// `v ∈ ∂_ε f(x)`, i.e. `f(x) + f*(v) <= x v + eps` up to [`tol::MEMBERSHIP`].
pub fn eps_subdiff_contains(f: &ConvexFunction, x: f64, v: f64, eps: f64) -> Result<bool> {
    reject_nan("eps_subdiff_contains", &[x, v, eps])?;
    if eps < 0.0 {
        return Err(domain("eps_subdiff_contains", "eps must be >= 0"));
    }
    Ok(match f.fenchel_young_gap(x, v) {
        ExtReal::Finite(g) => g <= eps + tol::MEMBERSHIP,
        _ => false,
    })
}

const EXPAND_LIMIT: f64 = 1e12;
const BISECT_ITERS: usize = 200;

/// The ε-subdifferential `∂_ε f(x) = {v : f(x) + f*(v) - x v <= eps}` as a
/// closed interval, located by bisection on the Fenchel–Young gap. Ends
/// further than `1e12` from the starting subgradient are reported unbounded.
pub fn eps_subdiff(f: &ConvexFunction, x: f64, eps: f64) -> Result<Interval> {
    reject_nan("eps_subdiff", &[x, eps])?;
    if eps < 0.0 {
        return Err(domain("eps_subdiff", "eps must be >= 0"));
    }
    if !f.eval(x).is_finite() {
        return Ok(Interval::empty());
    }
    let inside = |v: f64| matches!(f.fenchel_young_gap(x, v), ExtReal::Finite(g) if g <= eps);

    let Some(start) = starting_subgradient(f, x, &inside) else {
        return Ok(Interval::empty());
    };

    let hi = expand_and_bisect(start, 1.0, &inside);
    let lo = expand_and_bisect(start, -1.0, &inside);
    Interval::new(ExtReal::from(lo), ExtReal::from(hi), true, true)
}

fn starting_subgradient(f: &ConvexFunction, x: f64, inside: &impl Fn(f64) -> bool) -> Option<f64> {
    let sd = f.subdiff(x);
    if !sd.is_empty() {
        let v = match (sd.lo().finite(), sd.hi().finite()) {
            (Some(a), Some(b)) => a + 0.5 * (b - a),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 0.0,
        };
        if inside(v) {
            return Some(v);
        }
    }
    if inside(0.0) {
        return Some(0.0);
    }
    let mut r = 1.0;
    while r <= 1e6 {
        for v in [r, -r] {
            if inside(v) {
                return Some(v);
            }
        }
        r *= 2.0;
    }
    None
}

/// Last point satisfying `inside` along `start + dir * t`, `t >= 0`; ±inf past the limit.
fn expand_and_bisect(start: f64, dir: f64, inside: &impl Fn(f64) -> bool) -> f64 {
    let mut good = start;
    let mut step = 1.0;
    let bad = loop {
        let probe = start + dir * step;
        if !inside(probe) {
            break probe;
        }
        good = probe;
        step *= 2.0;
        if step > EXPAND_LIMIT {
            return dir * f64::INFINITY;
        }
    };
    let (mut good, mut bad) = (good, bad);
    for _ in 0..BISECT_ITERS {
        let mid = good + 0.5 * (bad - good);
        if mid == good || mid == bad {
            break;
        }
        if inside(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}
