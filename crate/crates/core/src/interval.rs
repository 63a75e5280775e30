use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::scalar::ExtReal;

/// A (possibly empty, possibly unbounded) interval of the real line.
///
/// Nonempty intervals satisfy `lo <= hi`; infinite endpoints are always open.
/// The empty interval has the canonical representation `(+inf, -inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: ExtReal,
    hi: ExtReal,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn new(lo: ExtReal, hi: ExtReal, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo == ExtReal::PosInf || hi == ExtReal::NegInf {
            return Err(invalid("interval", "lower end +inf or upper end -inf"));
        }
        if lo > hi {
            return Err(invalid("interval", format!("lo {lo} > hi {hi}")));
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(invalid("interval", "degenerate interval must be closed"));
        }
        Ok(Self {
            lo,
            hi,
            lo_closed: lo_closed && lo.is_finite(),
            hi_closed: hi_closed && hi.is_finite(),
        })
    }

    pub const fn empty() -> Self {
        Self {
            lo: ExtReal::PosInf,
            hi: ExtReal::NegInf,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub const fn reals() -> Self {
        Self {
            lo: ExtReal::NegInf,
            hi: ExtReal::PosInf,
            lo_closed: false,
            hi_closed: false,
        }
    }

    /// `[a, b]`
    pub fn closed(a: f64, b: f64) -> Result<Self> {
        Self::new(ExtReal::new(a)?, ExtReal::new(b)?, true, true)
    }

    /// `{a}`
    pub fn point(a: f64) -> Self {
        Self {
            lo: ExtReal::from(a),
            hi: ExtReal::from(a),
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// `[0, +inf)`
    pub const fn nonnegative() -> Self {
        Self {
            lo: ExtReal::ZERO,
            hi: ExtReal::PosInf,
            lo_closed: true,
            hi_closed: false,
        }
    }

    /// `(0, +inf)`
    pub const fn positive() -> Self {
        Self {
            lo: ExtReal::ZERO,
            hi: ExtReal::PosInf,
            lo_closed: false,
            hi_closed: false,
        }
    }

    /// `[a, +inf)`
    pub fn at_least(a: f64) -> Self {
        Self {
            lo: ExtReal::from(a),
            hi: ExtReal::PosInf,
            lo_closed: true,
            hi_closed: false,
        }
    }

    /// `(-inf, b]`
    pub fn at_most(b: f64) -> Self {
        Self {
            lo: ExtReal::NegInf,
            hi: ExtReal::from(b),
            lo_closed: false,
            hi_closed: true,
        }
    }

    pub fn lo(&self) -> ExtReal {
        self.lo
    }

    pub fn hi(&self) -> ExtReal {
        self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        !self.is_empty() && self.lo == self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.is_empty() || (self.lo.is_finite() && self.hi.is_finite())
    }

    pub fn contains(&self, x: f64) -> bool {
        if self.is_empty() || x.is_nan() {
            return false;
        }
        let lo = self.lo.to_f64();
        let hi = self.hi.to_f64();
        let above = if self.lo_closed { x >= lo } else { x > lo };
        let below = if self.hi_closed { x <= hi } else { x < hi };
        above && below
    }

    /// Topological closure (finite endpoints become closed).
    pub fn closure(&self) -> Self {
        if self.is_empty() {
            return *self;
        }
        Self {
            lo_closed: self.lo.is_finite(),
            hi_closed: self.hi.is_finite(),
            ..*self
        }
    }

    /// `{-v : v in self}`
    pub fn negate(&self) -> Self {
        if self.is_empty() {
            return *self;
        }
        let neg = |e: ExtReal| ExtReal::from(-e.to_f64());
        Self {
            lo: neg(self.hi),
            hi: neg(self.lo),
            lo_closed: self.hi_closed,
            hi_closed: self.lo_closed,
        }
    }

    /// Midpoint of a bounded nonempty interval.
    pub fn midpoint(&self) -> Option<f64> {
        if self.is_empty() || !self.is_bounded() {
            return None;
        }
        let (a, b) = (self.lo.to_f64(), self.hi.to_f64());
        Some(a + 0.5 * (b - a))
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        if self.is_empty() {
            return true;
        }
        if other.is_empty() {
            return false;
        }
        let lo_ok = self.lo > other.lo
            || (self.lo == other.lo && (other.lo_closed || !self.lo_closed));
        let hi_ok = self.hi < other.hi
            || (self.hi == other.hi && (other.hi_closed || !self.hi_closed));
        lo_ok && hi_ok
    }

    /// Hausdorff distance between the closures of two nonempty intervals;
    /// `None` if either is empty.
    pub fn hausdorff(&self, other: &Interval) -> Option<f64> {
        if self.is_empty() || other.is_empty() {
            return None;
        }
        let end = |a: ExtReal, b: ExtReal| {
            if a == b {
                0.0
            } else {
                (a.to_f64() - b.to_f64()).abs()
            }
        };
        Some(end(self.lo, other.lo).max(end(self.hi, other.hi)))
    }

    /// Endpoints as `f64` (`lo > hi` for the empty interval).
    pub fn bounds(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}
