//! Brute-force one-dimensional minimization: the independent ground truth the
//! closed-form envelopes and proxes are checked against.
//!
//! A coarse uniform scan is followed by `refine_rounds` rescans of the window
//! `incumbent ± spacing`, each with `coarse_points` samples. Infinite values are
//! skipped rather than treated as large numbers.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, GbdError, Result};
use crate::interval::Interval;
use crate::scalar::ExtReal;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchWindow {
    lo: f64,
    hi: f64,
    coarse_points: usize,
    refine_rounds: usize,
}

impl SearchWindow {
    pub const DEFAULT_POINTS: usize = 2001;
    pub const DEFAULT_ROUNDS: usize = 4;

    pub fn new(lo: f64, hi: f64, coarse_points: usize, refine_rounds: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(invalid("search window", format!("need finite lo < hi, got [{lo}, {hi}]")));
        }
        if coarse_points < 100 {
            return Err(invalid("search window", "coarse_points must be >= 100"));
        }
        if refine_rounds < 2 {
            return Err(invalid("search window", "refine_rounds must be >= 2"));
        }
        Ok(Self {
            lo,
            hi,
            coarse_points,
            refine_rounds,
        })
    }

    /// `[lo, hi]` with the default resolution.
    pub fn span(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, Self::DEFAULT_POINTS, Self::DEFAULT_ROUNDS)
    }

    /// `[0, 50]`, for distances built on `log`.
    pub fn log_domain() -> Self {
        Self::span(0.0, 50.0).expect("static window")
    }

    /// `[-50, 50]`
    pub fn full_line() -> Self {
        Self::span(-50.0, 50.0).expect("static window")
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn coarse_points(&self) -> usize {
        self.coarse_points
    }

    pub fn refine_rounds(&self) -> usize {
        self.refine_rounds
    }

    pub fn spacing(&self) -> f64 {
        (self.hi - self.lo) / (self.coarse_points - 1) as f64
    }

    fn grid(&self, lo: f64, hi: f64) -> impl Iterator<Item = f64> + '_ {
        let n = self.coarse_points;
        let step = (hi - lo) / (n - 1) as f64;
        (0..n).map(move |i| if i + 1 == n { hi } else { lo + step * i as f64 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleMin {
    pub argmin: f64,
    pub value: ExtReal,
}

/// Grid-refined global minimum of `objective` over the window.
///
/// Ties keep the smallest abscissa, so the result is a deterministic function
/// of the inputs.
pub fn brute_min(objective: impl Fn(f64) -> ExtReal, window: &SearchWindow) -> Result<OracleMin> {
    let mut best: Option<(f64, f64)> = None;
    let consider = |x: f64, best: &mut Option<(f64, f64)>| {
        let v = objective(x).to_f64();
        if v.is_finite() && best.is_none_or(|(_, bv)| v < bv) {
            *best = Some((x, v));
        }
    };
    for x in window.grid(window.lo, window.hi) {
        consider(x, &mut best);
    }
    let Some(_) = best else {
        return Err(GbdError::EmptyDomain {
            lo: window.lo,
            hi: window.hi,
        });
    };
    let mut h = window.spacing();
    for _ in 0..window.refine_rounds {
        let (x0, _) = best.expect("set above");
        let lo = (x0 - h).max(window.lo);
        let hi = (x0 + h).min(window.hi);
        for x in window.grid(lo, hi) {
            consider(x, &mut best);
        }
        h = (hi - lo) / (window.coarse_points - 1) as f64;
    }
    let (argmin, value) = best.expect("set above");
    Ok(OracleMin {
        argmin,
        value: ExtReal::from(value),
    })
}

const EDGE_BISECTIONS: usize = 80;

/// Interval hull of the points where `objective <= min + slack`.
///
/// The hull of the coarse-grid points inside the sublevel set (plus the refined
/// argmin) is computed first, then each end is sharpened by bisection against
/// its outside neighbour. Exact for objectives with interval sublevel sets.
pub fn brute_interval_argmin(
    objective: impl Fn(f64) -> ExtReal,
    window: &SearchWindow,
    slack: f64,
) -> Result<Interval> {
    if slack.is_nan() || slack < 0.0 {
        return Err(invalid("slack", format!("must be >= 0, got {slack}")));
    }
    let m = brute_min(&objective, window)?;
    let level = m.value.to_f64() + slack;
    let inside = |x: f64| objective(x).to_f64() <= level;

    let grid: Vec<f64> = window.grid(window.lo, window.hi).collect();
    let mut first = None;
    let mut last = None;
    for (i, &x) in grid.iter().enumerate() {
        if inside(x) {
            first.get_or_insert(i);
            last = Some(i);
        }
    }

    let mut lo = m.argmin;
    let mut hi = m.argmin;
    let mut lo_out = grid.iter().rev().copied().find(|&g| g < lo);
    let mut hi_out = grid.iter().copied().find(|&g| g > hi);
    if let (Some(i), Some(j)) = (first, last) {
        if grid[i] < lo {
            lo = grid[i];
            lo_out = i.checked_sub(1).map(|k| grid[k]);
        }
        if grid[j] > hi {
            hi = grid[j];
            hi_out = grid.get(j + 1).copied();
        }
    }
    if let Some(out) = lo_out.filter(|&o| !inside(o)) {
        lo = sharpen(lo, out, &inside);
    } else if lo_out.is_some() {
        lo = window.lo;
    }
    if let Some(out) = hi_out.filter(|&o| !inside(o)) {
        hi = sharpen(hi, out, &inside);
    } else if hi_out.is_some() {
        hi = window.hi;
    }
    Interval::closed(lo, hi)
}

fn sharpen(mut good: f64, mut bad: f64, inside: &impl Fn(f64) -> bool) -> f64 {
    for _ in 0..EDGE_BISECTIONS {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn win(lo: f64, hi: f64) -> SearchWindow {
        SearchWindow::span(lo, hi).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(SearchWindow::new(1.0, 0.0, 2001, 4).is_err());
        assert!(SearchWindow::new(0.0, 1.0, 99, 4).is_err());
        assert!(SearchWindow::new(0.0, 1.0, 100, 1).is_err());
        assert!(SearchWindow::new(0.0, f64::INFINITY, 100, 2).is_err());
    }

    #[test]
    fn parabola() {
        let m = brute_min(|x| ExtReal::from((x - 1.0) * (x - 1.0)), &win(0.0, 3.0)).unwrap();
        assert!((m.argmin - 1.0).abs() < 1e-6);
        assert!(m.value.to_f64() < 1e-6);
    }

    #[test]
    fn moreau_piece_at_the_kink() {
        // |x - 1/2| + (x - 1)^2 / 2: soft threshold of y=1 with γ=1 lands on the kink
        let obj = |x: f64| ExtReal::from((x - 0.5).abs() + 0.5 * (x - 1.0) * (x - 1.0));
        let m = brute_min(obj, &win(0.0, 3.0)).unwrap();
        assert!((m.argmin - 0.5).abs() < 1e-9);
        assert!((m.value.to_f64() - 0.125).abs() < 1e-12);
    }

    #[test]
    fn respects_effective_domain() {
        let obj = |x: f64| {
            if (1.0..=2.0).contains(&x) {
                ExtReal::from((x - 1.7).powi(2))
            } else {
                ExtReal::PosInf
            }
        };
        let m = brute_min(obj, &win(-5.0, 5.0)).unwrap();
        assert!((1.0..=2.0).contains(&m.argmin));
        assert!((m.argmin - 1.7).abs() < 1e-9);
    }

    #[test]
    fn empty_domain_error() {
        let err = brute_min(|_| ExtReal::PosInf, &win(0.0, 1.0)).unwrap_err();
        assert!(matches!(err, GbdError::EmptyDomain { .. }));
    }

    #[test]
    fn flat_bottom_interval() {
        let obj = |x: f64| {
            if (0.0..=1.0).contains(&x) {
                ExtReal::ZERO
            } else {
                ExtReal::PosInf
            }
        };
        let set = brute_interval_argmin(obj, &win(-1.0, 2.0), 1e-9).unwrap();
        assert!(set.hausdorff(&Interval::closed(0.0, 1.0).unwrap()).unwrap() < 1e-9);
    }

    #[test]
    fn point_argmin_interval() {
        let obj = |x: f64| ExtReal::from((x - 1.0) * (x - 1.0));
        let set = brute_interval_argmin(obj, &win(0.0, 3.0), 1e-9).unwrap();
        assert!(set.hausdorff(&Interval::point(1.0)).unwrap() < 1e-4);
    }

    #[test]
    fn never_above_any_grid_value() {
        let obj = |x: f64| ExtReal::from((3.0 * x).sin() + 0.1 * x * x);
        let w = win(-4.0, 4.0);
        let m = brute_min(obj, &w).unwrap();
        for x in w.grid(w.lo(), w.hi()) {
            assert!(m.value.to_f64() <= obj(x).to_f64());
        }
        assert_eq!(m, brute_min(obj, &w).unwrap());
    }
}
