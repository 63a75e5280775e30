//! Numerical checks of the inequalities and limit theorems satisfied by GBD
//! envelopes, packaged as [`SweepReport`]s.
//!
//! Every check is a deterministic function of its arguments. Per-point work is
//! spread over rayon's pool; the report keeps input order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::convex::ConvexFunction;
use crate::distances::NamedDistance;
use crate::envelopes::{
    envelope, envelope_by_oracle, moreau_reference, prox, prox_by_oracle, EnvFamily,
    EnvelopeQuery, Side,
};
use crate::error::{invalid, Result};
use crate::interval::Interval;
use crate::oracle::brute_min;
use crate::scalar::{tol, ExtReal};

/// Slack for monotonicity and ordering assertions.
pub const MONOTONE_SLACK: f64 = 1e-9;
/// Threshold for `|env - θ|` and `D(s_γ, x)` on the last rung of a `γ → 0` ladder.
pub const TO_ZERO_THRESHOLD: f64 = 0.05;
/// Threshold for `env - inf θ` on the last rung of a `γ → ∞` ladder.
pub const TO_INFINITY_THRESHOLD: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub label: String,
    pub gamma: Option<f64>,
    pub point: f64,
    pub observed: f64,
    pub expected: f64,
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub total: usize,
    pub passed: usize,
    pub pass_rate: f64,
    pub max_dev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub claim: String,
    pub points: Vec<SweepPoint>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn new(claim: impl Into<String>, points: Vec<SweepPoint>) -> Self {
        let total = points.len();
        let passed = points.iter().filter(|p| p.pass).count();
        let max_dev = points
            .iter()
            .map(|p| p.deviation)
            .fold(0.0, |m: f64, d| if d.is_nan() { f64::INFINITY } else { m.max(d) });
        Self {
            claim: claim.into(),
            points,
            summary: SweepSummary {
                total,
                passed,
                pass_rate: if total == 0 { 1.0 } else { passed as f64 / total as f64 },
                max_dev,
            },
        }
    }

    /// True when every point passes. An empty report passes vacuously.
    pub fn pass(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepPoint> {
        self.points.iter().filter(|p| !p.pass)
    }
}

/// Builds a point that passes when `observed <= expected + slack`.
fn at_most(label: &str, gamma: Option<f64>, point: f64, observed: f64, expected: f64, slack: f64) -> SweepPoint {
    let deviation = (observed - expected).max(0.0);
    SweepPoint {
        label: label.to_string(),
        gamma,
        point,
        observed,
        expected,
        deviation,
        pass: observed <= expected + slack,
    }
}

/// Builds a point that passes when `|observed - expected| <= tol`; equal infinities pass.
fn near(label: &str, gamma: Option<f64>, point: f64, observed: f64, expected: f64, tol: f64) -> SweepPoint {
    let deviation = if observed == expected {
        0.0
    } else {
        (observed - expected).abs()
    };
    SweepPoint {
        label: label.to_string(),
        gamma,
        point,
        observed,
        expected,
        deviation,
        pass: deviation <= tol,
    }
}

/// `x ∈ {lo, lo + step, ..., hi}` computed as `lo + i * step` to avoid drift.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n)
            .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

/// `{10^k : k in lo..=hi}`
pub fn log_ladder(lo: i32, hi: i32) -> Vec<f64> {
    (lo..=hi).map(|k| 10f64.powi(k)).collect()
}

/// The oracle-equivalence grid: `x ∈ {0, 0.05, ..., 3}`.
pub fn oracle_points() -> Vec<f64> {
    (0..=60).map(|i| i as f64 * 0.05).collect()
}

pub const ORACLE_GAMMAS: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 5.0];

/// `inf θ` over the domain of the minimization variable, by brute force.
pub fn inf_theta(q: &EnvelopeQuery) -> Result<f64> {
    let dom = q.variable_domain();
    let theta = q.theta();
    let value = brute_min(
        |z| if dom.contains(z) { theta.eval(z) } else { ExtReal::PosInf },
        &q.default_window(),
    )?
    .value;
    Ok(value.to_f64())
}

fn env_f64(q: &EnvelopeQuery, x: f64) -> Result<f64> {
    Ok(envelope(q, x)?.to_f64())
}

/// Closed-form envelope vs the brute-force oracle. Deviation is
/// `|Δ| / (1 + |oracle|)`, passing at `1e-6`.
pub fn oracle_equivalence_env(family: EnvFamily, xs: &[f64], gammas: &[f64]) -> Result<SweepReport> {
    let cases: Vec<(f64, f64)> = gammas.iter().flat_map(|&g| xs.iter().map(move |&x| (g, x))).collect();
    let points = cases
        .par_iter()
        .map(|&(g, x)| -> Result<SweepPoint> {
            let q = family.query(g)?;
            let closed = envelope(&q, x)?.to_f64();
            let brute = envelope_by_oracle(&q, x, &q.default_window())?.to_f64();
            let rel = tol::ORACLE_ENV.abs() * (1.0 + brute.abs());
            let mut p = near("env", Some(g), x, closed, brute, rel);
            p.deviation /= 1.0 + brute.abs();
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::new(format!("oracle_env/{family}"), points))
}

/// Closed-form prox sets vs the oracle's argmin interval, by Hausdorff distance.
pub fn oracle_equivalence_prox(family: EnvFamily, xs: &[f64], gammas: &[f64]) -> Result<SweepReport> {
    let cases: Vec<(f64, f64)> = gammas.iter().flat_map(|&g| xs.iter().map(move |&x| (g, x))).collect();
    let points = cases
        .par_iter()
        .map(|&(g, x)| -> Result<SweepPoint> {
            let q = family.query(g)?;
            let closed = prox(&q, x)?;
            let brute = prox_by_oracle(&q, x, &q.default_window())?;
            let d = closed.set.hausdorff(&brute.set).unwrap_or(f64::INFINITY);
            Ok(SweepPoint {
                label: "prox_hausdorff".into(),
                gamma: Some(g),
                point: x,
                observed: closed.selected.unwrap_or(f64::NAN),
                expected: brute.selected.unwrap_or(f64::NAN),
                deviation: d,
                pass: d <= tol::ORACLE_PROX,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::new(format!("oracle_prox/{family}"), points))
}

/// Envelope under `F_Id` equals the Moreau envelope with parameter `2γ`, and
/// under `σ_Id` equals `θ` with identity prox.
pub fn energy_identities(xs: &[f64], gammas: &[f64]) -> Result<SweepReport> {
    let mut points = Vec::new();
    for &g in gammas {
        for &x in xs {
            for side in [Side::Left, Side::Right] {
                let fid = EnvFamily::new(side, NamedDistance::FitzId);
                let got = fid.envelope(g, x)?.to_f64();
                points.push(near("f_id_moreau", Some(g), x, got, moreau_reference(2.0 * g, 0.5, x)?, 1e-10));

                let sid = EnvFamily::new(side, NamedDistance::SigmaId);
                let theta = EnvFamily::theta().eval(x).to_f64();
                points.push(near("sigma_id_theta", Some(g), x, sid.envelope(g, x)?.to_f64(), theta, 1e-12));
                let sel = sid.prox(g, x)?.selected.unwrap_or(f64::NAN);
                points.push(near("sigma_id_prox", Some(g), x, sel, x, 0.0));
            }
        }
    }
    Ok(SweepReport::new("energy_identities", points))
}

/// `γ ↦ env_γ(x)` is nonincreasing, below `θ(x)` and above `inf θ`.
pub fn gamma_monotonicity(family: EnvFamily, xs: &[f64], gammas: &[f64]) -> Result<SweepReport> {
    let mut gs = gammas.to_vec();
    gs.sort_by(f64::total_cmp);
    let floor = inf_theta(&family.query(gs[0])?)?;
    let per_point = xs
        .par_iter()
        .map(|&x| -> Result<Vec<SweepPoint>> {
            let theta = EnvFamily::theta().eval(x).to_f64();
            let mut out = Vec::new();
            let mut prev: Option<f64> = None;
            for &g in &gs {
                let e = env_f64(&family.query(g)?, x)?;
                if !e.is_finite() {
                    continue;
                }
                if let Some(p) = prev {
                    out.push(at_most("nonincreasing", Some(g), x, e, p, MONOTONE_SLACK));
                }
                out.push(at_most("below_theta", Some(g), x, e, theta, MONOTONE_SLACK));
                out.push(at_most("above_inf_theta", Some(g), x, floor, e, MONOTONE_SLACK));
                prev = Some(e);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::new(format!("gamma_monotone/{family}"), per_point.concat()))
}

/// Larger representative, larger distance, larger envelope:
/// `env^{lo} <= env^{hi}` at every `(γ, x)`.
pub fn envelope_sandwich(
    side: Side,
    lo: NamedDistance,
    hi: NamedDistance,
    xs: &[f64],
    gammas: &[f64],
) -> Result<SweepReport> {
    let mut points = Vec::new();
    for &g in gammas {
        for &x in xs {
            let a = EnvFamily::new(side, lo).envelope(g, x)?.to_f64();
            let b = EnvFamily::new(side, hi).envelope(g, x)?.to_f64();
            if a.is_finite() && b.is_finite() {
                points.push(at_most("ordered", Some(g), x, a, b, MONOTONE_SLACK));
            }
        }
    }
    Ok(SweepReport::new(format!("sandwich/{side}_{lo}<={hi}"), points))
}

/// `D(s_γ, x)` (left) or `D(x, s_γ)` (right) for the prox selection `s_γ`.
fn distance_to_selection(q: &EnvelopeQuery, x: f64) -> Result<f64> {
    let p = prox(q, x)?;
    Ok(match p.selected {
        Some(s) => q.distance_to(s, x).to_f64(),
        None => f64::INFINITY,
    })
}

/// Limit theorem as `γ ↓ 0`: along the ladder (any order; sorted descending),
/// `env_γ(x)` is nondecreasing, and on the last rung `|env - θ(x)|` and the
/// distance from the prox selection to `x` are both below [`TO_ZERO_THRESHOLD`].
pub fn sweep_gamma_to_zero(family: EnvFamily, points: &[f64], gammas: &[f64]) -> Result<SweepReport> {
    if gammas.is_empty() {
        return Err(invalid("gamma ladder", "empty"));
    }
    let mut gs = gammas.to_vec();
    gs.sort_by(|a, b| b.total_cmp(a));
    let last = *gs.last().expect("nonempty");
    let per_point = points
        .par_iter()
        .map(|&x| -> Result<Vec<SweepPoint>> {
            let theta = EnvFamily::theta().eval(x).to_f64();
            let mut out = Vec::new();
            let mut prev: Option<f64> = None;
            for &g in &gs {
                let e = env_f64(&family.query(g)?, x)?;
                if let Some(p) = prev {
                    out.push(at_most("nondecreasing", Some(g), x, p, e, MONOTONE_SLACK));
                }
                prev = Some(e);
            }
            let q = family.query(last)?;
            let e = env_f64(&q, x)?;
            out.push(near("env_to_theta", Some(last), x, e, theta, TO_ZERO_THRESHOLD));
            let d = distance_to_selection(&q, x)?;
            out.push(at_most("dist_to_point", Some(last), x, d, 0.0, TO_ZERO_THRESHOLD));
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::new(format!("gamma_to_zero/{family}"), per_point.concat()))
}

/// What a `γ → ∞` ladder is expected to do at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Limit {
    /// Decreases to `inf θ` over the relevant domain (within [`TO_INFINITY_THRESHOLD`]).
    Infimum,
    /// Stays equal to `θ(x)` on every rung: the expected failure of convergence.
    Theta,
}

/// Limit theorem as `γ ↑ ∞`: along the ladder `env_γ(x)` is nonincreasing,
/// then either reaches `inf θ` or, for [`Limit::Theta`], never leaves `θ(x)`.
pub fn sweep_gamma_to_infinity(
    family: EnvFamily,
    points: &[f64],
    gammas: &[f64],
    limit: Limit,
) -> Result<SweepReport> {
    if gammas.is_empty() {
        return Err(invalid("gamma ladder", "empty"));
    }
    let mut gs = gammas.to_vec();
    gs.sort_by(f64::total_cmp);
    let last = *gs.last().expect("nonempty");
    let floor = inf_theta(&family.query(last)?)?;
    let per_point = points
        .par_iter()
        .map(|&x| -> Result<Vec<SweepPoint>> {
            let theta = EnvFamily::theta().eval(x).to_f64();
            let mut out = Vec::new();
            let mut prev: Option<f64> = None;
            for &g in &gs {
                let e = env_f64(&family.query(g)?, x)?;
                if let Some(p) = prev {
                    out.push(at_most("nonincreasing", Some(g), x, e, p, MONOTONE_SLACK));
                }
                if limit == Limit::Theta {
                    out.push(near("stays_theta", Some(g), x, e, theta, 1e-12));
                }
                prev = Some(e);
            }
            if limit == Limit::Infimum {
                let e = prev.expect("nonempty ladder");
                out.push(at_most("env_to_inf_theta", Some(last), x, e, floor, TO_INFINITY_THRESHOLD));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let tag = match limit {
        Limit::Infimum => "",
        Limit::Theta => "/no_convergence",
    };
    Ok(SweepReport::new(format!("gamma_to_infinity/{family}{tag}"), per_point.concat()))
}

/// Spread of `env_γ(x)` across the ladder; zero for a `γ`-invariant envelope.
pub fn gamma_invariance(family: EnvFamily, points: &[f64], gammas: &[f64]) -> Result<SweepReport> {
    let mut out = Vec::new();
    for &x in points {
        let vals = gammas
            .iter()
            .map(|&g| env_f64(&family.query(g)?, x))
            .collect::<Result<Vec<_>>>()?;
        let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        out.push(near("spread", None, x, hi, lo, 1e-12));
    }
    Ok(SweepReport::new(format!("gamma_invariant/{family}"), out))
}

/// Infima of `θ`, the left and the right envelope agree, and every grid
/// minimizer of `θ` lies within one grid spacing of the minimizers of both envelopes.
pub fn check_argmin_relations(dist: NamedDistance, gamma: f64) -> Result<SweepReport> {
    let dom = dist.domain();
    let (lo, hi) = if dom.contains(-1.0) { (-3.0, 3.0) } else { (0.0, 3.0) };
    let n = 1201;
    let grid = linspace(lo, hi, n);
    let spacing = (hi - lo) / (n - 1) as f64;
    let theta = EnvFamily::theta();
    let left = EnvFamily::new(Side::Left, dist).query(gamma)?;
    let right = EnvFamily::new(Side::Right, dist).query(gamma)?;

    let eval_all = |f: &(dyn Fn(f64) -> Result<f64> + Sync)| -> Result<Vec<f64>> {
        grid.par_iter().map(|&z| f(z)).collect()
    };
    let th = eval_all(&|z| Ok(theta.eval(z).to_f64()))?;
    let be = eval_all(&|z| env_f64(&left, z))?;
    let fe = eval_all(&|z| env_f64(&right, z))?;

    let min_of = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let argmin_of = |v: &[f64], slack: f64| -> Vec<f64> {
        let m = min_of(v);
        grid.iter().zip(v).filter(|(_, &y)| y <= m + slack).map(|(&z, _)| z).collect()
    };
    let (mt, mb, mf) = (min_of(&th), min_of(&be), min_of(&fe));
    let mut points = vec![
        near("inf_theta_eq_inf_left", Some(gamma), f64::NAN, mb, mt, 1e-6),
        near("inf_theta_eq_inf_right", Some(gamma), f64::NAN, mf, mt, 1e-6),
    ];
    let (ab, af) = (argmin_of(&be, 1e-9), argmin_of(&fe, 1e-9));
    let gap_to = |z: f64, set: &[f64]| set.iter().map(|s| (s - z).abs()).fold(f64::INFINITY, f64::min);
    for z in argmin_of(&th, 0.0) {
        points.push(at_most("argmin_in_left", Some(gamma), z, gap_to(z, &ab), 0.0, spacing));
        points.push(at_most("argmin_in_right", Some(gamma), z, gap_to(z, &af), 0.0, spacing));
    }
    Ok(SweepReport::new(format!("argmin_relations/{dist}"), points))
}

/// Prox selections over the ladder stay in `{z : θ(z) <= θ(point)}` and inside
/// a fixed ball.
pub fn check_prox_boundedness(family: EnvFamily, point: f64, gammas: &[f64]) -> Result<SweepReport> {
    let theta = EnvFamily::theta();
    let level = theta.eval(point).to_f64();
    let ConvexFunction::AbsShift { center } = theta else {
        unreachable!("family θ is |· - c|");
    };
    let radius = center.abs() + level + 1.0;
    let mut points = Vec::new();
    for &g in gammas {
        let p = family.prox(g, point)?;
        let Some(s) = p.selected else {
            points.push(at_most("nonempty", Some(g), point, f64::INFINITY, 0.0, 0.0));
            continue;
        };
        points.push(at_most("in_sublevel", Some(g), point, theta.eval(s).to_f64(), level, 1e-8));
        points.push(at_most("bounded", Some(g), point, s.abs(), radius, 0.0));
    }
    Ok(SweepReport::new(format!("prox_bounded/{family}@{point}"), points))
}

/// `D >= 0`, `D(x, x) = 0` on the domain, and `D^F <= D^{f⊕f*} <= D^σ`
/// wherever all three are finite, on an `n × n` grid.
pub fn distance_axioms(n: usize) -> Result<SweepReport> {
    let mut points = Vec::new();
    for d in NamedDistance::ALL {
        let (lo, hi) = if d.is_log_family() { (0.0, 3.0) } else { (-3.0, 3.0) };
        let g = linspace(lo, hi, n);
        for &x in &g {
            let diag = d.eval(x, x).to_f64();
            points.push(near(&format!("{d}_diagonal"), None, x, diag, 0.0, 1e-10));
            for &y in &g {
                let v = d.eval(x, y).to_f64();
                points.push(at_most(&format!("{d}_nonnegative"), None, x, 0.0, v, 1e-10));
            }
        }
    }
    for (f, fy, s) in [
        (NamedDistance::FitzId, NamedDistance::FyEnergy, NamedDistance::SigmaId),
        (NamedDistance::FitzLog, NamedDistance::Kl, NamedDistance::SigmaLog),
    ] {
        let (lo, hi) = if f.is_log_family() { (0.0, 3.0) } else { (-3.0, 3.0) };
        let g = linspace(lo, hi, n);
        for &x in &g {
            for &y in &g {
                let (a, b, c) = (f.eval(x, y), fy.eval(x, y), s.eval(x, y));
                if a.is_finite() && b.is_finite() {
                    points.push(at_most(&format!("{f}<={fy}"), None, x, a.to_f64(), b.to_f64(), 1e-10));
                }
                if b.is_finite() && c.is_finite() {
                    points.push(at_most(&format!("{fy}<={s}"), None, x, b.to_f64(), c.to_f64(), 1e-10));
                }
            }
        }
    }
    Ok(SweepReport::new("distance_axioms", points))
}

/// `true` when `set` is within `tol` of `[a, b]` in the Hausdorff sense.
pub fn interval_matches(set: &Interval, a: f64, b: f64, tol: f64) -> bool {
    Interval::closed(a, b)
        .ok()
        .and_then(|t| set.hausdorff(&t))
        .is_some_and(|d| d <= tol)
}
