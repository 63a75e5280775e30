//! Left and right GBD envelopes and proximity operators of `θ`:
//!
//! ```text
//! left:   env(y) = inf_x θ(x) + D(x, y) / γ      prox(y) = argmin_x ...
//! right:  env(x) = inf_y θ(y) + D(x, y) / γ      prox(x) = argmin_y ...
//! ```
//!
//! For `θ = |· - 1/2|` and the named distances `f_id`, `sigma_id`, `f_log`,
//! `kl`, `sigma_log` the values come from closed forms; every other query is
//! answered by the brute-force oracle.

use std::f64::consts::E;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convex::{xlogx, ConvexFunction};
use crate::distances::{gbd_eval, GbdSpec, NamedDistance};
use crate::error::{domain, GbdError, Result};
use crate::interval::Interval;
use crate::oracle::{brute_interval_argmin, brute_min, SearchWindow};
use crate::scalar::{tol, w0, ExtReal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = GbdError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(GbdError::UnknownName {
                kind: "side",
                name: s.to_string(),
            }),
        }
    }
}

/// The distance regularizing an envelope.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Distance {
    Named(NamedDistance),
    Gbd(GbdSpec),
}

impl Distance {
    pub fn eval(&self, x: f64, y: f64) -> ExtReal {
        match self {
            Distance::Named(d) => d.eval(x, y),
            Distance::Gbd(spec) => gbd_eval(spec, x, y).unwrap_or(ExtReal::PosInf),
        }
    }

    /// Domain of the first argument.
    pub fn dom_left(&self) -> Interval {
        match self {
            Distance::Named(d) => d.domain(),
            Distance::Gbd(spec) => spec.dom_left(),
        }
    }

    /// Domain of the second argument.
    pub fn dom_right(&self) -> Interval {
        match self {
            Distance::Named(d) => d.domain(),
            Distance::Gbd(spec) => spec.dom_right(),
        }
    }
}

impl From<NamedDistance> for Distance {
    fn from(d: NamedDistance) -> Self {
        Distance::Named(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeQuery {
    side: Side,
    theta: ConvexFunction,
    gamma: f64,
    dist: Distance,
}

impl EnvelopeQuery {
    pub fn new(side: Side, theta: ConvexFunction, gamma: f64, dist: impl Into<Distance>) -> Result<Self> {
        check_gamma("EnvelopeQuery", gamma)?;
        Ok(Self {
            side,
            theta,
            gamma,
            dist: dist.into(),
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn theta(&self) -> ConvexFunction {
        self.theta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn dist(&self) -> Distance {
        self.dist
    }

    pub fn with_gamma(self, gamma: f64) -> Result<Self> {
        check_gamma("EnvelopeQuery", gamma)?;
        Ok(Self { gamma, ..self })
    }

    /// Domain the envelope can be finite on: `dom T` (left) or `dom S` (right).
    pub fn point_domain(&self) -> Interval {
        match self.side {
            Side::Left => self.dist.dom_right(),
            Side::Right => self.dist.dom_left(),
        }
    }

    /// Domain of the minimization variable.
    pub fn variable_domain(&self) -> Interval {
        match self.side {
            Side::Left => self.dist.dom_left(),
            Side::Right => self.dist.dom_right(),
        }
    }

    /// `D(z, point)` (left) or `D(point, z)` (right).
    pub fn distance_to(&self, z: f64, point: f64) -> ExtReal {
        match self.side {
            Side::Left => self.dist.eval(z, point),
            Side::Right => self.dist.eval(point, z),
        }
    }

    /// `z ↦ θ(z) + D(·,·) / γ`, the function minimized by the envelope at `point`.
    pub fn objective(&self, point: f64) -> impl Fn(f64) -> ExtReal + '_ {
        move |z| {
            let t = self.theta.eval(z);
            if t.is_pos_inf() {
                return t;
            }
            match self.distance_to(z, point) {
                ExtReal::Finite(d) => ExtReal::from(t.to_f64() + d / self.gamma),
                other => other,
            }
        }
    }

    /// `[0, 50]` when the variable lives in `[0, inf)`, `[-50, 50]` otherwise.
    pub fn default_window(&self) -> SearchWindow {
        if self.variable_domain().is_subset_of(&Interval::nonnegative()) {
            SearchWindow::log_domain()
        } else {
            SearchWindow::full_line()
        }
    }

    fn closed_form(&self) -> Option<NamedDistance> {
        let ConvexFunction::AbsShift { center } = self.theta else {
            return None;
        };
        if center != 0.5 {
            return None;
        }
        match self.dist {
            Distance::Named(NamedDistance::FyEnergy) | Distance::Gbd(_) => None,
            Distance::Named(d) => Some(d),
        }
    }

    pub fn has_closed_form(&self) -> bool {
        self.closed_form().is_some()
    }
}

/// A prox value: the argmin set and the midpoint selection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProxResult {
    pub set: Interval,
    pub selected: Option<f64>,
}

impl ProxResult {
    pub fn from_set(set: Interval) -> Self {
        Self {
            set,
            selected: set.midpoint(),
        }
    }

    pub fn point(x: f64) -> Self {
        Self::from_set(Interval::point(x))
    }

    pub fn empty() -> Self {
        Self::from_set(Interval::empty())
    }
}

fn check_gamma(op: &'static str, gamma: f64) -> Result<()> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(domain(op, format!("gamma must be finite and > 0, got {gamma}")));
    }
    Ok(())
}

fn check(op: &'static str, gamma: f64, x: f64) -> Result<()> {
    check_gamma(op, gamma)?;
    if x.is_nan() {
        return Err(domain(op, "NaN point"));
    }
    Ok(())
}

/// Envelope value at `point`: closed form when one exists, oracle otherwise.
/// `+inf` off `dom T` (left) / `dom S` (right).
pub fn envelope(q: &EnvelopeQuery, point: f64) -> Result<ExtReal> {
    check("envelope", q.gamma, point)?;
    if !q.point_domain().contains(point) {
        return Ok(ExtReal::PosInf);
    }
    match q.closed_form() {
        Some(d) => closed_env(q.side, d, q.gamma, point),
        None => match envelope_by_oracle(q, point, &q.default_window()) {
            Err(GbdError::EmptyDomain { .. }) => Ok(ExtReal::PosInf),
            other => other,
        },
    }
}

/// Prox set at `point` (with midpoint selection): closed form when one exists,
/// oracle otherwise. Empty off the envelope's domain.
pub fn prox(q: &EnvelopeQuery, point: f64) -> Result<ProxResult> {
    check("prox", q.gamma, point)?;
    if !q.point_domain().contains(point) {
        return Ok(ProxResult::empty());
    }
    match q.closed_form() {
        Some(d) => closed_prox(q.side, d, q.gamma, point),
        None => prox_by_oracle(q, point, &q.default_window()),
    }
}

/// Slack used to turn the oracle's minimum into an argmin set.
pub const ORACLE_ARGMIN_SLACK: f64 = 1e-9;

pub fn envelope_by_oracle(q: &EnvelopeQuery, point: f64, window: &SearchWindow) -> Result<ExtReal> {
    check("envelope_by_oracle", q.gamma, point)?;
    Ok(brute_min(q.objective(point), window)?.value)
}

pub fn prox_by_oracle(q: &EnvelopeQuery, point: f64, window: &SearchWindow) -> Result<ProxResult> {
    check("prox_by_oracle", q.gamma, point)?;
    let set = brute_interval_argmin(q.objective(point), window, ORACLE_ARGMIN_SLACK)?;
    Ok(ProxResult::from_set(set))
}

fn closed_env(side: Side, d: NamedDistance, gamma: f64, x: f64) -> Result<ExtReal> {
    match (side, d) {
        (_, NamedDistance::FitzId) => env_fitz_id(gamma, x).map(ExtReal::from),
        (_, NamedDistance::SigmaId) => env_sigma_id(gamma, x).map(ExtReal::from),
        (Side::Left, NamedDistance::FitzLog) => env_fitz_log_left(gamma, x),
        (Side::Right, NamedDistance::FitzLog) => env_fitz_log_right(gamma, x),
        (Side::Left, NamedDistance::SigmaLog) => env_sigma_log_left(gamma, x),
        (Side::Right, NamedDistance::SigmaLog) => env_sigma_log_right(gamma, x),
        (Side::Left, NamedDistance::Kl) => env_kl_left(gamma, x),
        (Side::Right, NamedDistance::Kl) => env_kl_right(gamma, x),
        (_, NamedDistance::FyEnergy) => unreachable!("no closed form dispatched for fy_energy"),
    }
}

fn closed_prox(side: Side, d: NamedDistance, gamma: f64, x: f64) -> Result<ProxResult> {
    match (side, d) {
        (_, NamedDistance::FitzId) => prox_fitz_id(gamma, x),
        (_, NamedDistance::SigmaId) => prox_sigma_id(gamma, x),
        (Side::Left, NamedDistance::FitzLog) => prox_fitz_log_left(gamma, x),
        (Side::Right, NamedDistance::FitzLog) => prox_fitz_log_right(gamma, x),
        (Side::Left, NamedDistance::SigmaLog) => prox_sigma_log_left(gamma, x),
        (Side::Right, NamedDistance::SigmaLog) => prox_sigma_log_right(gamma, x),
        (Side::Left, NamedDistance::Kl) => prox_kl_left(gamma, x),
        (Side::Right, NamedDistance::Kl) => prox_kl_right(gamma, x),
        (_, NamedDistance::FyEnergy) => unreachable!("no closed form dispatched for fy_energy"),
    }
}

// ---------------------------------------------------------------------------
// Moreau / energy

/// Moreau envelope of `|· - c|` with parameter `γ`: the Huber function.
pub fn moreau_reference(gamma: f64, c: f64, point: f64) -> Result<f64> {
    check("moreau_reference", gamma, point)?;
    if !c.is_finite() {
        return Err(domain("moreau_reference", "center must be finite"));
    }
    let r = (point - c).abs();
    Ok(if r <= gamma {
        r * r / (2.0 * gamma)
    } else {
        r - gamma / 2.0
    })
}

/// Moreau proximity operator of `|· - c|` (soft thresholding toward `c`).
pub fn moreau_prox_reference(gamma: f64, c: f64, point: f64) -> Result<f64> {
    check("moreau_prox_reference", gamma, point)?;
    let r = point - c;
    Ok(if r.abs() <= gamma {
        c
    } else {
        point - gamma * r.signum()
    })
}

/// Left and right envelopes under `(x - y)^2 / 4` coincide with the Moreau
/// envelope with parameter `2γ`.
pub fn env_fitz_id(gamma: f64, x: f64) -> Result<f64> {
    moreau_reference(2.0 * gamma, 0.5, x)
}

pub fn prox_fitz_id(gamma: f64, x: f64) -> Result<ProxResult> {
    Ok(ProxResult::point(moreau_prox_reference(2.0 * gamma, 0.5, x)?))
}

/// Under the indicator of the diagonal the envelope is `θ` itself.
pub fn env_sigma_id(gamma: f64, x: f64) -> Result<f64> {
    check("env_sigma_id", gamma, x)?;
    Ok((x - 0.5).abs())
}

pub fn prox_sigma_id(gamma: f64, x: f64) -> Result<ProxResult> {
    check("prox_sigma_id", gamma, x)?;
    Ok(ProxResult::point(x))
}

// ---------------------------------------------------------------------------
// Fitzpatrick distance of log
//
// Left: ∂/∂y D(y, x) = W(ye/x) - 1, so the stationary points below / above
// 1/2 solve W = 1 + γ and W = 1 - γ (the latter only when γ < 1).

/// Left envelope of `|· - 1/2|` under the closed Fitzpatrick distance of `log`.
pub fn env_fitz_log_left(gamma: f64, x: f64) -> Result<ExtReal> {
    check("env_fitz_log_left", gamma, x)?;
    if x < 0.0 {
        return Ok(ExtReal::PosInf);
    }
    let v = if below_exp(x, -gamma, 1.0 / (2.0 + 2.0 * gamma)) {
        0.5 - mul_exp(x, gamma)
    } else if gamma < 1.0 && x > gamma.exp() / (2.0 - 2.0 * gamma) {
        (-gamma).exp() * x - 0.5
    } else {
        let w = w0(E / (2.0 * x));
        (w - 1.0) * (w - 1.0) / (2.0 * gamma * w)
    };
    Ok(ExtReal::from(v))
}

pub fn prox_fitz_log_left(gamma: f64, x: f64) -> Result<ProxResult> {
    check("prox_fitz_log_left", gamma, x)?;
    if x < 0.0 {
        return Ok(ProxResult::empty());
    }
    let p = if below_exp(x, -gamma, 1.0 / (2.0 + 2.0 * gamma)) {
        (1.0 / gamma + 1.0) * gamma * mul_exp(x, gamma)
    } else if gamma < 1.0 && x > gamma.exp() / (2.0 - 2.0 * gamma) {
        (1.0 / gamma - 1.0) * (-gamma).exp() * gamma * x
    } else {
        0.5
    };
    Ok(ProxResult::point(p))
}

/// `x e^g` for `x >= 0`, finite whenever the product is.
fn mul_exp(x: f64, g: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        (x.ln() + g).exp()
    }
}

/// `x <= c e^g` for `x >= 0`, `c > 0`, without under/overflow of `e^g`.
fn below_exp(x: f64, g: f64, c: f64) -> bool {
    x == 0.0 || x.ln() <= g + c.ln()
}

/// `x < c e^g` for `x >= 0`, `c > 0`.
fn strictly_below_exp(x: f64, g: f64, c: f64) -> bool {
    x == 0.0 || x.ln() < g + c.ln()
}

fn gamma_is_inv_e(gamma: f64) -> bool {
    (gamma * E - 1.0).abs() <= tol::PARAM_TIE
}

/// Right envelope of `|· - 1/2|` under the closed Fitzpatrick distance of `log`.
pub fn env_fitz_log_right(gamma: f64, x: f64) -> Result<ExtReal> {
    check("env_fitz_log_right", gamma, x)?;
    if x < 0.0 {
        return Ok(ExtReal::PosInf);
    }
    if x == 0.0 {
        let v = if gamma * E <= 1.0 || gamma_is_inv_e(gamma) {
            0.5
        } else {
            1.0 / (2.0 * gamma * E)
        };
        return Ok(ExtReal::from(v));
    }
    let wp = w0(gamma);
    if x > gamma * (wp + 1.0) / (2.0 * wp) {
        let inner = w0(E * gamma * (wp + 1.0) / wp);
        let v = x * wp / (gamma * (wp + 1.0)) - 0.5
            + x * (inner - 1.0) * (inner - 1.0) / (gamma * inner);
        return Ok(ExtReal::from(v));
    }
    if gamma * E < 1.0 && !gamma_is_inv_e(gamma) {
        let wm = w0(-gamma);
        if x < -gamma * (wm + 1.0) / (2.0 * wm) {
            let inner = w0(-E * gamma * (wm + 1.0) / wm);
            let v = x * wm / (gamma * (wm + 1.0))
                + 0.5
                + x * (inner - 1.0) * (inner - 1.0) / (gamma * inner);
            return Ok(ExtReal::from(v));
        }
    }
    let w = w0(2.0 * x * E);
    Ok(ExtReal::from(x * (w - 1.0) * (w - 1.0) / (gamma * w)))
}

/// Right prox; set-valued (`[0, 1/2]`) at `x = 0` when `1/γ = e`.
pub fn prox_fitz_log_right(gamma: f64, x: f64) -> Result<ProxResult> {
    check("prox_fitz_log_right", gamma, x)?;
    if x < 0.0 {
        return Ok(ProxResult::empty());
    }
    if x == 0.0 {
        return Ok(if gamma_is_inv_e(gamma) {
            ProxResult::from_set(Interval::closed(0.0, 0.5)?)
        } else if gamma * E < 1.0 {
            ProxResult::point(0.0)
        } else {
            ProxResult::point(0.5)
        });
    }
    if gamma * E < 1.0 && !gamma_is_inv_e(gamma) {
        let wm = w0(-gamma);
        if x < -gamma * (wm + 1.0) / (2.0 * wm) {
            return Ok(ProxResult::point(-x * wm / (gamma * (wm + 1.0))));
        }
    }
    let wp = w0(gamma);
    if x > gamma * (wp + 1.0) / (2.0 * wp) {
        return Ok(ProxResult::point(x * wp / (gamma * (wp + 1.0))));
    }
    Ok(ProxResult::point(0.5))
}

// ---------------------------------------------------------------------------
// sigma distance of log: finite only for 0 < y <= x (or at the origin)

/// Left envelope under the closed sigma distance of `log`. Equal to `θ` on `[0, 1/2]`.
pub fn env_sigma_log_left(gamma: f64, x: f64) -> Result<ExtReal> {
    check("env_sigma_log_left", gamma, x)?;
    if x < 0.0 {
        return Ok(ExtReal::PosInf);
    }
    let v = if x == 0.0 {
        0.5
    } else if x >= 0.5 {
        x - 0.5
    } else if gamma < 1.0 {
        0.5 - x
    } else if below_exp(x, 1.0 - gamma, 0.5) {
        // -(x/γ) e^{γ-1} (-ln(x e^{γ-1}) + γ + ln x) + 1/2, with the bracket equal to 1
        0.5 - mul_exp(x, gamma - 1.0) / gamma
    } else {
        -(2.0 * x).ln() / (2.0 * gamma)
    };
    Ok(ExtReal::from(v))
}

pub fn prox_sigma_log_left(gamma: f64, x: f64) -> Result<ProxResult> {
    check("prox_sigma_log_left", gamma, x)?;
    if x < 0.0 {
        return Ok(ProxResult::empty());
    }
    let p = if below_exp(x, 1.0 - gamma, 0.5) && gamma >= 1.0 {
        mul_exp(x, gamma - 1.0)
    } else if x >= 0.5 || gamma < 1.0 {
        x
    } else {
        0.5
    };
    Ok(ProxResult::point(p))
}

/// Right envelope under the closed sigma distance of `log`. Equal to `θ` on `[1/2, 1]`.
pub fn env_sigma_log_right(gamma: f64, x: f64) -> Result<ExtReal> {
    check("env_sigma_log_right", gamma, x)?;
    if x < 0.0 {
        return Ok(ExtReal::PosInf);
    }
    let v = if x <= 0.5 {
        0.5 - x
    } else if gamma <= 1.0 {
        x - 0.5
    } else if x > gamma / 2.0 {
        -0.5 + x / gamma * (1.0 + gamma.ln())
    } else {
        x / gamma * (2.0 * x).ln()
    };
    Ok(ExtReal::from(v))
}

pub fn prox_sigma_log_right(gamma: f64, x: f64) -> Result<ProxResult> {
    check("prox_sigma_log_right", gamma, x)?;
    if x < 0.0 {
        return Ok(ProxResult::empty());
    }
    let p = if 0.5 < x && x <= 0.5 * gamma {
        0.5
    } else if gamma >= 1.0 && 0.5 * gamma < x {
        x / gamma
    } else {
        x
    };
    Ok(ProxResult::point(p))
}

// ---------------------------------------------------------------------------
// Kullback–Leibler (closed Fenchel–Young distance of log)

pub fn env_kl_left(gamma: f64, y: f64) -> Result<ExtReal> {
    check("env_kl_left", gamma, y)?;
    if y < 0.0 {
        return Ok(ExtReal::PosInf);
    }
    let v = if strictly_below_exp(y, -gamma, 0.5) {
        (y - mul_exp(y, gamma)) / gamma + 0.5
    } else if y > 0.5 * gamma.exp() {
        y * (1.0 - (-gamma).exp()) / gamma - 0.5
    } else {
        (2.0 * y - y.ln() - 1.0 - 2f64.ln()) / (2.0 * gamma)
    };
    Ok(ExtReal::from(v))
}

pub fn prox_kl_left(gamma: f64, y: f64) -> Result<ProxResult> {
    check("prox_kl_left", gamma, y)?;
    if y < 0.0 {
        return Ok(ProxResult::empty());
    }
    let p = if strictly_below_exp(y, -gamma, 0.5) {
        mul_exp(y, gamma)
    } else if y > 0.5 * gamma.exp() {
        y * (-gamma).exp()
    } else {
        0.5
    };
    Ok(ProxResult::point(p))
}

/// The first branch is empty for `γ >= 1`.
pub fn env_kl_right(gamma: f64, x: f64) -> Result<ExtReal> {
    check("env_kl_right", gamma, x)?;
    if x < 0.0 {
        return Ok(ExtReal::PosInf);
    }
    let v = if x < (1.0 - gamma) / 2.0 {
        (1.0 - gamma).ln() / gamma * x + 0.5
    } else if x > (1.0 + gamma) / 2.0 {
        (1.0 + gamma).ln() / gamma * x - 0.5
    } else {
        (xlogx(x) + x * 2f64.ln() - x + 0.5) / gamma
    };
    Ok(ExtReal::from(v))
}

/// Right prox; set-valued (`[0, 1/2]`) at `x = 0` when `γ = 1`.
pub fn prox_kl_right(gamma: f64, x: f64) -> Result<ProxResult> {
    check("prox_kl_right", gamma, x)?;
    if x < 0.0 {
        return Ok(ProxResult::empty());
    }
    if x == 0.0 && (gamma - 1.0).abs() <= tol::PARAM_TIE {
        return Ok(ProxResult::from_set(Interval::closed(0.0, 0.5)?));
    }
    let p = if x < (1.0 - gamma) / 2.0 {
        x / (1.0 - gamma)
    } else if x > (1.0 + gamma) / 2.0 {
        x / (1.0 + gamma)
    } else {
        0.5
    };
    Ok(ProxResult::point(p))
}

// ---------------------------------------------------------------------------

/// An envelope family `θ = |· - 1/2|` regularized by a named distance from one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnvFamily {
    pub side: Side,
    pub dist: NamedDistance,
}

impl EnvFamily {
    pub const fn new(side: Side, dist: NamedDistance) -> Self {
        Self { side, dist }
    }

    /// The eight families with closed forms checked against the oracle:
    /// left/right × {F_log, KL, sigma_log, F_Id}.
    pub const CLOSED_FORM: [EnvFamily; 8] = [
        EnvFamily::new(Side::Left, NamedDistance::FitzLog),
        EnvFamily::new(Side::Right, NamedDistance::FitzLog),
        EnvFamily::new(Side::Left, NamedDistance::Kl),
        EnvFamily::new(Side::Right, NamedDistance::Kl),
        EnvFamily::new(Side::Left, NamedDistance::SigmaLog),
        EnvFamily::new(Side::Right, NamedDistance::SigmaLog),
        EnvFamily::new(Side::Left, NamedDistance::FitzId),
        EnvFamily::new(Side::Right, NamedDistance::FitzId),
    ];

    pub fn id(&self) -> String {
        format!("{}_{}", self.side, self.dist)
    }

    pub fn theta() -> ConvexFunction {
        ConvexFunction::AbsShift { center: 0.5 }
    }

    pub fn query(&self, gamma: f64) -> Result<EnvelopeQuery> {
        EnvelopeQuery::new(self.side, Self::theta(), gamma, self.dist)
    }

    pub fn envelope(&self, gamma: f64, point: f64) -> Result<ExtReal> {
        envelope(&self.query(gamma)?, point)
    }

    pub fn prox(&self, gamma: f64, point: f64) -> Result<ProxResult> {
        prox(&self.query(gamma)?, point)
    }
}

impl fmt::Display for EnvFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}
