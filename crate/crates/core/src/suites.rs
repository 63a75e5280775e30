//! Named verification suites, each a flat list of pass/fail cases.

use std::f64::consts::E;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    check_argmin_relations, check_prox_boundedness, distance_axioms, energy_identities,
    envelope_sandwich, gamma_invariance, gamma_monotonicity, interval_matches, linspace,
    log_ladder, oracle_equivalence_env, oracle_equivalence_prox, oracle_points,
    sweep_gamma_to_infinity, sweep_gamma_to_zero, Limit, SweepReport, ORACLE_GAMMAS,
};
use crate::convex::{boltzmann_shannon, energy, ConvexFunction};
use crate::distances::{gbd_equals_bregman_check, NamedDistance};
use crate::envelopes::{prox_by_oracle, EnvFamily, Side};
use crate::error::{GbdError, Result};
use crate::scalar::{lambert_w, tol, ExtReal, LAMBERT_BRANCH_POINT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Inequalities,
    Asymptotics,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Inequalities => "inequalities",
            Suite::Asymptotics => "asymptotics",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = GbdError;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Oracle, Suite::Inequalities, Suite::Asymptotics, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| GbdError::UnknownName {
                kind: "suite",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub pass: bool,
    pub max_dev: f64,
}

impl From<&SweepReport> for CaseResult {
    fn from(r: &SweepReport) -> Self {
        Self {
            id: r.claim.clone(),
            pass: r.pass(),
            max_dev: r.summary.max_dev,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: Suite, cases: Vec<CaseResult>) -> Self {
        let pass = cases.iter().all(|c| c.pass);
        Self { suite, cases, pass }
    }
}

pub fn run_suite(suite: Suite) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::Oracle => oracle_cases()?,
        Suite::Inequalities => inequality_cases()?,
        Suite::Asymptotics => asymptotic_cases()?,
        Suite::All => [oracle_cases()?, inequality_cases()?, asymptotic_cases()?].concat(),
    };
    Ok(SuiteReport::new(suite, cases))
}

fn summarize(reports: &[SweepReport]) -> Vec<CaseResult> {
    reports.iter().map(CaseResult::from).collect()
}

/// Right `F_log` prox at `x = 0`, `γ = 1/e` against `[0, 1/2]`, by closed form and by oracle.
pub fn set_valued_prox_case() -> Result<CaseResult> {
    let fam = EnvFamily::new(Side::Right, NamedDistance::FitzLog);
    let q = fam.query(1.0 / E)?;
    let closed = fam.prox(1.0 / E, 0.0)?.set;
    let brute = prox_by_oracle(&q, 0.0, &q.default_window())?.set;
    let target = crate::interval::Interval::closed(0.0, 0.5)?;
    let dev = [closed, brute]
        .iter()
        .map(|s| s.hausdorff(&target).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    let pass = interval_matches(&closed, 0.0, 0.5, tol::ORACLE_PROX)
        && interval_matches(&brute, 0.0, 0.5, tol::ORACLE_PROX);
    Ok(CaseResult {
        id: "set_valued_prox/right_f_log@0".into(),
        pass,
        max_dev: dev,
    })
}

/// Residual `|W e^W - x| / (1 + |x|)` over log-spaced points in
/// `[-1/e + 1e-9, 1e6]`, plus the anchors `W(0)`, `W(e)`, `W(-1/e)`.
pub fn lambert_case() -> Result<CaseResult> {
    let lo = LAMBERT_BRANCH_POINT + 1e-9;
    // log-spaced offsets from the branch point
    let (a, b) = ((lo - LAMBERT_BRANCH_POINT).ln(), (1e6 - LAMBERT_BRANCH_POINT).ln());
    let mut dev: f64 = 0.0;
    for t in linspace(a, b, 200) {
        let x = (LAMBERT_BRANCH_POINT + t.exp()).clamp(lo, 1e6);
        let w = lambert_w(x)?;
        dev = dev.max((w * w.exp() - x).abs() / (1.0 + x.abs()));
    }
    let mut pass = dev <= tol::LAMBERT_RESIDUAL;
    for (x, w) in [(0.0, 0.0), (E, 1.0), (LAMBERT_BRANCH_POINT, -1.0)] {
        let d = (lambert_w(x)? - w).abs();
        pass &= d <= 1e-12;
        dev = dev.max(d);
    }
    Ok(CaseResult {
        id: "lambert_w".into(),
        pass,
        max_dev: dev,
    })
}

fn oracle_cases() -> Result<Vec<CaseResult>> {
    let xs = oracle_points();
    let mut reports = EnvFamily::CLOSED_FORM
        .par_iter()
        .map(|&f| -> Result<Vec<SweepReport>> {
            Ok(vec![
                oracle_equivalence_env(f, &xs, &ORACLE_GAMMAS)?,
                oracle_equivalence_prox(f, &xs, &ORACLE_GAMMAS)?,
            ])
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    reports.push(energy_identities(&linspace(-3.0, 3.0, 121), &ORACLE_GAMMAS)?);
    let mut cases = summarize(&reports);
    cases.push(set_valued_prox_case()?);
    cases.push(lambert_case()?);
    Ok(cases)
}

/// `D^{f⊕f*}` vs the Bregman distance of `f`, and the `(0, y)` disagreement for entropy.
pub fn bregman_cases(n: usize) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for (f, lo) in [(energy(), -3.0), (boltzmann_shannon(), 0.0)] {
        let g = linspace(lo, 3.0, n);
        let grid: Vec<(f64, f64)> = g.iter().flat_map(|&x| g.iter().map(move |&y| (x, y))).collect();
        let check = gbd_equals_bregman_check(&f, &grid)?;
        out.push(CaseResult {
            id: format!("gbd_is_bregman/{}", f.name()),
            pass: check.pass,
            max_dev: check.max_dev,
        });
        if f == ConvexFunction::BoltzmannShannon {
            let mut pass = !check.excluded.is_empty();
            let mut dev: f64 = 0.0;
            for &(_, y, gbd, breg) in &check.excluded {
                pass &= gbd == ExtReal::PosInf;
                let d = (breg.to_f64() - y).abs();
                pass &= d <= 1e-12;
                dev = dev.max(d);
            }
            out.push(CaseResult {
                id: "gbd_vs_bregman_excluded/boltzmann_shannon".into(),
                pass,
                max_dev: dev,
            });
        }
    }
    Ok(out)
}

/// The ten families used by the sweeps: the eight closed-form ones plus `σ_Id`.
pub fn all_families() -> Vec<EnvFamily> {
    let mut v = EnvFamily::CLOSED_FORM.to_vec();
    v.push(EnvFamily::new(Side::Left, NamedDistance::SigmaId));
    v.push(EnvFamily::new(Side::Right, NamedDistance::SigmaId));
    v
}

/// `γ` ladder used for net monotonicity.
pub fn monotone_gammas() -> Vec<f64> {
    let mut g = log_ladder(-3, 3);
    g.extend(ORACLE_GAMMAS);
    g.sort_by(f64::total_cmp);
    g.dedup();
    g
}

fn inequality_cases() -> Result<Vec<CaseResult>> {
    let xs = oracle_points();
    let gammas = monotone_gammas();
    let mut reports = all_families()
        .par_iter()
        .map(|&f| gamma_monotonicity(f, &xs, &gammas))
        .collect::<Result<Vec<_>>>()?;
    reports.push(distance_axioms(41)?);
    for side in [Side::Left, Side::Right] {
        reports.push(envelope_sandwich(side, NamedDistance::FitzLog, NamedDistance::Kl, &xs, &gammas)?);
        reports.push(envelope_sandwich(side, NamedDistance::Kl, NamedDistance::SigmaLog, &xs, &gammas)?);
        reports.push(envelope_sandwich(side, NamedDistance::FitzId, NamedDistance::FyEnergy, &xs, &ORACLE_GAMMAS)?);
    }
    let argmins = NamedDistance::ALL
        .par_iter()
        .map(|&d| check_argmin_relations(d, 1.0))
        .collect::<Result<Vec<_>>>()?;
    reports.extend(argmins);
    for f in EnvFamily::CLOSED_FORM {
        for point in [0.25, 1.0, 2.0] {
            reports.push(check_prox_boundedness(f, point, &log_ladder(-3, 3))?);
        }
    }
    let mut cases = summarize(&reports);
    cases.extend(bregman_cases(41)?);
    Ok(cases)
}

/// Points in `(0, 3]` on the oracle grid.
fn positive_points() -> Vec<f64> {
    oracle_points().into_iter().filter(|&x| x > 0.0).collect()
}

fn asymptotic_cases() -> Result<Vec<CaseResult>> {
    let pts = positive_points();
    let to_zero = log_ladder(-3, 0);
    let to_inf = log_ladder(0, 3);
    let mut reports = Vec::new();
    for d in [NamedDistance::FitzLog, NamedDistance::Kl] {
        for side in [Side::Left, Side::Right] {
            let f = EnvFamily::new(side, d);
            reports.push(sweep_gamma_to_zero(f, &pts, &to_zero)?);
            reports.push(sweep_gamma_to_infinity(f, &pts, &to_inf, Limit::Infimum)?);
        }
    }
    let lower: Vec<f64> = pts.iter().copied().filter(|&x| x <= 0.5).collect();
    let upper: Vec<f64> = pts.iter().copied().filter(|&x| x >= 0.5).collect();
    reports.push(sweep_gamma_to_zero(
        EnvFamily::new(Side::Left, NamedDistance::SigmaLog),
        &lower,
        &to_zero,
    )?);
    reports.push(sweep_gamma_to_zero(
        EnvFamily::new(Side::Right, NamedDistance::SigmaLog),
        &upper,
        &to_zero,
    )?);
    reports.push(sweep_gamma_to_infinity(
        EnvFamily::new(Side::Left, NamedDistance::SigmaLog),
        &[0.9],
        &log_ladder(-3, 4),
        Limit::Theta,
    )?);
    for side in [Side::Left, Side::Right] {
        reports.push(gamma_invariance(
            EnvFamily::new(side, NamedDistance::SigmaId),
            &linspace(-3.0, 3.0, 61),
            &log_ladder(-4, 4),
        )?);
    }
    Ok(summarize(&reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in ["oracle", "inequalities", "asymptotics", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().name(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn lambert_and_set_valued_cases_pass() {
        assert!(lambert_case().unwrap().pass);
        assert!(set_valued_prox_case().unwrap().pass);
    }

    #[test]
    fn bregman_cases_pass() {
        let cases = bregman_cases(21).unwrap();
        assert_eq!(cases.len(), 3);
        assert!(cases.iter().all(|c| c.pass), "{cases:?}");
    }

    #[test]
    fn report_serializes() {
        let r = SuiteReport::new(
            Suite::Oracle,
            vec![CaseResult {
                id: "x".into(),
                pass: true,
                max_dev: 0.0,
            }],
        );
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"suite":"oracle","cases":[{"id":"x""#));
    }
}
