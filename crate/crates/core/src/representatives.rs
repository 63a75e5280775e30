//! Representative functions `h(x, v)` of the one-dimensional maximally monotone
//! operators `Id` and `log`, plus the Fenchel–Young representative of any
//! catalog function.
//!
//! Every representative satisfies `h(x, v) >= x v` with equality exactly on
//! the graph of its operator. For a fixed operator the Fitzpatrick function is
//! the smallest such `h` and `sigma` the largest.

use serde::{Deserialize, Serialize};

use crate::convex::ConvexFunction;
use crate::interval::Interval;
use crate::scalar::{w0, ExtReal};

/// A maximally monotone operator on the real line, given by its values as intervals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MonotoneOperator {
    Identity,
    Log,
    Subdiff(ConvexFunction),
}

impl MonotoneOperator {
    /// Folds `∂(energy)` into `Identity` and `∂(ent)` into `Log`.
    pub fn canonical(self) -> Self {
        match self {
            MonotoneOperator::Subdiff(ConvexFunction::Energy) => MonotoneOperator::Identity,
            MonotoneOperator::Subdiff(ConvexFunction::BoltzmannShannon) => MonotoneOperator::Log,
            other => other,
        }
    }

    pub fn same_as(&self, other: &MonotoneOperator) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn name(&self) -> String {
        match self.canonical() {
            MonotoneOperator::Identity => "Id".into(),
            MonotoneOperator::Log => "log".into(),
            MonotoneOperator::Subdiff(f) => format!("∂({})", f.name()),
        }
    }

    /// The set `S y`.
    pub fn apply(&self, y: f64) -> Interval {
        match self.canonical() {
            MonotoneOperator::Identity => Interval::point(y),
            MonotoneOperator::Log => {
                if y > 0.0 {
                    Interval::point(y.ln())
                } else {
                    Interval::empty()
                }
            }
            MonotoneOperator::Subdiff(f) => f.subdiff(y),
        }
    }

    pub fn dom(&self) -> Interval {
        match self.canonical() {
            MonotoneOperator::Identity => Interval::reals(),
            MonotoneOperator::Log => Interval::positive(),
            MonotoneOperator::Subdiff(f) => f.dom_subdiff(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepresentativeKind {
    Fitzpatrick,
    Sigma,
    FenchelYoung,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Representative {
    /// `F_Id(x, v) = x v + (x - v)^2 / 4`
    FitzpatrickId,
    /// `sigma_Id(x, v) = x v` on the diagonal, `+inf` elsewhere.
    SigmaId,
    /// `(f ⊕ f*)(x, v) = f(x) + f*(v)`
    FenchelYoung(ConvexFunction),
    /// Fitzpatrick function of `log`.
    FitzpatrickLog,
    /// Largest representative of `log`, as seen through the distance it induces.
    SigmaLog,
}

pub fn fitzpatrick_id() -> Representative {
    Representative::FitzpatrickId
}

pub fn sigma_id() -> Representative {
    Representative::SigmaId
}

pub fn fenchel_young(f: ConvexFunction) -> Representative {
    Representative::FenchelYoung(f)
}

pub fn fitzpatrick_log() -> Representative {
    Representative::FitzpatrickLog
}

pub fn sigma_log() -> Representative {
    Representative::SigmaLog
}

impl Representative {
    pub fn kind(&self) -> RepresentativeKind {
        match self {
            Representative::FitzpatrickId | Representative::FitzpatrickLog => {
                RepresentativeKind::Fitzpatrick
            }
            Representative::SigmaId | Representative::SigmaLog => RepresentativeKind::Sigma,
            Representative::FenchelYoung(_) => RepresentativeKind::FenchelYoung,
        }
    }

    /// The operator this function represents.
    pub fn operator(&self) -> MonotoneOperator {
        match self {
            Representative::FitzpatrickId | Representative::SigmaId => MonotoneOperator::Identity,
            Representative::FitzpatrickLog | Representative::SigmaLog => MonotoneOperator::Log,
            Representative::FenchelYoung(f) => MonotoneOperator::Subdiff(*f).canonical(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Representative::FitzpatrickId => "F_Id".into(),
            Representative::SigmaId => "sigma_Id".into(),
            Representative::FenchelYoung(f) => format!("{0}⊕{0}*", f.name()),
            Representative::FitzpatrickLog => "F_log".into(),
            Representative::SigmaLog => "sigma_log".into(),
        }
    }

    pub fn eval(&self, x: f64, v: f64) -> ExtReal {
        match self {
            Representative::FitzpatrickId => ExtReal::from(x * v + 0.25 * (x - v) * (x - v)),
            Representative::SigmaId => {
                if x == v {
                    ExtReal::from(x * v)
                } else {
                    ExtReal::PosInf
                }
            }
            Representative::FenchelYoung(f) => f.eval(x) + f.conj(v),
            Representative::FitzpatrickLog => fitzpatrick_log_eval(x, v),
            Representative::SigmaLog => {
                if x > 0.0 && v <= x.ln() {
                    ExtReal::from(x * x.ln())
                } else {
                    ExtReal::PosInf
                }
            }
        }
    }

    /// `h(x, v) - x v`, the quantity whose inf/sup over `T y` defines a distance.
    pub fn gap(&self, x: f64, v: f64) -> ExtReal {
        match self {
            // avoid cancellation in x v + ... - x v
            Representative::FitzpatrickId => ExtReal::from(0.25 * (x - v) * (x - v)),
            Representative::FitzpatrickLog if x > 0.0 => {
                let w = w0(x * (1.0 - v).exp());
                ExtReal::from(x * (w - 1.0) * (w - 1.0) / w)
            }
            // h >= x v holds exactly; clip rounding below zero
            _ => match self.eval(x, v) {
                ExtReal::Finite(h) => ExtReal::from((h - x * v).max(0.0)),
                other => other,
            },
        }
    }
}

/// `F_log(x, v) = x v + x (W + 1/W - 2)` with `W = W(x e^{1-v})` for `x > 0`,
/// the lsc limit `e^{v-1}` at `x = 0`, and `+inf` for `x < 0`.
fn fitzpatrick_log_eval(x: f64, v: f64) -> ExtReal {
    if x < 0.0 {
        return ExtReal::PosInf;
    }
    if x == 0.0 {
        return ExtReal::from((v - 1.0).exp());
    }
    let w = w0(x * (1.0 - v).exp());
    ExtReal::from(x * v + x * (w - 1.0) * (w - 1.0) / w)
}

/// Brute-force Fitzpatrick function
/// `sup { x w + z v - z w : z in zs, w in S z }` over a finite set of graph points.
///
/// Only a lower bound of the true value; used to cross-check the closed forms.
pub fn fitzpatrick_by_sup(op: &MonotoneOperator, x: f64, v: f64, zs: &[f64]) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for &z in zs {
        let sz = op.apply(z);
        if sz.is_empty() {
            continue;
        }
        // affine in w: the sup over S z sits at an end
        for w in [sz.lo().to_f64(), sz.hi().to_f64()] {
            let coef = x - z;
            let val = if w.is_infinite() {
                if coef == 0.0 {
                    z * v
                } else if coef * w > 0.0 {
                    f64::INFINITY
                } else {
                    continue;
                }
            } else {
                coef * w + z * v
            };
            best = best.max(val);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::{boltzmann_shannon, energy};

    fn graph_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn fitzpatrick_id_values() {
        let h = fitzpatrick_id();
        assert_eq!(h.eval(1.0, 1.0), ExtReal::Finite(1.0));
        assert_eq!(h.eval(0.0, 2.0), ExtReal::Finite(1.0));
        assert_eq!(h.eval(2.0, 0.0), ExtReal::Finite(1.0));
    }

    #[test]
    fn fitzpatrick_id_matches_sup_definition() {
        let zs = graph_grid(-10.0, 10.0, 20001);
        let brute = fitzpatrick_by_sup(&MonotoneOperator::Identity, 0.0, 2.0, &zs);
        assert!((brute - 1.0).abs() < 1e-6);
    }

    #[test]
    fn sigma_id_values() {
        let h = sigma_id();
        assert_eq!(h.eval(1.0, 1.0), ExtReal::Finite(1.0));
        assert_eq!(h.eval(1.0, 2.0), ExtReal::PosInf);
        assert_eq!(h.eval(0.0, 0.0), ExtReal::Finite(0.0));
    }

    #[test]
    fn fenchel_young_values() {
        assert_eq!(fenchel_young(energy()).eval(1.0, 1.0), ExtReal::Finite(1.0));
        assert_eq!(fenchel_young(boltzmann_shannon()).eval(1.0, 0.0), ExtReal::Finite(0.0));
        assert_eq!(fenchel_young(boltzmann_shannon()).eval(-1.0, 0.0), ExtReal::PosInf);
        assert_eq!(fenchel_young(energy()).operator(), MonotoneOperator::Identity);
        assert_eq!(fenchel_young(boltzmann_shannon()).operator(), MonotoneOperator::Log);
    }

    #[test]
    fn fitzpatrick_log_values() {
        let h = fitzpatrick_log();
        let on_graph = h.eval(2.0, 2f64.ln()).to_f64();
        assert!((on_graph - 2.0 * 2f64.ln()).abs() < 1e-12);
        assert!(h.eval(1.0, 0.0).to_f64().abs() < 1e-12);
        assert_eq!(h.eval(-1.0, 0.0), ExtReal::PosInf);
        assert!((h.eval(0.0, 1.0).to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fitzpatrick_log_dominates_sup_over_graph() {
        // sup over the graph of log at (1, 1); closed form is 1 + W(1) + 1/W(1) - 2
        let zs = graph_grid(1e-4, 20.0, 200_001);
        let brute = fitzpatrick_by_sup(&MonotoneOperator::Log, 1.0, 1.0, &zs);
        let exact = fitzpatrick_log().eval(1.0, 1.0).to_f64();
        assert!(exact >= 1.0);
        assert!(exact >= brute - 1e-12);
        assert!(exact - brute <= 1e-4, "exact {exact} brute {brute}");
    }

    #[test]
    fn sigma_log_values() {
        let h = sigma_log();
        assert_eq!(h.eval(1.0, 0.0), ExtReal::Finite(0.0));
        assert_eq!(h.eval(1.0, 1.0), ExtReal::PosInf);
        assert!((h.eval(std::f64::consts::E, 1.0).to_f64() - std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn operators_apply() {
        assert!(MonotoneOperator::Log.apply(0.0).is_empty());
        assert_eq!(MonotoneOperator::Identity.apply(3.0), Interval::point(3.0));
        assert!(MonotoneOperator::Subdiff(energy()).same_as(&MonotoneOperator::Identity));
    }
}
