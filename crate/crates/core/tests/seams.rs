//! Every closed-form envelope and prox is continuous across each of its branch
//! boundaries (the only jump being the set-valued right `F_log` prox at `x = 0`).

use std::f64::consts::E;

use gbd_core::lambert_w;
use gbd_core::{EnvFamily, NamedDistance, Side};

const GAMMAS: [f64; 9] = [0.1, 0.2, 0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 5.0];

type Boundary = fn(f64) -> Option<f64>;

fn boundaries(f: EnvFamily) -> Vec<Boundary> {
    use NamedDistance::*;
    match (f.side, f.dist) {
        (Side::Left, FitzLog) => vec![
            |g| Some((-g).exp() / (2.0 + 2.0 * g)),
            |g| (g < 1.0).then(|| g.exp() / (2.0 - 2.0 * g)),
        ],
        (Side::Right, FitzLog) => vec![
            |g| {
                (g * E < 1.0).then(|| {
                    let wm = lambert_w(-g).unwrap();
                    -g * (wm + 1.0) / (2.0 * wm)
                })
            },
            |g| {
                let wp = lambert_w(g).unwrap();
                Some(g * (wp + 1.0) / (2.0 * wp))
            },
        ],
        (Side::Left, SigmaLog) => vec![|_| Some(0.5), |g| (g >= 1.0).then(|| 0.5 * (1.0 - g).exp())],
        (Side::Right, SigmaLog) => vec![|_| Some(0.5), |g| (g > 1.0).then(|| g / 2.0)],
        (Side::Left, Kl) => vec![|g| Some(0.5 * (-g).exp()), |g| Some(0.5 * g.exp())],
        (Side::Right, Kl) => vec![|g| (g < 1.0).then(|| (1.0 - g) / 2.0), |g| Some((1.0 + g) / 2.0)],
        (_, FitzId) => vec![|g| (0.5 - 2.0 * g >= 0.0).then_some(0.5 - 2.0 * g), |g| Some(0.5 + 2.0 * g)],
        _ => vec![],
    }
}

fn jump(f: EnvFamily, g: f64, b: f64) -> (f64, f64) {
    // narrow enough that slopes up to e^5 stay well below the tolerance
    let d = 1e-12 * b;
    let (lo, hi) = (b - d, b + d);
    let env = (f.envelope(g, hi).unwrap().to_f64() - f.envelope(g, lo).unwrap().to_f64()).abs();
    let p = |x| f.prox(g, x).unwrap().selected.unwrap();
    (env, (p(hi) - p(lo)).abs())
}

#[test]
fn envelopes_and_proxes_are_continuous_at_every_seam() {
    let mut checked = 0;
    for f in EnvFamily::CLOSED_FORM {
        for b in boundaries(f) {
            for g in GAMMAS {
                let Some(x) = b(g).filter(|&x| x > 0.0) else { continue };
                let (de, dp) = jump(f, g, x);
                assert!(de <= 1e-8, "{f} env jumps by {de:e} at x={x}, γ={g}");
                assert!(dp <= 1e-6, "{f} prox jumps by {dp:e} at x={x}, γ={g}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 100, "only {checked} seams checked");
}

#[test]
fn envelopes_are_right_continuous_at_the_origin() {
    for f in EnvFamily::CLOSED_FORM {
        for g in GAMMAS {
            let at0 = f.envelope(g, 0.0).unwrap().to_f64();
            let near = f.envelope(g, 1e-12).unwrap().to_f64();
            assert!((at0 - near).abs() <= 1e-8, "{f} γ={g}: env(0)={at0}, env(0+)={near}");
        }
    }
}

#[test]
fn right_f_log_prox_jumps_only_at_inverse_e() {
    let f = EnvFamily::new(Side::Right, NamedDistance::FitzLog);
    let below = f.prox(1.0 / E - 1e-6, 0.0).unwrap().selected.unwrap();
    let above = f.prox(1.0 / E + 1e-6, 0.0).unwrap().selected.unwrap();
    assert_eq!(below, 0.0);
    assert_eq!(above, 0.5);
    let at = f.prox(1.0 / E, 0.0).unwrap();
    assert_eq!((at.set.lo().to_f64(), at.set.hi().to_f64()), (0.0, 0.5));
    // the envelope itself does not jump
    let e = |g| f.envelope(g, 0.0).unwrap().to_f64();
    assert!((e(1.0 / E - 1e-9) - e(1.0 / E + 1e-9)).abs() < 1e-8);
}

#[test]
fn right_kl_prox_is_set_valued_at_gamma_one() {
    let f = EnvFamily::new(Side::Right, NamedDistance::Kl);
    let p = f.prox(1.0, 0.0).unwrap();
    assert_eq!((p.set.lo().to_f64(), p.set.hi().to_f64()), (0.0, 0.5));
    assert_eq!(f.prox(0.9, 0.0).unwrap().selected, Some(0.0));
    assert_eq!(f.prox(1.1, 0.0).unwrap().selected, Some(0.5));
}
