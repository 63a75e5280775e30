//! Generalized Bregman distances on the real line.
//!
//! Representatives of maximally monotone operators induce distances
//! `D(x, y) = inf/sup { h(x, v) - x v : v in T y }`; this crate evaluates them,
//! computes their left and right envelopes and proximity operators (closed forms
//! where known, brute force otherwise), and runs numerical checks of their
//! inequalities and limiting behaviour.

pub mod analysis;
pub mod convex;
pub mod distances;
pub mod envelopes;
mod error;
pub mod figures;
pub mod interval;
pub mod oracle;
pub mod representatives;
pub mod scalar;
pub mod suites;

pub use convex::ConvexFunction;
pub use distances::{gbd_eval, GbdSpec, Mode, NamedDistance};
pub use envelopes::{envelope, prox, EnvFamily, EnvelopeQuery, ProxResult, Side};
pub use error::{GbdError, Result};
pub use interval::Interval;
pub use representatives::{MonotoneOperator, Representative};
pub use scalar::{lambert_w, ExtReal, Tolerance};
