use thiserror::Error;

/// Errors raised by the public operations of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GbdError {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// `+inf + -inf` or another combination the extended-real conventions forbid.
    #[error("contract violation: {0}")]
    ContractViolation(&'static str),

    /// Every point of a search window evaluated to `+inf`.
    #[error("empty effective domain on [{lo}, {hi}]")]
    EmptyDomain { lo: f64, hi: f64 },

    /// A value failed a structural invariant (bad interval, grid, window, tolerance...).
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },

    /// A name lookup (distance, suite, side) failed.
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("write failed: {0}")]
    Io(String),
}

impl From<std::io::Error> for GbdError {
    fn from(e: std::io::Error) -> Self {
        GbdError::Io(e.to_string())
    }
}

pub type Result<T, E = GbdError> = std::result::Result<T, E>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> GbdError {
    GbdError::Domain {
        op,
        detail: detail.into(),
    }
}

pub(crate) fn invalid(what: &'static str, detail: impl Into<String>) -> GbdError {
    GbdError::Invalid {
        what,
        detail: detail.into(),
    }
}

/// Rejects NaN arguments with a domain error naming the operation.
pub(crate) fn reject_nan(op: &'static str, values: &[f64]) -> Result<()> {
    if values.iter().any(|v| v.is_nan()) {
        Err(domain(op, "NaN argument"))
    } else {
        Ok(())
    }
}
