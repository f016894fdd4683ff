use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("elements of Q(zeta_{left}) and Q(zeta_{right}) cannot be mixed")]
    ContextMismatch { left: u64, right: u64 },

    #[error("conductor {0} is not supported (must be in 1..={max})", max = crate::exactnum::MAX_CONDUCTOR)]
    BadConductor(u64),

    #[error("{0} is not a primitive {1}-th root of unity")]
    NotPrimitiveRoot(String, u64),

    #[error("element does not lie in Q(zeta_{conductor}): {detail}")]
    NotInField { conductor: u64, detail: String },

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("structure has no antipode table")]
    MissingAntipode,

    #[error("no nonzero left integral exists")]
    NoIntegral,

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("t must be nonzero")]
    ZeroT,

    #[error("hypothesis `{checker}` failed with {} violation(s)", report.violations.len())]
    HypothesisFailed { checker: String, report: Box<Report> },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("search space of {size} candidates exceeds the supported bound (r <= 5, n <= 8)")]
    SearchSpaceTooLarge { size: u128 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
