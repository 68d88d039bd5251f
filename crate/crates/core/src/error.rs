use thiserror::Error;

/// Errors surfaced by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("exponent {exponent} exceeds the configured cap {cap} (column {column})")]
    ExponentOverflow {
        exponent: String,
        cap: u64,
        column: usize,
    },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// `h` has the shape `a*x^k + b`, which the term-count bound excludes.
    #[error("EXCLUDED_SHAPE: inner component {0} has the shape a*x^k + b")]
    ExcludedShape(String),

    /// The quadrinomial exponent condition `n1 + n3 > 2*n2` fails.
    #[error("CONDITION_NOT_MET: n1 + n3 = {lhs} is not greater than 2*n2 = {rhs}")]
    ConditionNotMet { lhs: u64, rhs: u64 },

    #[error("decomposition tree exceeded the node cap of {0}")]
    NodeCap(usize),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("PRECISION: {message} (retry with {suggestion})")]
    Precision { message: String, suggestion: String },

    #[error("path tracking step collapsed: {0}")]
    StepCollapse(String),

    /// A mathematical invariant failed; this is a bug, never an input problem.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
