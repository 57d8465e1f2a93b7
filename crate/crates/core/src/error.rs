use alloc::string::String;

/// Errors reported by the algebra engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("at most 32 variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("exponent does not fit in 8 bits")]
    ExponentOverflow,
    #[error("exponent vectors of different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("polynomials live in rings with different variable counts ({left} vs {right})")]
    RingMismatch { left: usize, right: usize },
    #[error("input is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("indices must be strictly increasing: {0}")]
    NotIncreasing(String),
    #[error("duplicate minor at index {0}")]
    DuplicateMinor(usize),
    #[error("operation requires 2x2 minors, selection has t = {0}")]
    MinorSizeNotTwo(usize),
    #[error("{count} minors exceed the enumeration cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("ideal is generated in mixed degrees {0:?}")]
    MixedGeneratorDegrees(alloc::vec::Vec<usize>),
    #[error("expected a split into exactly two variable-disjoint groups, got {0}")]
    SplitCount(usize),
    #[error("no nonzerodivisor found after {0} attempts")]
    RetryBudgetExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
