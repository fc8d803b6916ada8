use thiserror::Error;

/// Errors raised by constructions, verifiers and the serialization layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("invalid threshold: {0}")]
    InvalidThreshold(String),
    #[error("input too small: {0}")]
    InputTooSmall(String),
    #[error("parameter overflow: {0}")]
    ParameterOverflow(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("already extremal: {0}")]
    AlreadyExtremal(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("search bound too large: {0}")]
    BoundTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
