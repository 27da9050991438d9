use thiserror::Error;

/// Errors raised by the algebra, summation and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero element")]
    ZeroInput,
    /// A computation needed constants outside Q and the designated number field.
    #[error("unsupported constant field: {0}")]
    UnsupportedField(String),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("invalid number field: {0}")]
    InvalidField(String),
    /// A "no solution" claim could not be certified, so no group is reported.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    /// A solver contradicted a guarantee made by an earlier stage.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
