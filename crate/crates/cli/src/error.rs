use ddgalois_core::Error;
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, ThisError)]
pub enum CliError {
    #[error("parse error at column {}: {message}", position + 1)]
    Parse { position: usize, message: String },
    #[error("equation is not genuinely second order: {0}")]
    Order(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Order(_) | CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::InternalInconsistency(_) => 4,
                Error::InvalidField(_) | Error::Precondition(_) => 2,
                Error::Inconclusive(_)
                | Error::UnsupportedField(_)
                | Error::DegreeCap { .. }
                | Error::ZeroInput => 3,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Order(_) => "OrderError",
            CliError::Usage(_) => "UsageError",
            CliError::Core(e) => match e {
                Error::ZeroInput => "ZeroInput",
                Error::UnsupportedField(_) => "UnsupportedField",
                Error::DegreeCap { .. } => "DegreeCap",
                Error::InvalidField(_) => "InvalidField",
                Error::Inconclusive(_) => "Inconclusive",
                Error::InternalInconsistency(_) => "InternalInconsistency",
                Error::Precondition(_) => "Precondition",
            },
        }
    }
}
