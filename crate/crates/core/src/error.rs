use thiserror::Error;

/// Failure categories shared by every module; the CLI maps them to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Parse,
    Domain,
    NonConvergence,
    Accuracy,
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("denominator vanishes on the integration domain: {0}")]
    RealRoot(String),

    #[error("iteration did not converge: {0}")]
    NonConvergence(String),

    #[error("requested accuracy not reached: {message} (best estimate {best_estimate})")]
    Accuracy { message: String, best_estimate: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse(_) => ErrorCategory::Parse,
            Error::DivisionByZero | Error::Domain(_) | Error::RealRoot(_) => ErrorCategory::Domain,
            Error::NonConvergence(_) => ErrorCategory::NonConvergence,
            Error::Accuracy { .. } => ErrorCategory::Accuracy,
            Error::Invariant(_) => ErrorCategory::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
