use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no integral: the integral equations only have the zero solution")]
    NoIntegral,
    #[error("resource guard: {0}")]
    Guard(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of a mathematical check, as opposed to bad input.
    pub fn is_check_failure(&self) -> bool {
        matches!(self, Error::Validation(_) | Error::Precondition(_) | Error::NoIntegral | Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
