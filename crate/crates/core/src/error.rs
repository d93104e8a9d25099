use thiserror::Error;

/// Errors raised by the coefficient engine and the numeric checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain on which the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A floating-point evaluation failed a consistency check.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// A textual value (rational literal, series file) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
