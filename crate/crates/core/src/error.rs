use thiserror::Error;

/// Errors raised by the library.
///
/// Precondition failures are kept apart from hypothesis failures: the former
/// mean the caller handed in a malformed value, the latter mean the value is
/// well formed but falls outside the setting a theorem or construction needs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    InvalidArgument(String),

    #[error("gcd({value}, {modulus}) = {gcd}, expected 1")]
    NotCoprime { value: i64, modulus: u64, gcd: u64 },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
