use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request needs more data than the chosen scan bound provides.
    #[error("range error: {0}")]
    Range(String),

    /// A malformed b-file or textual encoding.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A bubble that does not map back to an affinity partition.
    #[error("inversion error: {0}")]
    Inversion(String),

    /// An internal identity failed. Never expected on valid input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
