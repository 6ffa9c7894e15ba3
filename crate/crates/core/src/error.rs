use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The query is well formed but no proved statement covers it.
    #[error("out of theorem scope: {0}")]
    OutOfScope(String),

    /// A table lookup or a quantity that is not known.
    #[error("unknown: {0}")]
    Unknown(String),

    #[error("mixed locality: {0} vs {1}")]
    MixedLocality(String, String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("table data error at line {line}: {msg}")]
    TableData { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn out_of_scope(msg: impl Into<String>) -> Error {
    Error::OutOfScope(msg.into())
}
