use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structurally invalid input: bad vertex ids, loops, parallel edges,
    /// inconsistent orderings and so on.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Well-formed input outside the domain an operation handles.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn unsupported(msg: impl Into<String>) -> Error {
    Error::Unsupported(msg.into())
}
