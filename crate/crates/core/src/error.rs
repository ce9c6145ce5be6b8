use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("order error: expected x < y, got x={x} y={y}")]
    Order { x: u64, y: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// `estimate` is a human-readable lower bound on the size that was refused.
    #[error("budget exceeded: {what} (needs {estimate})")]
    Budget { what: String, estimate: String },

    #[error("excluded case: {0}")]
    ExcludedCase(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn budget(what: impl Into<String>, estimate: impl ToString) -> Self {
        Error::Budget {
            what: what.into(),
            estimate: estimate.to_string(),
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
