use thiserror::Error;

/// Every failure the toolkit reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Ring or order declaration is inconsistent (duplicate names, bad blocks).
    #[error("configuration error: {0}")]
    Config(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// Operation called outside its contract (ring mismatch, wrong shape of input).
    #[error("usage error: {0}")]
    Usage(String),

    /// Malformed graph or file input.
    #[error("input error: {0}")]
    Input(String),

    /// A configured resource cap was hit. Never a silent truncation.
    #[error("computation limit exceeded: {0}")]
    ComputationLimit(String),

    /// A graph lies outside the class an ordering is defined for.
    #[error("graph not in class: {0}")]
    NotInClass(String),

    /// An internal consistency check failed; indicates a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
