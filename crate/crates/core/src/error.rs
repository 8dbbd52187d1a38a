use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: unknown identifiers, broken file structure.
    #[error("input error: {0}")]
    Input(String),

    /// The arguments are well-formed but violate an operation's hypothesis.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive search was asked to run beyond its size bound.
    #[error("capacity exceeded: {what} has {size} elements, limit is {limit}")]
    Capacity {
        what: String,
        size: usize,
        limit: usize,
    },

    /// A face list does not describe a cellular embedding.
    #[error("embedding error: {0}")]
    Embedding(String),

    /// A windowed computation failed its stabilization check.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn check_capacity(what: &str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::Capacity {
            what: what.to_string(),
            size,
            limit,
        })
    } else {
        Ok(())
    }
}
