use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid system: {0}")]
    Validation(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("word is not reduced: length defect at power {k}")]
    NotReduced { k: usize },
    #[error("order error: {0}")]
    Order(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("no bound found within ball({radius}): {what}")]
    NoBound { radius: usize, what: String },
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
