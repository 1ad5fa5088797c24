use thiserror::Error;

/// Errors produced by the eigenvalue routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A product overflowed the `f64` range at the given index.
    #[error("overflow at index {index}")]
    Overflow { index: usize },
    /// The eigenvalue search could not bracket or converge.
    #[error("eigenvalue search failed: {0}")]
    Search(String),
    /// A matrix or intermediate quantity became non-finite.
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
