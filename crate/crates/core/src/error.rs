use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An operation was applied outside its mathematical domain
    /// (division by an interval containing zero, log of a nonpositive
    /// interval, and so on).
    #[error("domain error: {0}")]
    Domain(String),

    /// An argument violated a precondition (index out of range, bad
    /// parameter ordering, ...).
    #[error("argument error: {0}")]
    Argument(String),

    /// A sign that the algorithm must decide could not be certified even
    /// after precision escalation.
    #[error("undecidable sign: {0}")]
    Undecidable(String),

    /// A certificate could not be constructed or failed re-validation.
    #[error("certification failure: {0}")]
    Certification(String),

    /// A decomposition does not satisfy its structural premises.
    #[error("structure error: {0}")]
    Structure(String),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
