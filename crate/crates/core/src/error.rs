use thiserror::Error;

/// Errors produced by array construction, verification and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the range an operation accepts.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Cells, levels or shapes are inconsistent.
    #[error("malformed array: {0}")]
    Malformed(String),

    /// A `moa v1` document (or ket list) could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exact oracle rejected a generated or supplied design.
    #[error("verification failed: {0}")]
    Verification(String),

    /// A construction needs an array that is neither embedded nor generatable.
    #[error("seed required: {0}")]
    MissingSeed(String),

    /// No Hadamard generator covers the requested order.
    #[error("no generator for Hadamard order {order}: {detail}")]
    NoGenerator { order: usize, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}

pub(crate) fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Malformed(msg.into()))
}
