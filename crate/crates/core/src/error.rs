use thiserror::Error;

use crate::recognition::ClassWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    /// A recognizer found a configuration that the requested procedure excludes.
    #[error("precondition failed: {reason} (witness {witness:?})")]
    Rejected { reason: String, witness: ClassWitness },

    #[error("coloring is improper on edge {0}-{1}")]
    ImproperColoring(usize, usize),

    #[error("no color left for vertex {vertex} in a palette of {palette}")]
    PaletteExhausted { vertex: usize, palette: usize },

    #[error("palette of {palette} colors is below the required {required}")]
    InsufficientPalette { palette: usize, required: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub(crate) fn bad_cert<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidCertificate(msg.into()))
}
