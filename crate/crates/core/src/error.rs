use std::fmt;

use thiserror::Error;

/// A parse failure with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, position: usize) -> Self {
        ParseError { message: message.into(), position }
    }

    pub fn shifted(mut self, by: usize) -> Self {
        self.position += by;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at offset {})", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed permutation word: {0}")]
    MalformedWord(String),

    #[error("permutation {0} has more than one descent")]
    NotGrassmannian(String),

    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),

    #[error("element cannot be recovered from its derivatives: {0}")]
    NonRecoverable(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("polynomial is not in the span of Schubert polynomials: {0}")]
    NotInSpan(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache version mismatch: expected {expected}, found {found}")]
    VersionMismatch { expected: u64, found: u64 },

    #[error("conflicting cache entry for {0}")]
    Conflict(String),

    #[error("invalid cache file: {0}")]
    CacheFormat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
