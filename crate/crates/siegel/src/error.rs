use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("missing census: {0}")]
    MissingCensus(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("non-integral value in {0} (corrupt cell or table)")]
    NonIntegral(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("checksum mismatch in {0}")]
    ChecksumMismatch(String),
    #[error("unsupported format version: {0}")]
    VersionMismatch(String),
    #[error("numeric verdict inconclusive: {0}")]
    Inconclusive(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
