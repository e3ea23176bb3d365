use thiserror::Error;

/// Errors raised by index computation, region construction and I/O.
#[derive(Debug, Error)]
pub enum GiniError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported dimension {0}: operation requires d = 2")]
    UnsupportedDimension(usize),

    #[error("invalid distortion spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },

    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, GiniError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(GiniError::Domain(msg.into()))
}
