use std::path::PathBuf;

/// Errors from the front end: algebra errors plus file and JSON handling.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] plethysm_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// True when the caller's input is at fault (exit code 1 rather than 2).
    pub fn is_usage(&self) -> bool {
        match self {
            Error::Core(e) => e.is_usage(),
            Error::Usage(_) => true,
            Error::Io { .. } | Error::Json(_) => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
