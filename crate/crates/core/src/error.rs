use alloc::string::String;

/// Errors raised by the algebra routines.
///
/// Variants split into usage errors (bad input) and computation errors
/// (overflow, inconsistent data); see [`Error::is_usage`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by the computation.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Overflow | Error::Inconsistent(_))
    }
}

pub type Result<T> = core::result::Result<T, Error>;
