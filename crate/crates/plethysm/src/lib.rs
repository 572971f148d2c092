//! Standard-library front end for `plethysm-core`: parallel drivers, JSON and
//! text formats, a decomposition cache, theorem verification and the CLI.

pub mod cache;
pub mod cli;
pub mod compute;
pub mod error;
pub mod format;
pub mod theorems;

pub use error::{Error, Result};
pub use theorems::{Verdict, VerificationReport};
