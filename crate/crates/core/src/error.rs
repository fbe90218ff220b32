//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, CoreError>;

#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Precondition violated by a caller-supplied argument.
    Argument(String),
    /// An exact-oracle query exhausted its recursion budget; carries the
    /// relative accuracy that was reached.
    Tolerance { achieved: f64 },
    /// A grid-resolution guard failed; `min_n` is the smallest path grid that
    /// would admit the request.
    Resolution { min_n: u64 },
    /// An estimation step failed at runtime.
    Estimation(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::Argument(msg) => write!(f, "invalid argument: {msg}"),
            CoreError::Tolerance { achieved } => {
                write!(f, "recursion budget exceeded; achieved relative accuracy {achieved:e}")
            }
            CoreError::Resolution { min_n } => {
                write!(f, "path grid too coarse; need at least n = {min_n}")
            }
            CoreError::Estimation(msg) => write!(f, "estimation failed: {msg}"),
        }
    }
}

impl core::error::Error for CoreError {}

pub(crate) fn argument(msg: impl Into<String>) -> CoreError {
    CoreError::Argument(msg.into())
}
