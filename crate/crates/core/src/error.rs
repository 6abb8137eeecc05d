use thiserror::Error;

/// Errors raised by parsing, argument validation and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph6 input: {0}")]
    Graph6(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("graph is disconnected")]
    Disconnected,

    /// An exponential routine was asked to run above its configured size cap.
    #[error("refusing to run {what} on n = {n} (cap is {cap}): {reason}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        reason: &'static str,
    },

    /// A result failed its own certificate check. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
