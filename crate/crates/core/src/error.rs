use thiserror::Error;

use crate::family::Interval;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty interval [{lo}..{hi})")]
    EmptyInterval { lo: usize, hi: usize },

    #[error("interval [{lo}..{hi}) does not fit the ground set [0..{n})")]
    OutOfRange { lo: usize, hi: usize, n: usize },

    #[error("{interval} is good, so it cannot be reduced")]
    NotBad { interval: Interval },

    #[error("maximal intervals in {interval} do not overlap consecutively")]
    NotStaggered { interval: Interval },

    /// A (family, reduced-set) pair that no reduction run could have
    /// produced: some window has members but no point of net incidence one.
    #[error("inconsistent reduction data: window {window} has no point of net incidence 1")]
    Inconsistent { window: Interval },

    #[error("instance too large for exhaustive search: {what} is {size}, limit {limit}")]
    OracleGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
