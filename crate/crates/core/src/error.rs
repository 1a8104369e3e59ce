use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error at byte {offset}: {reason} (near `{token}`)")]
    Parse {
        offset: usize,
        token: String,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point set is not fixed by alpha: {point} maps to {image}, which is outside the set")]
    NotFixedSet { point: usize, image: usize },

    #[error("alpha does not permute the {r}-cycle base sets of y: {reason}")]
    NotInduced { r: usize, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{guard} guard exceeded: degree {degree} > limit {limit}")]
    GuardExceeded {
        guard: &'static str,
        degree: usize,
        limit: usize,
    },

    #[error("cannot write {path}: {reason}")]
    Io { path: String, reason: String },

    #[error("no solution: {0}")]
    NoSolution(String),

    /// A constructed or enumerated object failed its own post-check. This is
    /// always a bug in this crate.
    #[error("internal verification failure: {0}")]
    Verification(String),
}
