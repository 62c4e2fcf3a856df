use thiserror::Error;

/// Errors raised by the combinatorial, character and algebra layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("class functions live on different groups: {0} vs {1}")]
    GroupMismatch(String, String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("elements do not form a group: {0}")]
    NotAGroup(String),

    #[error("closed form unavailable for offset {offset} (entry {beta} / {alpha})")]
    ClosedFormUnavailable {
        offset: usize,
        beta: String,
        alpha: String,
    },

    #[error("graph contains a cycle")]
    Cycle,

    #[error("refusing to build the algebra for n = {n} (guard {guard}); it has dimension {dim}, pass --force to override")]
    Refused { n: usize, guard: usize, dim: u64 },

    #[error("certificate failed: {0}")]
    Certificate(String),

    #[error("resolution of {0} truncated at length {1}; increase max_len")]
    Truncated(String, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
