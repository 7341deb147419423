use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("{what}: graph has {actual} vertices, guard is {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("graph is not P4-free (induced P4 on {witness:?})")]
    NotCograph { witness: [usize; 4] },

    #[error("graph is not 2P3-free (induced 2P3 on {witness:?})")]
    Not2P3Free { witness: [usize; 6] },

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("formula cannot be normalized: {0}")]
    NotNormalizable(String),

    #[error("verification failed ({claim}): {detail}")]
    Verification { claim: String, detail: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("generation failed: {0}")]
    Generation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status used by the command-line tool: 2 for unreadable
    /// or malformed input, 3 for class violations, 4 for failed
    /// verification, 5 for size guards and 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidGraph(_) | Error::InvalidFormula(_) | Error::NotNormalizable(_) => 2,
            Error::NotCograph { .. } | Error::Not2P3Free { .. } => 3,
            Error::Verification { .. } => 4,
            Error::SizeGuard { .. } => 5,
            Error::InvalidMatching(_) | Error::Generation(_) => 1,
        }
    }
}
