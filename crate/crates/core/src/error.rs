use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("label set {0:?} is not a subset of the poset labels")]
    NotASubset(Vec<usize>),

    #[error("block {0:?} is not a contiguous union of components")]
    InvalidBlock(Vec<usize>),

    #[error("{what} {requested} exceeds the configured budget of {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("rank overflow: {0} contains the full pattern")]
    RankOverflow(String),

    #[error("transposition index {index} out of range for length {len}")]
    TranspositionOutOfRange { index: usize, len: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("input {0} does not avoid the source pattern")]
    NotAnAvoider(String),

    #[error("malformed encoding word at stage {stage}: {message}")]
    MalformedWord { stage: usize, message: String },

    #[error("patterns are not shape-Wilf-equivalent on board {board}: {left} vs {right} avoiders")]
    NotShapeWilf {
        board: String,
        left: usize,
        right: usize,
    },

    #[error("square board required, got {0}")]
    NonSquareBoard(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("unknown {kind} `{value}`")]
    Unknown { kind: &'static str, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
