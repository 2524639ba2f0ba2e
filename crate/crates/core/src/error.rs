use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {n} for type {family}")]
    InvalidRank { family: char, n: usize },

    #[error("weight {0:?} is not dominant: {1}")]
    NotDominant(Vec<i64>, String),

    #[error("invalid Weyl group element {window:?}: {reason}")]
    InvalidElement { window: Vec<i32>, reason: String },

    #[error("root {0} is not a positive root of the ambient type")]
    InvalidRoot(String),

    #[error("omega chain index {k} out of range 1..={max}")]
    ChainIndex { k: usize, max: usize },

    #[error("folding positions {0:?} are not a strictly increasing subset of the chain")]
    InvalidPositions(Vec<usize>),

    #[error("invalid letter {0}")]
    InvalidLetter(String),

    #[error("invalid column {column:?}: {reason}")]
    InvalidColumn { column: Vec<i32>, reason: String },

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("filling is outside the image of the filling map: {0}")]
    NotInImage(String),

    #[error("odd count difference for letter {0}; content is not integral")]
    OddContent(u32),

    #[error("word content is not a partition: {0}")]
    NotPartitionContent(String),

    #[error("charge word violates the left-selection precondition: {0}")]
    ChargePrecondition(String),

    #[error("target value {target} is not reachable from position {position}")]
    Unreachable { position: i32, target: i32 },

    #[error("path hypotheses violated: {0}")]
    PathHypothesis(String),

    #[error("column splitting failed for {0:?}: no admissible replacement letters")]
    SplitFailed(Vec<i32>),

    #[error("maxcol entry {0} left the alphabet 1..={1}")]
    MaxcolRange(i64, usize),

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
