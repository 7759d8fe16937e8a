use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("letter a{index} is outside the alphabet a1..a{rank}")]
    LetterOutOfRange { index: usize, rank: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("words over different alphabets (rank {left} vs {right})")]
    RankMismatch { left: usize, right: usize },

    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("LC_{0} has no zero element")]
    NoZero(usize),

    #[error("canonical form check failed for {word}: {reason}")]
    InvalidCanonical { word: String, reason: String },

    #[error("{what} exceeds the limit of {limit}")]
    Resource { what: String, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("the relation << is not antisymmetric: {0}")]
    NotAntisymmetric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
