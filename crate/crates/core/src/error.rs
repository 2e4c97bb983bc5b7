use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system: {0}")]
    RootSystem(String),
    #[error("invalid window {window:?}: {reason}")]
    Window { window: Vec<i32>, reason: String },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid letter s_{letter} (valid: 1..={max})")]
    Letter { letter: usize, max: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("word length {len} exceeds subsequence cap {cap}")]
    CapExceeded { len: usize, cap: usize },
    #[error("{0} is not a minimal coset representative")]
    NotMinimal(String),
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("box ({0},{1}) is not in the diagram")]
    BoxNotPresent(usize, usize),
    #[error("not in the image of f: {0}")]
    NotInImage(String),
    #[error("index {index} out of range 1..={rank}")]
    Index { index: usize, rank: usize },
    #[error("non-integral degree: {0}")]
    NonIntegral(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
