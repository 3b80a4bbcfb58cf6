use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph on {0} vertices exceeds the 64-vertex bit-row limit")]
    TooLarge(usize),

    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("cannot contract a vertex with itself ({0})")]
    SelfContraction(usize),

    #[error("empty vertex set")]
    EmptySet,

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed graph input: {0}")]
    Input(String),

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("permutation has an invalid cycle type for a complementing permutation")]
    CycleType,

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("no self-complementary graph exists on {0} vertices")]
    NoScGraph(usize),

    #[error("graph is not self-complementary")]
    NotSelfComplementary,

    #[error("n = {0} is outside the supported range")]
    OutOfRange(usize),

    #[error("degree split failed: {small} vertices of small degree, expected {expected}")]
    DegreeSplit { small: usize, expected: usize },

    #[error("vertex {0} is not in the small-degree half")]
    NotInSmallHalf(usize),

    #[error("contraction step {step} merges non-adjacent groups ({u}, {v})")]
    NonAdjacentMerge { step: usize, u: usize, v: usize },

    #[error("contraction step {step} merges a group with itself ({u}, {v})")]
    RedundantMerge { step: usize, u: usize, v: usize },

    #[error("block labeling: {0}")]
    Blocks(String),

    #[error("invalid target h = {h} for n = {n}")]
    InvalidTarget { n: usize, h: usize },

    #[error("{0} exceeds the exactness guard")]
    Guard(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
