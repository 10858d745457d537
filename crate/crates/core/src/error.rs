use thiserror::Error;

/// Errors raised by the combinatorial and group-theoretic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("parts are not weakly decreasing: {0}")]
    NotWeaklyDecreasing(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0} is not a hook partition")]
    NotAHook(String),
    #[error("partition of odd size {0} has no half-size construction")]
    OddSize(usize),
    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("value out of range: {0}")]
    RangeError(String),
    #[error("desk-scale bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("depth mismatch: expected {expected}, found {found}")]
    DepthMismatch { expected: u32, found: u32 },
    #[error("permutation does not lie in the fixed Sylow 2-subgroup: {0}")]
    NotInSylow(String),
    #[error("{0} does not label an odd-degree character")]
    NotOddDegree(String),
    #[error("invalid hook tuple: {0}")]
    InvalidTuple(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
