use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("volume vector has no nonzero entry")]
    ZeroVector,

    #[error("oracle search over {vertices} vertices exceeds the cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },

    #[error("region holds {points} lattice points, cap is {cap}")]
    RegionTooLarge { points: usize, cap: usize },

    #[error("{what} = {value} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },

    #[error("shaving leaves a polytope that is not full-dimensional")]
    DegenerateResult,

    #[error("point {0} is not a vertex of the polytope")]
    NotAVertex(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
