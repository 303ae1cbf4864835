use thiserror::Error;

/// Errors shared by every module in the crate.
///
/// All operations are total on valid inputs; errors only report contract
/// violations (bad rank, non-dominant weight where dominance is required,
/// composite "prime") or resource caps being hit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: requires {constraint}")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("coordinate vector has length {got}, expected rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("Weyl orbit larger than cap: size {size} exceeds {cap}")]
    OrbitCapExceeded { size: String, cap: u64 },

    #[error("module dimension {dim} exceeds cap {cap}")]
    DimCapExceeded { dim: String, cap: u64 },

    #[error("rank-1 groups have no proper Levi beyond the torus")]
    RankOne,

    #[error("invalid quotient parameters: {0}")]
    InvalidQuotient(String),

    #[error("internal contradiction: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
