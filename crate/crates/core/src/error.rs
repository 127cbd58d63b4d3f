//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised while building fronts, decompositions and queries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point must have at least one coordinate")]
    EmptyPoint,
    #[error("coordinate {index} is not finite")]
    NonFinite { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("box lower corner exceeds upper corner in coordinate {index}")]
    InvertedBox { index: usize },
    #[error("empty front")]
    EmptyFront,
    #[error("points {dominating} and {dominated} are not mutually non-dominated")]
    NotAntichain { dominating: usize, dominated: usize },
    #[error("alpha must be in [0,1), got {0}")]
    InvalidAlpha(f64),
    #[error("reference point coordinate {index} is below the worst front value")]
    InvalidReference { index: usize },
    #[error("ideal point coordinate {index} is above the best front value")]
    InvalidIdeal { index: usize },
    #[error("unbounded (exact mode)")]
    UnboundedExactMode,
    #[error(
        "approximate decomposition underestimates the non-dominated volume; dominated HV unavailable"
    )]
    ApproximateDominatedHv,
    #[error("candidate {index}: dimension mismatch, expected {expected}, found {found}")]
    CandidateDimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("oracle limit: {count} points exceeds the maximum of {limit}")]
    OracleLimit { count: usize, limit: usize },
    #[error("point {index} does not weakly dominate the reference point")]
    OutsideReference { index: usize },
    #[error("random front spec needs at least one point and one objective")]
    InvalidFrontSpec,
    #[error("could not draw {requested} mutually non-dominated points within {budget} samples (got {reached})")]
    ResampleBudget {
        requested: usize,
        reached: usize,
        budget: usize,
    },
    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
