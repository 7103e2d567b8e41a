use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("interpolation nodes must be distinct, abscissa {0} repeats")]
    DuplicateAbscissa(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("polytope has no half-space representation")]
    MissingHalfspaces,

    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,

    #[error("inconsistent polytope: {0}")]
    Inconsistent(String),

    #[error("no lattice point counter for this polytope: {0}")]
    UnsupportedCounter(String),

    #[error("box scan would visit {points} points, over the budget of {budget}")]
    BoxBudgetExceeded { points: u128, budget: u128 },

    #[error("coordinate overflow while {0}")]
    Overflow(&'static str),

    #[error("interpolated polynomial has degree {got:?}, expected {expected} (counter bug?)")]
    DegreeMismatch { expected: usize, got: Option<usize> },

    #[error("interpolated constant term is {0}, expected 1")]
    ConstantTerm(String),

    #[error("coefficient of degree {0} is zero, ratio undefined")]
    ZeroCoefficient(usize),

    #[error("json: {0}")]
    Json(String),
}
