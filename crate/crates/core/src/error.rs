use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("entries of the determinant do not combine to a homogeneous polynomial")]
    DegreeIncompatible,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    #[error("point is an inflection point (Hessian vanishes)")]
    InflectionPoint,
    #[error("point is singular on the curve")]
    SingularPoint,
    #[error("point is not singular on the curve")]
    NotSingular,
    #[error("computation did not settle before the cap {cap}")]
    CapExceeded { cap: u32 },
    #[error("generator search reached the cap {cap}; degrees found so far: {partial:?}")]
    GeneratorCapExceeded { cap: u32, partial: Vec<u32> },
    #[error("non-isolated singularity: local algebra did not stabilise by order {cap}")]
    NonIsolated { cap: u32 },
    #[error("Hilbert function did not stabilise by degree {cap}: input is not reduced")]
    NonReduced { cap: u32 },
    #[error("the curves share a common component")]
    CommonComponent,
    #[error("repeated component at positions {0} and {1}")]
    RepeatedComponent(usize, usize),
    #[error("components {0} and {1} share a common factor")]
    CommonFactor(usize, usize),
    #[error("component {0} is not squarefree")]
    NotSquarefree(usize),
    #[error("degenerate linear system")]
    DegenerateSystem,
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid selection: {0}")]
    InvalidSelection(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
