use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("polynomial is not in the message space")]
    NotInMessageSpace,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("decoding failure: {0}")]
    DecodingFailure(String),
    #[error("coordinate {index} is zero, its argument is undefined")]
    ZeroCoordinate { index: usize },
    #[error("subspace dimensions differ ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("basis is not orthonormal (deviation {0:.3e})")]
    NotOrthonormal(f64),
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("outside the Chernoff regime: t/n = {ratio} > theta = {theta}")]
    RegimeViolation { ratio: f64, theta: f64 },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
