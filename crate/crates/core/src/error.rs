use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("ideal not proper: generator {0} is the zero exponent vector")]
    ImproperIdeal(usize),
    #[error("generator {index} has {got} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("generator {0} has a negative exponent")]
    NegativeExponent(usize),
    #[error("binomial factor (1 - T^0 P^0) is identically zero")]
    ZeroFactor,
    #[error("series in P is not well-founded: denominator factor (1 - T^{0}) has no P part")]
    SeriesNotWellFounded(u32),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("polyhedron has no facet with positive offset")]
    NoPositiveFacet,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
