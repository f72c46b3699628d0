use thiserror::Error;

use crate::arith::UniPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("no rational fit with denominator degree <= {dmax}")]
    NoRationalFit { dmax: usize },
    #[error("truncation order {order} too short; need at least {needed}")]
    TruncationTooShort { order: usize, needed: usize },
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("weight has {got} coordinates, algebra rank is {rank}")]
    RankMismatch { rank: usize, got: usize },
    #[error("element contains non-Cartan monomial {0}")]
    NotCartan(String),
    #[error("operation not defined for {family}: {what}")]
    Unsupported { family: String, what: String },
    #[error("polynomial {poly} does not annihilate L({weight})")]
    NotAnnihilating { poly: UniPoly, weight: String },
    #[error("not minimal: divisor {divisor} still annihilates")]
    NotMinimal { divisor: UniPoly },
    #[error("certification failed for L({weight}); projection residuals {residuals:?}")]
    CertificationFailed { weight: String, residuals: Vec<String> },
    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),
    #[error("representation too large: {0}")]
    TooLarge(String),
    #[error("depth {depth} smaller than element degree {degree}")]
    DepthTooSmall { depth: usize, degree: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
