use thiserror::Error;

use crate::ga::Signature;

/// Failures reported by the kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),

    #[error("expected an element of {expected}, got {found}")]
    WrongAlgebra { expected: Signature, found: Signature },

    #[error("grade {grade} out of range for an algebra of dimension {n}")]
    GradeOutOfRange { grade: usize, n: usize },

    #[error("unsupported signature ({p},{q}): at most 6 generators")]
    TooManyGenerators { p: usize, q: usize },

    #[error("element is singular (condition estimate {0:.3e})")]
    Singular(f64),

    #[error("exponential series did not converge within {0} terms")]
    NoConvergence(usize),

    #[error("odd element has no image under the even subalgebra map")]
    OddInput,

    #[error("input has non-real coefficients (max imaginary part {0:.3e})")]
    NonReal(f64),

    #[error("expected a paravector, found grade {0} content")]
    NotParavector(usize),

    #[error("point at infinity: mu = 0")]
    PointAtInfinity,

    #[error("map is undefined at this point: denominator is singular")]
    Undefined,

    #[error("twistor carries no (point, ideal) provenance")]
    MissingProvenance,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed multivector JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
