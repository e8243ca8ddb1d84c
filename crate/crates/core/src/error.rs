use thiserror::Error;

/// Every failure the calculator can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("non-exact polynomial division: remainder {remainder}")]
    NonExactDivision { remainder: String },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    #[error("invalid genus {0}: {1}")]
    InvalidGenus(u32, &'static str),

    #[error("invalid degree {0}: gcd(d, 3) must be 1")]
    InvalidDegree(i64),

    #[error("invalid chamber: e = {e}, i = {i} (chambers are 0..={max})")]
    InvalidChamber { e: u32, i: u32, max: u32 },

    #[error("invalid pair degree e = {0} (must be at least 2)")]
    InvalidPairDegree(u32),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("stability parameter {sigma} lies on the wall sigma_{index}")]
    OnWall { sigma: String, index: u32 },

    #[error("stability parameter {sigma} outside (0, {half_e}]")]
    OutOfRange { sigma: String, half_e: String },

    #[error("chamber mismatch for {kind} k = {k}: closed form gives {expected}, stability parameter lies in {actual}")]
    ChamberMismatch {
        kind: &'static str,
        k: u32,
        expected: u32,
        actual: u32,
    },

    #[error("negative coefficient in a class expected to be effective: {0}")]
    NotEffective(String),

    #[error("jacobian cofactor check failed: jac * quotient != full class")]
    QuotientMismatch,

    #[error("malformed class json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
