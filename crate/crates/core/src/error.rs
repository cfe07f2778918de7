use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("ill-defined morphism: source relator {relator} is not carried into the target relations")]
    IllDefined { relator: usize },

    #[error("denominator subgroup is not contained in the numerator")]
    NotContained,

    #[error("subgroups live in different parent groups")]
    ParentMismatch,

    #[error("element does not belong to the required subgroup")]
    NotAMember,

    #[error("degree {degree} lies outside the declared window")]
    OutOfWindow { degree: i64 },

    #[error("invalid complex at degree {degree}: {reason}")]
    InvalidComplex { degree: i64, reason: String },

    #[error("rows/columns not exact at bidegree ({i},{j}): {detail}")]
    HypothesisViolated { i: i64, j: i64, detail: String },

    #[error("diagram chase failed at bidegree ({i},{j}): {detail}")]
    InternalChaseFailure { i: i64, j: i64, detail: String },

    #[error("convention violation at bidegree ({i},{j}): {detail}")]
    ConventionViolation { i: i64, j: i64, detail: String },

    #[error("invariant factor {factor} does not divide the ring modulus {modulus}")]
    NotAModule { factor: BigInt, modulus: u64 },

    #[error("invalid modulus {0}")]
    InvalidModulus(u64),
}
