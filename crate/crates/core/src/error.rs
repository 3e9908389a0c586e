use thiserror::Error;

/// Every failure the workbench can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("elements belong to different Lie algebras")]
    AlgebraMismatch,
    #[error("subspace is not invariant under the given map")]
    NotInvariant,
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("linear map is not invertible")]
    NotInvertible,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("ideal count exceeded the limit of {0}")]
    IdealCountExceeded(usize),
    #[error("infinite family of ideals detected: {0}")]
    InfiniteFamilyDetected(String),
    #[error("input does not classify as unitarizable")]
    NotUnitarizableInput,
    #[error("matrix does not lie in the span of the basis matrices")]
    ExpansionFailed,
    #[error("SL(2) block has determinant {0}, expected 1")]
    BadDeterminant(String),
    #[error("a3 must be strictly positive, got {0}")]
    NonPositiveA3(String),
    #[error("denominator is numerically singular (|det| = {0:e})")]
    SingularDenominator(f64),
    #[error("image leaves the V-pattern (|(1,2) entry| = {0:e})")]
    PatternViolation(f64),
    #[error("point is outside the Siegel domain")]
    OutsideDomain,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
