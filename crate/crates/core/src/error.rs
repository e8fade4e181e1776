use thiserror::Error;

use crate::space::CausalClass;

/// Errors shared by every layer of the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector is not future-pointing causal (classified as {class:?})")]
    NotCausal { class: CausalClass },

    #[error("vector outside the margin cone: dist/norm = {ratio:.6e}, required >= {margin:.6e}")]
    OutsideMarginCone { ratio: f64, margin: f64 },

    #[error("conformal factor is not uniformly positive: c0 = {c0} must exceed the amplitude sum {amp_sum}")]
    FactorNotPositive { c0: f64, amp_sum: f64 },

    #[error("lattice basis is singular")]
    SingularBasis,

    #[error("covector is not interior to the dual cone: alpha(v) = {value:.6e} at a cone direction")]
    NotInteriorDual { value: f64 },

    #[error("bisection bracket failure: {0}")]
    BracketFailure(String),

    #[error("solver did not converge: {0}")]
    NonConverged(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
