//! Sparse multivariate polynomials and rational functions over an exact
//! field: arithmetic, substitution, derivatives, univariate restriction,
//! squarefree degree, and resultants.
//!
//! Rational functions are kept as unreduced numerator/denominator pairs;
//! equality is decided by exact cross-multiplication. An expansion guard
//! aborts identity checks past [`MAX_TERMS`] terms so callers can fall
//! back to sampled verification.

mod mono;
mod multipoly;
mod ratfunc;
mod resultant;
mod unipoly;

pub use mono::{Mono, MAX_EXPONENT, MAX_VARS};
pub use multipoly::MultiPoly;
pub use ratfunc::RatFunc;
pub use resultant::resultant;
pub use unipoly::{squarefree_degree, UniPoly};

use crate::field::FieldError;
use thiserror::Error;

/// Term-count guard for symbolic expansion.
pub const MAX_TERMS: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands live over different coefficient fields")]
    FieldMismatch,
    #[error("operands have different variable counts ({0} vs {1})")]
    ArityMismatch(usize, usize),
    #[error("at most {} variables are supported, got {0}", MAX_VARS)]
    TooManyVariables(usize),
    #[error("per-variable exponent exceeds {}", MAX_EXPONENT)]
    ExponentOverflow,
    #[error("expansion exceeded {} terms; use sampled verification", MAX_TERMS)]
    ExpressionTooLarge,
    #[error("substituted component has a zero denominator polynomial")]
    ZeroDenominator,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("input is constant in the elimination variable")]
    DegreeZero,
    #[error("field characteristic {0} does not exceed the polynomial degree {1}")]
    CharacteristicTooSmall(u64, usize),
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error(transparent)]
    Field(#[from] FieldError),
}
