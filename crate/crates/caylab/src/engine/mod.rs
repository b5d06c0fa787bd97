//! Candidate maps at torus level: verification (target containment,
//! equivariance, dominance) and degree computation (structural projection
//! and brute-force fiber histograms), plus isogeny and product
//! composition.

mod candidate;
mod compose;
mod degree;

pub use candidate::{
    CheckMode, ElementCheck, EquivarianceReport, MapCandidate, Witness, SAMPLED_CHECK_POINTS,
    SAMPLED_CHECK_PRIMES,
};
pub use compose::{product_map, IsogenySpec};
pub use degree::{
    brute_force_degree, projection_degree, DegreeMethod, DegreeReport, ProjectionCenter,
    ProjectionSpec, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD, DEFAULT_SAMPLES,
};

use crate::field::FieldError;
use crate::poly::PolyError;
use crate::weyl::WeylError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("component count {0} does not match ambient dimension {1}")]
    ComponentCount(usize, usize),
    #[error("candidate lives over F_{have} but F_{want} was requested")]
    WrongField { have: u64, want: u64 },
    #[error("enumeration needs {needed} points, over the cap of {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("isogeny rank {0} does not match pair rank {1}")]
    RankMismatch(usize, usize),
    #[error("isogeny exponent matrix is singular")]
    SingularIsogeny,
    #[error("isogeny does not intertwine the Weyl action (generator {0})")]
    NotIntertwining(usize),
    #[error("degenerate projection data: {0}")]
    DegenerateSpec(String),
    #[error("projection samples stayed tied after raising the sample count: {0}")]
    Unstable(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
