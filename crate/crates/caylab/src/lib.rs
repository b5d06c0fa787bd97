//! Exact computational algebra for equivariant rational maps between a
//! maximal torus and its Lie algebra: construction, verification, and
//! degree computation.
//!
//! The crate is organized bottom-up:
//! - [`field`]: exact rationals, certified prime fields, roots of unity,
//!   seeded sampling;
//! - [`poly`]: sparse multivariate polynomials, rational functions,
//!   univariate tools, resultants;
//! - [`weyl`]: torus/Lie-algebra pairs with signed-permutation Weyl
//!   actions;
//! - [`engine`]: candidate maps, verification, and degree computation;
//! - [`matrix`], [`constructions`]: the concrete map families and the
//!   known-degree table.

pub mod constructions;
pub mod engine;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod weyl;
