//! Exact multiset rings over semigroups, the multilinear forms `f^[n]`
//! attached to a central function, and the determinant built from a
//! pseudocharacter, together with a seeded verification harness.
//!
//! All arithmetic is exact. The core is generic over the base ring through
//! [`scalar::Scalar`] and over the algebra through [`algebra::Semigroup`];
//! the aliases below name the concrete instantiations used by the CLI.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod multiset;
mod perm;
pub mod pseudochar;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};

/// Square matrices over the rationals.
pub type RationalMatrix = algebra::Matrix<scalar::Rational>;
/// Square matrices over `Z/m`.
pub type ModMatrix = algebra::Matrix<scalar::ModInt>;
/// Square matrices with polynomial entries, for symbolic computations.
pub type PolyMatrix = algebra::Matrix<scalar::Poly>;
/// Rational group algebra of a finite group.
pub type RationalGroupElement = algebra::GroupElement<scalar::Rational>;
/// The multiset ring of the free semigroup.
pub type WordSum = multiset::FormalSum<algebra::Word>;
