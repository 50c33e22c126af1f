//! Semigroups and algebras the multiset ring and central functions act on.
//!
//! * [`Matrix`]: square matrices over a [`Scalar`], a unital algebra.
//! * [`Word`]: nonempty words in the free semigroup; no unit, no addition.
//! * [`GroupElement`]: the group algebra of a finite group given by its
//!   multiplication table.
//!
//! Every backend carries a strict total order, used to canonicalize multisets.

mod group;
mod hom;
mod matrix;
mod word;

pub use group::{GroupElement, GroupTable};
pub use hom::SemigroupHom;
pub use matrix::Matrix;
pub use word::{Letter, Word};

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::Result;
use crate::scalar::Scalar;

/// An associative multiplication with a strict total order on elements.
pub trait Semigroup: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + 'static {
    /// The product `self * rhs`, or an error when the operands are incompatible.
    fn try_product(&self, rhs: &Self) -> Result<Self>;

    /// Panics when the operands are incompatible.
    fn product(&self, rhs: &Self) -> Self {
        self.try_product(rhs)
            .unwrap_or_else(|e| panic!("incompatible operands: {e}"))
    }
}

/// A semigroup with a two-sided unit.
pub trait Monoid: Semigroup {
    /// The unit of the structure `self` lives in (same dimension, group, ring).
    fn unit_like(&self) -> Self;
}

/// A unital associative algebra over `S`.
pub trait Algebra<S: Scalar>: Monoid {
    fn zero_like(&self) -> Self;

    fn try_sum(&self, rhs: &Self) -> Result<Self>;

    fn sum(&self, rhs: &Self) -> Self {
        self.try_sum(rhs)
            .unwrap_or_else(|e| panic!("incompatible operands: {e}"))
    }

    fn scale(&self, a: &S) -> Self;

    fn negated(&self) -> Self;

    fn is_zero(&self) -> bool;

    /// The scalar `a` as `a * 1`.
    fn scalar_like(&self, a: &S) -> Self {
        self.unit_like().scale(a)
    }
}
