//! Exact scalar backends for the base ring.
//!
//! Everything downstream is generic over [`Scalar`]. Three backends are
//! provided: arbitrary-precision rationals ([`Rational`]), residues modulo a
//! runtime modulus ([`ModInt`]) and sparse multivariate polynomials with
//! rational coefficients ([`Poly`]). There is no floating point anywhere.
//!
//! The modulus of a residue is only known at runtime, so constants are built
//! from a [`Scalar::Context`] rather than from `num_traits::Zero::zero()`.

mod modular;
mod poly;
mod rational;

pub use modular::{ModInt, Modulus};
pub use poly::{Monomial, Poly};
pub use rational::{Rational, RationalField};

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// An element of a commutative unital ring with exact arithmetic.
///
/// Operator impls panic on incompatible operands (residues with different
/// moduli); the `checked_*` methods report that as an error instead.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Data needed to build constants (the modulus for residues).
    type Context: Clone + Debug + Display + PartialEq + Send + Sync + 'static;

    fn context(&self) -> Self::Context;

    fn zero_in(ctx: &Self::Context) -> Self;

    fn one_in(ctx: &Self::Context) -> Self;

    fn from_bigint_in(ctx: &Self::Context, n: &BigInt) -> Self;

    fn from_i64_in(ctx: &Self::Context, n: i64) -> Self {
        Self::from_bigint_in(ctx, &BigInt::from(n))
    }

    /// Parses an integer or a fraction `p/q`.
    fn parse_in(ctx: &Self::Context, s: &str) -> Result<Self>;

    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.context())
    }

    fn inverse(&self) -> Result<Self>;

    /// Errors when the two operands cannot be combined.
    fn compatible(&self, _other: &Self) -> Result<()> {
        Ok(())
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.clone() + other)
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.clone() - other)
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.clone() * other)
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one_in(&self.context());
        for _ in 0..exp {
            acc = acc * self;
        }
        acc
    }
}

/// `d!` as a scalar.
pub fn factorial<S: Scalar>(ctx: &S::Context, d: usize) -> S {
    (1..=d as i64).fold(S::one_in(ctx), |acc, k| acc * S::from_i64_in(ctx, k))
}

/// `(d!)^{-1}`, or [`Error::FactorialNotInvertible`] when `d!` is a zero
/// divisor of the base ring.
pub fn inverse_of_factorial<S: Scalar>(ctx: &S::Context, d: usize) -> Result<S> {
    factorial::<S>(ctx, d)
        .inverse()
        .map_err(|_| Error::FactorialNotInvertible {
            d,
            context: ctx.to_string(),
        })
}

/// Binomial coefficient as an integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_inverse_rational() {
        let inv: Rational = inverse_of_factorial(&RationalField, 3).unwrap();
        assert_eq!(inv, Rational::parse_in(&RationalField, "1/6").unwrap());
    }

    #[test]
    fn factorial_inverse_mod_7() {
        let m = Modulus::new(7).unwrap();
        let inv: ModInt = inverse_of_factorial(&m, 3).unwrap();
        assert_eq!(inv, ModInt::new(6, m));
    }

    #[test]
    fn factorial_inverse_mod_6_fails() {
        let m = Modulus::new(6).unwrap();
        let err = inverse_of_factorial::<ModInt>(&m, 3).unwrap_err();
        assert_eq!(err.to_string(), "3! not invertible mod 6");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
    }
}
