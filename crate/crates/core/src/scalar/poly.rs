use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use super::rational::RationalField;
use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// A product of named variables with positive exponents, sorted by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by monomial with no zero coefficients,
/// so the derived order compares sorted term lists.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(name: &str) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(name), Rational::integer(1));
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The constant coefficient when the polynomial has degree 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::integer(0)),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }
}

impl Add<&Poly> for Poly {
    type Output = Poly;
    fn add(mut self, rhs: &Poly) -> Poly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Sub<&Poly> for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: &Poly) -> Poly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
        self
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2);
            }
        }
        out
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    /// Terms by descending degree, ascending monomial within a degree,
    /// e.g. `a*d - b*c` or `t^2 - 5*t + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c < &Rational::integer(0);
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar for Poly {
    type Context = RationalField;

    fn context(&self) -> RationalField {
        RationalField
    }

    fn zero_in(_: &RationalField) -> Self {
        Poly::zero()
    }

    fn one_in(_: &RationalField) -> Self {
        Poly::constant(Rational::integer(1))
    }

    fn from_bigint_in(ctx: &RationalField, n: &BigInt) -> Self {
        Poly::constant(Rational::from_bigint_in(ctx, n))
    }

    /// Accepts a rational constant or a bare variable name.
    fn parse_in(ctx: &RationalField, s: &str) -> Result<Self> {
        let s = s.trim();
        let is_ident = s
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if is_ident {
            Ok(Poly::var(s))
        } else {
            Rational::parse_in(ctx, s).map(Poly::constant)
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Only nonzero constants are units.
    fn inverse(&self) -> Result<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Ok(Poly::constant(c.inverse()?)),
            _ => Err(Error::NotInvertible {
                value: self.to_string(),
                context: "in Q[vars]".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_times_u() {
        let u = Poly::var("u");
        assert_eq!((u.clone() * &u).to_string(), "u^2");
    }

    #[test]
    fn determinant_shape() {
        let (a, b, c, d) = (
            Poly::var("a"),
            Poly::var("b"),
            Poly::var("c"),
            Poly::var("d"),
        );
        let det = a * &d - b * &c;
        assert_eq!(det.to_string(), "a*d - b*c");
    }

    #[test]
    fn cancellation_prunes_terms() {
        let x = Poly::var("x");
        assert!((x.clone() - &x).is_zero());
        assert_eq!(
            (x.clone() + &Poly::constant(Rational::new(1, 2))).to_string(),
            "x + 1/2"
        );
    }

    #[test]
    fn only_constants_invert() {
        assert!(Poly::var("x").inverse().is_err());
        let c = Poly::constant(Rational::integer(4));
        assert_eq!(c.inverse().unwrap(), Poly::constant(Rational::new(1, 4)));
        assert!(Poly::zero().inverse().is_err());
    }

    #[test]
    fn parse_variable_or_number() {
        assert_eq!(Poly::parse_in(&RationalField, "a").unwrap(), Poly::var("a"));
        assert_eq!(
            Poly::parse_in(&RationalField, "-3/6").unwrap(),
            Poly::constant(Rational::new(-1, 2))
        );
    }
}
