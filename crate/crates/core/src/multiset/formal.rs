use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{partial_bijection_count, product_of_sequences, Multiset};
use crate::algebra::{Semigroup, SemigroupHom, Word};
use crate::error::{Error, Result};

/// Default cap on the number of intermediate multisets a product may build.
pub const DEFAULT_TERM_BUDGET: u128 = 10_000_000;

/// An element of `M(H)`: a finite integer combination of multisets. No
/// stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<T> {
    terms: BTreeMap<Multiset<T>, BigInt>,
}

impl<T: Semigroup> FormalSum<T> {
    pub fn zero() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1 * {}`.
    pub fn unit() -> Self {
        Multiset::empty().into()
    }

    pub fn term(coefficient: impl Into<BigInt>, m: Multiset<T>) -> Self {
        let mut s = Self::zero();
        s.add_multiset(m, coefficient);
        s
    }

    pub fn add_multiset(&mut self, m: Multiset<T>, coefficient: impl Into<BigInt>) {
        let c = coefficient.into();
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn coefficient(&self, m: &Multiset<T>) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multiset<T>, &BigInt)> {
        self.terms.iter()
    }

    /// Number of terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, a: &BigInt) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        FormalSum {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * a)).collect(),
        }
    }

    /// Number of multisets the product `self × rhs` would enumerate.
    pub fn predicted_product_terms(&self, rhs: &Self) -> u128 {
        let mut total: u128 = 0;
        for x in self.terms.keys() {
            for y in rhs.terms.keys() {
                total = total.saturating_add(partial_bijection_count(x.len(), y.len()));
            }
        }
        total
    }

    /// `self × rhs` with the default term budget.
    pub fn product(&self, rhs: &Self) -> Result<Self> {
        self.product_with_budget(rhs, DEFAULT_TERM_BUDGET)
    }

    /// Bilinear extension of the multiset product. Refuses to start when the
    /// predicted number of intermediate multisets exceeds `budget`.
    pub fn product_with_budget(&self, rhs: &Self, budget: u128) -> Result<Self> {
        let predicted = self.predicted_product_terms(rhs);
        if predicted > budget {
            return Err(Error::BudgetExceeded { predicted, budget });
        }
        let mut out = Self::zero();
        for (x, a) in &self.terms {
            for (y, b) in &rhs.terms {
                let ab = a * b;
                for (m, c) in product_of_sequences(x.entries(), y.entries())?.terms {
                    out.add_multiset(m, c * &ab);
                }
            }
        }
        Ok(out)
    }

    /// Applies `f` to every entry, re-canonicalizing and merging collisions.
    pub fn try_map<U: Semigroup>(
        &self,
        mut f: impl FnMut(&T) -> Result<U>,
    ) -> Result<FormalSum<U>> {
        let mut out = FormalSum::zero();
        for (m, c) in &self.terms {
            let mapped = m.entries().iter().map(&mut f).collect::<Result<Vec<_>>>()?;
            out.add_multiset(Multiset::new(mapped), c.clone());
        }
        Ok(out)
    }
}

/// `M(psi)`: applies a free-semigroup homomorphism to every entry.
pub fn map_formal<U: Semigroup>(
    psi: &SemigroupHom<U>,
    s: &FormalSum<Word>,
) -> Result<FormalSum<U>> {
    s.try_map(|w| psi.apply(w))
}

impl<T: Semigroup> From<Multiset<T>> for FormalSum<T> {
    fn from(m: Multiset<T>) -> Self {
        FormalSum::term(BigInt::one(), m)
    }
}

impl<T: Semigroup> Add<&FormalSum<T>> for FormalSum<T> {
    type Output = FormalSum<T>;
    fn add(mut self, rhs: &FormalSum<T>) -> FormalSum<T> {
        for (m, c) in &rhs.terms {
            self.add_multiset(m.clone(), c.clone());
        }
        self
    }
}

impl<T: Semigroup> Sub<&FormalSum<T>> for FormalSum<T> {
    type Output = FormalSum<T>;
    fn sub(mut self, rhs: &FormalSum<T>) -> FormalSum<T> {
        for (m, c) in &rhs.terms {
            self.add_multiset(m.clone(), -c.clone());
        }
        self
    }
}

impl<T: Semigroup> Neg for FormalSum<T> {
    type Output = FormalSum<T>;
    fn neg(self) -> FormalSum<T> {
        FormalSum {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<T: Semigroup> fmt::Display for FormalSum<T> {
    /// Terms sorted by decreasing cardinality, then by rendered entries:
    /// `1*{x1,x2,y1} + 1*{x1*y1,x2} + 1*{x1,x2*y1}`. The zero sum is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut rendered: Vec<(Reverse<usize>, String, &BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (Reverse(m.len()), m.render_entries(), c))
            .collect();
        rendered.sort();
        for (k, (_, entries, c)) in rendered.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{{{entries}}}")?;
        }
        Ok(())
    }
}

impl<T: Semigroup> fmt::Debug for FormalSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Letter, Matrix};
    use crate::scalar::{Rational, RationalField};

    fn ms(s: &[&str]) -> Multiset<Word> {
        s.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn bilinear_scaling() {
        let s = FormalSum::term(2, ms(&["x1"]));
        let t = FormalSum::term(3, ms(&["y1"]));
        assert_eq!(s.product(&t).unwrap().to_string(), "6*{x1,y1} + 6*{x1*y1}");
    }

    #[test]
    fn unit_on_both_sides() {
        let s = FormalSum::term(2, ms(&["x1"])) + &FormalSum::term(-1, ms(&["x2", "y1"]));
        assert_eq!(s.product(&FormalSum::unit()).unwrap(), s);
        assert_eq!(FormalSum::unit().product(&s).unwrap(), s);
    }

    #[test]
    fn difference_annihilates() {
        let s = FormalSum::term(2, ms(&["x1", "y1"]));
        let t = FormalSum::from(ms(&["z1"]));
        let zero = (s.clone() - &s).product(&t).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.to_string(), "0");
    }

    #[test]
    fn budget_refuses_large_products() {
        let big = ms(&["x1", "x2", "x3", "x4", "x5", "x6"]);
        let s = FormalSum::from(big);
        let err = s.product_with_budget(&s, 10_000).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                predicted: 13_327,
                budget: 10_000
            }
        );
        assert!(s.product_with_budget(&s, 13_327).is_ok());
    }

    #[test]
    fn map_merges_collisions() {
        let m = Matrix::<Rational>::from_i64_rows(&RationalField, &[&[1, 2], &[3, 4]]);
        let psi = SemigroupHom::new([
            (Letter::new('x', 1), m.clone()),
            (Letter::new('x', 2), m.clone()),
        ]);
        let s = FormalSum::from(ms(&["x1"])) + &FormalSum::from(ms(&["x2"]));
        let mapped = map_formal(&psi, &s).unwrap();
        assert_eq!(mapped, FormalSum::term(2, Multiset::singleton(m)));
    }

    #[test]
    fn map_of_unit_is_unit() {
        let psi: SemigroupHom<Word> = SemigroupHom::new([]);
        assert_eq!(
            map_formal(&psi, &FormalSum::unit()).unwrap(),
            FormalSum::unit()
        );
    }

    #[test]
    fn map_unknown_letter() {
        let psi: SemigroupHom<Word> = SemigroupHom::new([]);
        let err = map_formal(&psi, &FormalSum::from(ms(&["q1"]))).unwrap_err();
        assert_eq!(err, Error::UnknownLetter("q1".into()));
    }

    #[test]
    fn negative_coefficients_render() {
        let s = FormalSum::term(-2, ms(&["x1"]));
        assert_eq!(s.to_string(), "-2*{x1}");
    }
}
