//! The multiset ring `M(H)` of a semigroup `H`.
//!
//! Elements of `M(H)` are integer combinations of finite multisets of
//! elements of `H` ([`FormalSum`]). Two multisets multiply by summing, over
//! every partial bijection between their entries, the multiset obtained by
//! multiplying matched entries and keeping the unmatched ones. The empty
//! multiset is the unit.

mod bijection;
mod formal;

pub use bijection::{
    for_each_partial_bijection, partial_bijection_count, partial_bijections, PartialBijection,
};
pub use formal::{map_formal, FormalSum, DEFAULT_TERM_BUDGET};

use std::fmt;

use crate::algebra::Semigroup;
use crate::error::{Error, Result};

/// A finite multiset of semigroup elements, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset<T> {
    entries: Vec<T>,
}

impl<T: Semigroup> Multiset<T> {
    pub fn new(mut entries: Vec<T>) -> Self {
        entries.sort_unstable();
        Multiset { entries }
    }

    /// The empty multiset, the unit of `M(H)`.
    pub fn empty() -> Self {
        Multiset {
            entries: Vec::new(),
        }
    }

    pub fn singleton(x: T) -> Self {
        Multiset { entries: vec![x] }
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries rendered and sorted as strings, joined with commas.
    pub fn render_entries(&self) -> String {
        let mut parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        parts.sort();
        parts.join(",")
    }
}

impl<T: Semigroup> fmt::Display for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.render_entries())
    }
}

impl<T: Semigroup> fmt::Debug for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Semigroup> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Multiset::new(iter.into_iter().collect())
    }
}

/// The multiset `x ×_alpha y`: unmatched entries of both sides plus the
/// products `x_i y_alpha(i)`. Indices refer to the sorted entry order.
pub fn product_along<T: Semigroup>(
    x: &Multiset<T>,
    y: &Multiset<T>,
    alpha: &PartialBijection,
) -> Result<Multiset<T>> {
    if alpha.source_size() != x.len() || alpha.target_size() != y.len() {
        return Err(Error::BijectionSize {
            bijection: alpha.to_string(),
            n: x.len(),
            m: y.len(),
        });
    }
    let mut used_x = vec![false; x.len()];
    let mut used_y = vec![false; y.len()];
    let mut out = Vec::with_capacity(x.len() + y.len() - alpha.rank());
    for &(i, j) in alpha.pairs() {
        used_x[i] = true;
        used_y[j] = true;
        out.push(x.entries[i].try_product(&y.entries[j])?);
    }
    out.extend(unused(&x.entries, &used_x));
    out.extend(unused(&y.entries, &used_y));
    Ok(Multiset::new(out))
}

fn unused<'a, T: Clone>(entries: &'a [T], used: &'a [bool]) -> impl Iterator<Item = T> + 'a {
    entries
        .iter()
        .zip(used)
        .filter(|(_, &u)| !u)
        .map(|(e, _)| e.clone())
}

/// `x × y` for two multisets.
pub fn multiset_product<T: Semigroup>(x: &Multiset<T>, y: &Multiset<T>) -> Result<FormalSum<T>> {
    product_of_sequences(&x.entries, &y.entries)
}

/// `x × y` for multisets given as sequences in arbitrary order. The result
/// does not depend on the order.
pub fn product_of_sequences<T: Semigroup>(xs: &[T], ys: &[T]) -> Result<FormalSum<T>> {
    let (n, m) = (xs.len(), ys.len());
    let mut products = Vec::with_capacity(n * m);
    for x in xs {
        for y in ys {
            products.push(x.try_product(y)?);
        }
    }
    let mut sum = FormalSum::zero();
    let mut used_x = vec![false; n];
    let mut used_y = vec![false; m];
    for_each_partial_bijection(n, m, |pairs| {
        used_x.iter_mut().for_each(|u| *u = false);
        used_y.iter_mut().for_each(|u| *u = false);
        let mut out = Vec::with_capacity(n + m - pairs.len());
        for &(i, j) in pairs {
            used_x[i] = true;
            used_y[j] = true;
            out.push(products[i * m + j].clone());
        }
        out.extend(unused(xs, &used_x));
        out.extend(unused(ys, &used_y));
        sum.add_multiset(Multiset::new(out), 1);
    });
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Letter, Word};

    fn ms(s: &[&str]) -> Multiset<Word> {
        s.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn along_empty_bijection_is_disjoint_union() {
        let x = ms(&["x1", "x2"]);
        let y = ms(&["y1", "y2", "y3"]);
        let got = product_along(&x, &y, &PartialBijection::empty(2, 3)).unwrap();
        assert_eq!(got, ms(&["x1", "x2", "y1", "y2", "y3"]));
    }

    #[test]
    fn along_single_pair() {
        let x = ms(&["x1", "x2"]);
        let y = ms(&["y1"]);
        let alpha = PartialBijection::new(2, 1, vec![(0, 0)]).unwrap();
        assert_eq!(product_along(&x, &y, &alpha).unwrap(), ms(&["x1*y1", "x2"]));
    }

    #[test]
    fn along_crossed_pairs() {
        let x = ms(&["x1", "x2"]);
        let z = ms(&["z1", "z2"]);
        let alpha = PartialBijection::new(2, 2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            product_along(&x, &z, &alpha).unwrap(),
            ms(&["x1*z2", "x2*z1"])
        );
    }

    #[test]
    fn along_size_mismatch() {
        let x = ms(&["x1"]);
        let err = product_along(&x, &x, &PartialBijection::empty(2, 1)).unwrap_err();
        assert!(matches!(err, Error::BijectionSize { n: 1, m: 1, .. }));
    }

    #[test]
    fn cardinality_of_product_along() {
        let x = ms(&["x1", "x2", "x3"]);
        let y = ms(&["y1", "y2"]);
        for alpha in partial_bijections(3, 2) {
            let p = product_along(&x, &y, &alpha).unwrap();
            assert_eq!(p.len(), 3 + 2 - alpha.rank());
        }
    }

    #[test]
    fn worked_example_two_by_one() {
        let got = multiset_product(&ms(&["x1", "x2"]), &ms(&["y1"])).unwrap();
        assert_eq!(
            got.to_string(),
            "1*{x1,x2,y1} + 1*{x1*y1,x2} + 1*{x1,x2*y1}"
        );
    }

    #[test]
    fn worked_example_two_by_two() {
        let got = multiset_product(&ms(&["x1", "x2"]), &ms(&["z1", "z2"])).unwrap();
        let mut expected = FormalSum::zero();
        for t in [
            &["x1", "x2", "z1", "z2"][..],
            &["x1*z1", "x2", "z2"],
            &["x1", "x2*z1", "z2"],
            &["x1*z2", "x2", "z1"],
            &["x1", "x2*z2", "z1"],
            &["x1*z1", "x2*z2"],
            &["x1*z2", "x2*z1"],
        ] {
            expected.add_multiset(ms(t), 1);
        }
        assert_eq!(got, expected);
    }

    #[test]
    fn empty_multiset_is_the_unit() {
        let x = ms(&["x1", "x2"]);
        let e = Multiset::empty();
        assert_eq!(
            multiset_product(&x, &e).unwrap(),
            FormalSum::from(x.clone())
        );
        assert_eq!(multiset_product(&e, &x).unwrap(), FormalSum::from(x));
    }

    #[test]
    fn repeated_entries_produce_multiplicities() {
        // {x1} × {x1}: empty match gives {x1,x1}, one match gives {x1*x1}
        let x = Multiset::singleton(Word::letter(Letter::new('x', 1)));
        let got = multiset_product(&x, &x).unwrap();
        assert_eq!(got.to_string(), "1*{x1,x1} + 1*{x1*x1}");
        // {x1,x1} × {y1}: two matchings give the same multiset
        let got = multiset_product(&ms(&["x1", "x1"]), &ms(&["y1"])).unwrap();
        assert_eq!(got.coefficient(&ms(&["x1", "x1*y1"])), 2.into());
    }
}
