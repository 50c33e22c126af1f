use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::path::Path;
use std::sync::Arc;

use super::{Algebra, Monoid, Semigroup};
use crate::error::{Error, Result};
use crate::perm::permutations;
use crate::scalar::Scalar;

/// Largest group order the table loader accepts.
pub const MAX_GROUP_ORDER: usize = 24;

/// Multiplication table of a finite group on `{g0, ..., g(n-1)}`; `g0` is
/// the identity and entry `(i, j)` is the index of `gi * gj`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
}

impl GroupTable {
    /// Validates identity, closure, associativity and inverses.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidGroupTable(msg));
        if order == 0 || order > MAX_GROUP_ORDER {
            return bad(format!("order {order} outside 1..={MAX_GROUP_ORDER}"));
        }
        if table.len() != order * order {
            return bad(format!(
                "expected {} entries, got {}",
                order * order,
                table.len()
            ));
        }
        if let Some(&e) = table.iter().find(|&&e| e >= order) {
            return bad(format!("index {e} out of range"));
        }
        let g = GroupTable { order, table };
        for i in 0..order {
            if g.mul(0, i) != i || g.mul(i, 0) != i {
                return bad(format!("g0 is not an identity for g{i}"));
            }
            if !(0..order).any(|j| g.mul(i, j) == 0 && g.mul(j, i) == 0) {
                return bad(format!("g{i} has no inverse"));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = g.mul(a, b);
                for c in 0..order {
                    if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                        return bad(format!("not associative at (g{a}, g{b}, g{c})"));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Parses `order n` followed by `n` rows of `n` indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidGroupTable("empty file".into()))?;
        let order: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["order", n] => n
                .parse()
                .map_err(|_| Error::InvalidGroupTable(format!("bad order `{n}`")))?,
            _ => {
                return Err(Error::InvalidGroupTable(format!(
                    "expected `order n`, got `{header}`"
                )))
            }
        };
        let mut table = Vec::with_capacity(order * order);
        for (row, line) in lines.enumerate() {
            let entries = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidGroupTable(format!("bad index `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if entries.len() != order {
                return Err(Error::InvalidGroupTable(format!(
                    "row {row} has {} entries, expected {order}",
                    entries.len()
                )));
            }
            table.extend(entries);
        }
        Self::new(order, table)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidGroupTable(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Inverse of [`GroupTable::parse`].
    pub fn render(&self) -> String {
        let mut out = format!("order {}\n", self.order);
        for row in self.table.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Cyclic group `Z/n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(n, (0..n * n).map(|k| (k / n + k % n) % n).collect())
    }

    /// Symmetric group on `n` points, elements listed as permutations in
    /// lexicographic order (so `g0` is the identity). `gi * gj` applies `gj`
    /// first. Returns the permutations alongside the table.
    pub fn symmetric(n: usize) -> Result<(Self, Vec<Vec<usize>>)> {
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let mut table = Vec::with_capacity(perms.len() * perms.len());
        for a in &perms {
            for b in &perms {
                let ab: Vec<usize> = (0..n).map(|k| a[b[k]]).collect();
                table.push(index_of(&ab));
            }
        }
        let g = Self::new(perms.len(), table)?;
        Ok((g, perms))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == 0)
            .expect("validated group")
    }
}

/// An element `sum_g a_g g` of the group algebra, stored densely.
#[derive(Clone)]
pub struct GroupElement<S> {
    group: Arc<GroupTable>,
    coeffs: Vec<S>,
}

impl<S: Scalar> GroupElement<S> {
    pub fn from_coeffs(group: Arc<GroupTable>, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidGroupTable(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        Ok(GroupElement { group, coeffs })
    }

    /// The basis element `g_index`.
    pub fn basis(group: Arc<GroupTable>, ctx: &S::Context, index: usize) -> Self {
        let coeffs = (0..group.order())
            .map(|k| {
                if k == index {
                    S::one_in(ctx)
                } else {
                    S::zero_in(ctx)
                }
            })
            .collect();
        GroupElement { group, coeffs }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coefficient(&self, index: usize) -> &S {
        &self.coeffs[index]
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &rhs.group) && self.group != rhs.group {
            return Err(Error::GroupMismatch);
        }
        self.coeffs[0].compatible(&rhs.coeffs[0])
    }
}

impl<S: Scalar> PartialEq for GroupElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<S: Scalar> Eq for GroupElement<S> {}

impl<S: Scalar> PartialOrd for GroupElement<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Scalar> Ord for GroupElement<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        let groups = if Arc::ptr_eq(&self.group, &other.group) {
            Ordering::Equal
        } else {
            self.group.cmp(&other.group)
        };
        groups.then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<S: Scalar> Hash for GroupElement<S> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl<S: Scalar> Semigroup for GroupElement<S> {
    fn try_product(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let n = self.group.order();
        let mut coeffs = vec![S::zero_in(&self.coeffs[0].context()); n];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let ab = self.group.mul(a, b);
                coeffs[ab] = coeffs[ab].clone() + &(x.clone() * y);
            }
        }
        Ok(GroupElement {
            group: self.group.clone(),
            coeffs,
        })
    }
}

impl<S: Scalar> Monoid for GroupElement<S> {
    fn unit_like(&self) -> Self {
        Self::basis(self.group.clone(), &self.coeffs[0].context(), 0)
    }
}

impl<S: Scalar> Algebra<S> for GroupElement<S> {
    fn zero_like(&self) -> Self {
        let z = S::zero_in(&self.coeffs[0].context());
        GroupElement {
            group: self.group.clone(),
            coeffs: vec![z; self.group.order()],
        }
    }

    fn try_sum(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        Ok(GroupElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    fn scale(&self, a: &S) -> Self {
        GroupElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| a.clone() * c).collect(),
        }
    }

    fn negated(&self) -> Self {
        GroupElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

impl<S: Scalar> fmt::Display for GroupElement<S> {
    /// `2*g0 + 1*g3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*g{k}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for GroupElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
