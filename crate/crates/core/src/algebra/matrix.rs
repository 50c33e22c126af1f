use std::fmt;

use super::{Algebra, Monoid, Semigroup};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A square `n x n` matrix, `n >= 1`, stored row-major.
///
/// Ordered by size, then lexicographically on the row-major entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    /// Builds a matrix from its rows; errors unless they form a nonempty square.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Parse(format!(
                "row of length {} in a {n}x{n} matrix",
                bad.len()
            )));
        }
        let entries: Vec<S> = rows.into_iter().flatten().collect();
        for e in &entries[1..] {
            entries[0].compatible(e)?;
        }
        Ok(Matrix { n, entries })
    }

    /// Panics on a non-square or empty input; meant for literals in tests.
    pub fn from_i64_rows(ctx: &S::Context, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| S::from_i64_in(ctx, v)).collect())
                .collect(),
        )
        .expect("square integer matrix")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(n >= 1, "matrices are at least 1x1");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Matrix { n, entries }
    }

    pub fn identity(ctx: &S::Context, n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                S::one_in(ctx)
            } else {
                S::zero_in(ctx)
            }
        })
    }

    pub fn zero(ctx: &S::Context, n: usize) -> Self {
        Self::from_fn(n, |_, _| S::zero_in(ctx))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.n)
    }

    pub fn context(&self) -> S::Context {
        self.entries[0].context()
    }

    pub fn trace(&self) -> S {
        (1..self.n).fold(self.get(0, 0).clone(), |acc, i| acc + self.get(i, i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        self.entries[0].compatible(&rhs.entries[0])
    }
}

impl<S: Scalar> Semigroup for Matrix<S> {
    fn try_product(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let n = self.n;
        let zero = S::zero_in(&self.context());
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero.clone();
                for k in 0..n {
                    acc = acc + &(self.entries[i * n + k].clone() * &rhs.entries[k * n + j]);
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { n, entries })
    }
}

impl<S: Scalar> Monoid for Matrix<S> {
    fn unit_like(&self) -> Self {
        Self::identity(&self.context(), self.n)
    }
}

impl<S: Scalar> Algebra<S> for Matrix<S> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.context(), self.n)
    }

    fn try_sum(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    fn scale(&self, a: &S) -> Self {
        self.map(|e| a.clone() * e)
    }

    fn negated(&self) -> Self {
        self.map(|e| -e.clone())
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    /// `[[1,2],[3,4]]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
