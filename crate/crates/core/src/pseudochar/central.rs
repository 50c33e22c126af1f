use std::fmt;
use std::sync::Arc;

use crate::algebra::{GroupElement, GroupTable, Matrix, Monoid, Semigroup, Word};
use crate::error::{Error, Result};
use crate::scalar::{inverse_of_factorial, Poly, RationalField, Scalar};

/// Argument-count limits for the expensive evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for `f^[n]` by recursion.
    pub recursion: usize,
    /// Largest `n` for the permutation-sum oracle and the degree-`d` formula.
    pub oracle: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            recursion: 8,
            oracle: 7,
        }
    }
}

type Evaluator<T, S> = Arc<dyn Fn(&T) -> S + Send + Sync>;

/// A function `f: R -> A`, assumed central (`f(xy) = f(yx)`), optionally
/// with a declared dimension `d`.
///
/// The memoized evaluation of `f^[n]` relies on centrality. Functions built
/// with [`CentralFunction::non_central`] are evaluated by plain recursion
/// instead and exist for negative controls.
pub struct CentralFunction<T, S: Scalar> {
    name: String,
    eval: Evaluator<T, S>,
    ctx: S::Context,
    unit: Option<T>,
    dimension: Option<usize>,
    central: bool,
    caps: Caps,
}

impl<T: Clone, S: Scalar> Clone for CentralFunction<T, S> {
    fn clone(&self) -> Self {
        CentralFunction {
            name: self.name.clone(),
            eval: self.eval.clone(),
            ctx: self.ctx.clone(),
            unit: self.unit.clone(),
            dimension: self.dimension,
            central: self.central,
            caps: self.caps,
        }
    }
}

impl<T, S: Scalar> fmt::Debug for CentralFunction<T, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CentralFunction")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("central", &self.central)
            .finish()
    }
}

impl<T, S: Scalar> CentralFunction<T, S> {
    pub fn new(
        name: impl Into<String>,
        ctx: S::Context,
        eval: impl Fn(&T) -> S + Send + Sync + 'static,
    ) -> Self {
        CentralFunction {
            name: name.into(),
            eval: Arc::new(eval),
            ctx,
            unit: None,
            dimension: None,
            central: true,
            caps: Caps::default(),
        }
    }

    /// A function that is not central. Forms are evaluated by plain
    /// recursion in the given argument order.
    pub fn non_central(
        name: impl Into<String>,
        ctx: S::Context,
        eval: impl Fn(&T) -> S + Send + Sync + 'static,
    ) -> Self {
        CentralFunction {
            central: false,
            ..Self::new(name, ctx, eval)
        }
    }

    pub fn with_unit(mut self, unit: T) -> Self {
        self.unit = Some(unit);
        self
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    /// Declares the dimension `d`; fails when `d!` is not invertible in the
    /// base ring.
    pub fn with_dimension(mut self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Config("dimension must be at least 1".into()));
        }
        inverse_of_factorial::<S>(&self.ctx, d)?;
        self.dimension = Some(d);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn context(&self) -> &S::Context {
        &self.ctx
    }

    pub fn unit(&self) -> Option<&T> {
        self.unit.as_ref()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.dimension
    }

    pub fn require_dimension(&self) -> Result<usize> {
        self.dimension
            .ok_or_else(|| Error::NoDimension(self.name.clone()))
    }

    pub fn is_central(&self) -> bool {
        self.central
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// `f(x)`
    pub fn eval(&self, x: &T) -> S {
        (self.eval)(x)
    }
}

impl<S: Scalar> CentralFunction<Matrix<S>, S> {
    /// The trace on `n x n` matrices, with the identity as unit and no
    /// declared dimension.
    pub fn matrix_trace(ctx: S::Context, n: usize) -> Self {
        let unit = Matrix::identity(&ctx, n);
        CentralFunction::new(format!("trace on M{n}"), ctx, |x: &Matrix<S>| x.trace())
            .with_unit(unit)
    }

    /// The trace on `n x n` matrices as a pseudocharacter of dimension `n`.
    pub fn trace_pseudocharacter(ctx: S::Context, n: usize) -> Result<Self> {
        Self::matrix_trace(ctx, n).with_dimension(n)
    }

    /// `x -> tr(x^k)`: central, and nonlinear for `k > 1`.
    pub fn power_trace(ctx: S::Context, n: usize, k: u32) -> Self {
        assert!(k >= 1);
        let unit = Matrix::identity(&ctx, n);
        CentralFunction::new(format!("tr(x^{k}) on M{n}"), ctx, move |x: &Matrix<S>| {
            let mut p = x.clone();
            for _ in 1..k {
                p = p.product(x);
            }
            p.trace()
        })
        .with_unit(unit)
    }
}

impl<S: Scalar> CentralFunction<GroupElement<S>, S> {
    /// `sum_g a_g g -> sum_g a_g chi(g)` for a class function `chi` given by
    /// its values on the group elements. Errors when `chi` is not constant
    /// on conjugacy classes.
    pub fn class_function(group: Arc<GroupTable>, ctx: S::Context, values: Vec<S>) -> Result<Self> {
        let n = group.order();
        if values.len() != n {
            return Err(Error::InvalidGroupTable(format!(
                "{} character values for a group of order {n}",
                values.len()
            )));
        }
        for g in 0..n {
            for h in 0..n {
                let conj = group.mul(group.mul(h, g), group.inverse(h));
                if values[conj] != values[g] {
                    return Err(Error::Config(format!(
                        "values are not a class function: g{g} and g{conj} are conjugate"
                    )));
                }
            }
        }
        let unit = GroupElement::basis(group, &ctx, 0);
        let eval = move |x: &GroupElement<S>| {
            x.coeffs()
                .iter()
                .zip(&values)
                .fold(S::zero_in(&x.coefficient(0).context()), |acc, (a, v)| {
                    acc + &(a.clone() * v)
                })
        };
        Ok(CentralFunction::new("class function", ctx, eval).with_unit(unit))
    }
}

impl CentralFunction<Word, Poly> {
    /// The universal central function on the free semigroup: each word maps
    /// to a fresh variable `tr(w)` named by its least rotation.
    pub fn symbolic_word_trace() -> Self {
        CentralFunction::new("symbolic trace", RationalField, |w: &Word| {
            Poly::var(&format!("tr({})", w.least_rotation()))
        })
    }
}

impl<T: Monoid, S: Scalar> CentralFunction<T, S> {
    /// The unit of `R`, from the function or else from a sample element.
    pub fn unit_or(&self, sample: &T) -> T {
        self.unit.clone().unwrap_or_else(|| sample.unit_like())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ModInt, Modulus, Rational};

    #[test]
    fn dimension_requires_invertible_factorial() {
        let m6 = Modulus::new(6).unwrap();
        let err =
            CentralFunction::<Matrix<ModInt>, ModInt>::trace_pseudocharacter(m6, 3).unwrap_err();
        assert_eq!(err.to_string(), "3! not invertible mod 6");
        let m7 = Modulus::new(7).unwrap();
        assert!(CentralFunction::<Matrix<ModInt>, ModInt>::trace_pseudocharacter(m7, 3).is_ok());
    }

    #[test]
    fn power_trace_values() {
        let f = CentralFunction::<Matrix<Rational>, Rational>::power_trace(RationalField, 2, 2);
        let x = Matrix::from_i64_rows(&RationalField, &[&[1, 2], &[3, 4]]);
        // x^2 = [[7,10],[15,22]]
        assert_eq!(f.eval(&x), Rational::integer(29));
    }

    #[test]
    fn class_function_rejects_non_class_values() {
        let (g, _) = GroupTable::symmetric(3).unwrap();
        let values: Vec<Rational> = (0..6).map(Rational::integer).collect();
        let r = CentralFunction::class_function(Arc::new(g), RationalField, values);
        assert!(r.is_err());
    }

    #[test]
    fn symbolic_trace_is_rotation_invariant() {
        let f = CentralFunction::symbolic_word_trace();
        let a: Word = "x1*y1*z1".parse().unwrap();
        let b: Word = "z1*x1*y1".parse().unwrap();
        let c: Word = "x1*z1*y1".parse().unwrap();
        assert_eq!(f.eval(&a), f.eval(&b));
        assert_ne!(f.eval(&a), f.eval(&c));
        assert_eq!(f.eval(&a).to_string(), "tr(x1*y1*z1)");
    }
}
