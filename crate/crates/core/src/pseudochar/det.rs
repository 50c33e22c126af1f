use std::fmt;

use super::forms::{f_rec, int, FormEngine};
use super::CentralFunction;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::{binomial, inverse_of_factorial, Scalar};

/// `D_f(x) = f^[d](x, .., x) / d!` for a function with declared dimension `d`.
pub fn det_from_pseudocharacter<T: Algebra<S>, S: Scalar>(
    f: &CentralFunction<T, S>,
    x: &T,
) -> Result<S> {
    let d = f.require_dimension()?;
    let inv = inverse_of_factorial::<S>(f.context(), d)?;
    Ok(f_rec(f, &vec![x.clone(); d])? * &inv)
}

/// The coefficients `c_0 .. c_d` of `D_f(t - x)`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> CharPoly<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        CharPoly { coeffs }
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Option<&S> {
        self.coeffs.get(k)
    }

    /// Number of stored coefficients minus one.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    /// `-c_{d-1}`, the trace read off the polynomial.
    pub fn trace(&self) -> Option<S> {
        let d = self.degree();
        if d == 0 {
            return None;
        }
        Some(-self.coeffs[d - 1].clone())
    }
}

impl<S: Scalar> fmt::Display for CharPoly<S> {
    /// `t^2 - 5*t - 2`; compound coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ if text.contains(' ') => (false, format!("({text})")),
                _ => (false, text),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            match (k, body.as_str()) {
                (0, _) => f.write_str(&body)?,
                (_, "1") => f.write_str(&power)?,
                _ => write!(f, "{body}*{power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A polynomial in `t` with coefficients in `R`, lowest degree first; an
/// element of `R[t]`. The leading stored coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T> RPolynomial<T> {
    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }
}

impl<T: Clone> RPolynomial<T> {
    pub fn new<S: Scalar>(mut coeffs: Vec<T>) -> Self
    where
        T: Algebra<S>,
    {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RPolynomial { coeffs }
    }

    /// `t - x`
    pub fn t_minus<S: Scalar>(x: &T) -> Self
    where
        T: Algebra<S>,
    {
        Self::new(vec![x.negated(), x.unit_like()])
    }

    /// The value at `t = a`, by Horner's rule; `None` for the zero polynomial.
    pub fn evaluate<S: Scalar>(&self, a: &S) -> Option<T>
    where
        T: Algebra<S>,
    {
        let mut it = self.coeffs.iter().rev();
        let mut acc = it.next()?.clone();
        for c in it {
            acc = acc.scale(a).sum(c);
        }
        Some(acc)
    }
}

/// `D_f(t - x)` by expanding in `t`: the coefficient of `t^k` is
/// `C(d, k) f^[d](-x, .., -x, 1, .., 1) / d!` with `d - k` copies of `-x`.
pub fn char_poly<T: Algebra<S>, S: Scalar>(
    f: &CentralFunction<T, S>,
    x: &T,
) -> Result<CharPoly<S>> {
    let d = f.require_dimension()?;
    let ctx = f.context();
    let inv = inverse_of_factorial::<S>(ctx, d)?;
    let unit = f.unit_or(x);
    let neg = x.negated();
    let mut engine = FormEngine::new(f);
    let mut coeffs = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut args = vec![neg.clone(); d - k];
        args.extend(std::iter::repeat_n(unit.clone(), k));
        let value = if f.is_central() {
            engine.value(&args)?
        } else {
            f_rec(f, &args)?
        };
        coeffs.push(int::<S>(ctx, binomial(d, k)) * value * &inv);
    }
    Ok(CharPoly::new(coeffs))
}

/// `D_f(t - x)` by evaluating `D_f(a - x)` at `a = 0, 1, .., d` and
/// interpolating. Fails when the node differences are not invertible.
pub fn char_poly_by_interpolation<T: Algebra<S>, S: Scalar>(
    f: &CentralFunction<T, S>,
    x: &T,
) -> Result<CharPoly<S>> {
    let d = f.require_dimension()?;
    let ctx = f.context();
    let t_minus_x = RPolynomial::t_minus(x);
    let nodes: Vec<S> = (0..=d as i64).map(|a| S::from_i64_in(ctx, a)).collect();
    let mut values = Vec::with_capacity(d + 1);
    for a in &nodes {
        let y = t_minus_x.evaluate(a).expect("t - x is nonzero");
        values.push(det_from_pseudocharacter(f, &y)?);
    }
    Ok(CharPoly::new(lagrange(ctx, &nodes, &values)?))
}

/// Coefficients of the polynomial of degree `< nodes.len()` through the
/// given points.
fn lagrange<S: Scalar>(ctx: &S::Context, nodes: &[S], values: &[S]) -> Result<Vec<S>> {
    let n = nodes.len();
    let mut out = vec![S::zero_in(ctx); n];
    for (i, xi) in nodes.iter().enumerate() {
        let mut basis = vec![S::one_in(ctx)];
        let mut denom = S::one_in(ctx);
        for (j, xj) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            // basis *= (t - xj)
            let mut next = vec![S::zero_in(ctx); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + b;
                next[k] = next[k].clone() - &(b.clone() * xj);
            }
            basis = next;
            denom = denom * (xi.clone() - xj);
        }
        let scale = denom.inverse().map_err(|_| Error::Interpolation)? * &values[i];
        for (k, b) in basis.into_iter().enumerate() {
            out[k] = out[k].clone() + &(b * &scale);
        }
    }
    Ok(out)
}
