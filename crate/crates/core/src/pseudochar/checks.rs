use std::fmt;

use super::det::{char_poly, det_from_pseudocharacter};
use super::forms::{f_hat, int, FormEngine};
use super::{f_rec, CentralFunction};
use crate::algebra::{Algebra, Monoid, Semigroup};
use crate::error::{Error, Result};
use crate::multiset::{FormalSum, Multiset};
use crate::perm::permutations;
use crate::scalar::{inverse_of_factorial, Scalar};

/// Two sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison<S> {
    pub lhs: S,
    pub rhs: S,
}

impl<S: PartialEq> Comparison<S> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl<S: PartialEq + fmt::Display> fmt::Display for Comparison<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds() { "==" } else { "!=" };
        write!(f, "{} {rel} {}", self.lhs, self.rhs)
    }
}

/// `f^[|x|](x)`, with the empty multiset giving 1.
fn form_of_multiset<T: Semigroup, S: Scalar>(
    engine: &mut FormEngine<'_, T, S>,
    f: &CentralFunction<T, S>,
    x: &Multiset<T>,
) -> Result<S> {
    if x.is_empty() {
        Ok(S::one_in(f.context()))
    } else if f.is_central() {
        engine.value(x.entries())
    } else {
        f_rec(f, x.entries())
    }
}

/// `f^(x × y)` against `f^[n](x) f^[m](y)`.
pub fn product_formula_check<T: Semigroup, S: Scalar>(
    f: &CentralFunction<T, S>,
    x: &Multiset<T>,
    y: &Multiset<T>,
    budget: u128,
) -> Result<Comparison<S>> {
    let product =
        FormalSum::from(x.clone()).product_with_budget(&FormalSum::from(y.clone()), budget)?;
    let lhs = f_hat(f, &product)?;
    let mut engine = FormEngine::new(f);
    let rhs = form_of_multiset(&mut engine, f, x)? * form_of_multiset(&mut engine, f, y)?;
    Ok(Comparison { lhs, rhs })
}

/// `f^[d](x) f^[d](y)` against `sum_sigma f^[d](x1 y_sigma(1), .., xd y_sigma(d))`.
pub fn degree_d_product_check<T: Semigroup, S: Scalar>(
    f: &CentralFunction<T, S>,
    xs: &[T],
    ys: &[T],
) -> Result<Comparison<S>> {
    let d = f.require_dimension()?;
    if xs.len() != d || ys.len() != d {
        return Err(Error::Config(format!(
            "degree-{d} formula needs {d} elements on each side, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let cap = f.caps().oracle;
    if d > cap {
        return Err(Error::CapExceeded {
            what: "degree-d permutation sum",
            n: d,
            cap,
        });
    }
    let value = |engine: &mut FormEngine<'_, T, S>, args: &[T]| {
        if f.is_central() {
            engine.value(args)
        } else {
            f_rec(f, args)
        }
    };
    let mut engine = FormEngine::new(f);
    let lhs = value(&mut engine, xs)? * value(&mut engine, ys)?;
    let mut rhs = S::zero_in(f.context());
    for sigma in permutations(d) {
        let args: Vec<T> = (0..d).map(|i| xs[i].product(&ys[sigma[i]])).collect();
        rhs = rhs + value(&mut engine, &args)?;
    }
    Ok(Comparison { lhs, rhs })
}

/// `D_f(xy)` against `D_f(x) D_f(y)`.
pub fn multiplicativity_check<T: Algebra<S>, S: Scalar>(
    f: &CentralFunction<T, S>,
    x: &T,
    y: &T,
) -> Result<Comparison<S>> {
    let lhs = det_from_pseudocharacter(f, &x.try_product(y)?)?;
    let rhs = det_from_pseudocharacter(f, x)? * det_from_pseudocharacter(f, y)?;
    Ok(Comparison { lhs, rhs })
}

/// `f^[n](x, 1, .., 1)` against `f(x) prod_{i=1}^{n-1} (f(1) - i)`.
pub fn unit_arguments_check<T: Monoid, S: Scalar>(
    f: &CentralFunction<T, S>,
    x: &T,
    n: usize,
) -> Result<Comparison<S>> {
    if n == 0 {
        return Err(Error::EmptyArguments);
    }
    let unit = f.unit_or(x);
    let mut args = vec![x.clone()];
    args.extend(std::iter::repeat_n(unit.clone(), n - 1));
    let lhs = f_rec(f, &args)?;
    let ctx = f.context();
    let f1 = f.eval(&unit);
    let rhs = (1..n as i64).fold(f.eval(x), |acc, i| acc * (f1.clone() - int::<S>(ctx, i)));
    Ok(Comparison { lhs, rhs })
}

/// One line of a [`AxiomReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(AxiomCheck {
            name,
            passed,
            detail,
        });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            writeln!(f, "{mark:4} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Checks the pseudocharacter conditions on samples: `f(1) = d`, `d!`
/// invertible, centrality, linearity, and `f^[d+1] = 0` on windows of
/// `d + 1` consecutive samples. Failures are report entries.
pub fn check_pseudocharacter<T: Algebra<S>, S: Scalar>(
    f: &CentralFunction<T, S>,
    samples: &[T],
) -> AxiomReport {
    let mut report = AxiomReport::default();
    let ctx = f.context();
    let Some(d) = f.dimension() else {
        report.push(
            "dimension",
            false,
            format!("`{}` declares no dimension", f.name()),
        );
        return report;
    };
    let Some(first) = samples.first() else {
        report.push("samples", false, "no samples".into());
        return report;
    };
    let one = f.eval(&f.unit_or(first));
    let dd = int::<S>(ctx, d);
    report.push("f(1) = d", one == dd, format!("f(1) = {one}, d = {d}"));

    match inverse_of_factorial::<S>(ctx, d) {
        Ok(inv) => report.push("d! invertible", true, format!("1/{d}! = {inv}")),
        Err(e) => report.push("d! invertible", false, e.to_string()),
    }

    let n = samples.len();
    let pairs = || (0..n).map(|i| (&samples[i], &samples[(i + 1) % n]));

    let bad = pairs().find(|(x, y)| f.eval(&x.product(y)) != f.eval(&y.product(x)));
    report.push("central", bad.is_none(), counterexample(bad, n));

    let bad = pairs().find(|(x, y)| f.eval(&x.sum(y)) != f.eval(x) + f.eval(y));
    report.push("additive", bad.is_none(), counterexample(bad, n));

    let bad = pairs().enumerate().find_map(|(k, (x, _))| {
        let a = int::<S>(ctx, k as i64 + 2);
        (f.eval(&x.scale(&a)) != a.clone() * f.eval(x)).then_some((x, x))
    });
    report.push("homogeneous", bad.is_none(), counterexample(bad, n));

    let mut failure = None;
    for start in 0..n {
        let window: Vec<T> = (0..=d).map(|k| samples[(start + k) % n].clone()).collect();
        match f_rec(f, &window) {
            Ok(v) if v.is_zero() => {}
            Ok(v) => {
                failure = Some(format!("f^[{}] = {v} at window starting {start}", d + 1));
                break;
            }
            Err(e) => {
                failure = Some(e.to_string());
                break;
            }
        }
    }
    report.push(
        "f^[d+1] = 0",
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{n} windows of {}", d + 1)),
    );
    report
}

fn counterexample<T: fmt::Display>(bad: Option<(&T, &T)>, n: usize) -> String {
    match bad {
        None => format!("{n} sample pairs"),
        Some((x, y)) => format!("fails at x = {x}, y = {y}"),
    }
}

/// Trace read back from the characteristic polynomial, for one sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripEntry<S> {
    pub input: String,
    pub trace: S,
    pub recovered: S,
}

impl<S: Scalar> RoundTripEntry<S> {
    pub fn passed(&self) -> bool {
        self.trace == self.recovered
    }
}

/// For each sample, `-c_{d-1}` of `D_f(t - x)` against `f(x)`.
pub fn trace_roundtrip_check<T: Algebra<S>, S: Scalar>(
    f: &CentralFunction<T, S>,
    samples: &[T],
) -> Result<Vec<RoundTripEntry<S>>> {
    samples
        .iter()
        .map(|x| {
            let p = char_poly(f, x)?;
            Ok(RoundTripEntry {
                input: x.to_string(),
                trace: f.eval(x),
                recovered: p.trace().expect("degree at least 1"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Matrix;
    use crate::scalar::{ModInt, Modulus, Rational, RationalField};

    type F = CentralFunction<Matrix<Rational>, Rational>;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_i64_rows(&RationalField, rows)
    }

    fn samples2() -> Vec<Matrix<Rational>> {
        vec![
            m(&[&[1, 2], &[3, 4]]),
            m(&[&[0, -1], &[5, 2]]),
            m(&[&[2, 0], &[1, -3]]),
            m(&[&[1, 1], &[-1, 0]]),
        ]
    }

    #[test]
    fn trace_is_a_pseudocharacter() {
        let f = F::trace_pseudocharacter(RationalField, 2).unwrap();
        let r = check_pseudocharacter(&f, &samples2());
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn trace_mod_seven() {
        let m7 = Modulus::new(7).unwrap();
        let f = CentralFunction::<Matrix<ModInt>, ModInt>::trace_pseudocharacter(m7, 2).unwrap();
        let xs: Vec<_> = samples2()
            .iter()
            .map(|x| x.map(|a| ModInt::from_i64(a.numer().try_into().unwrap(), m7)))
            .collect();
        assert!(check_pseudocharacter(&f, &xs).passed());
    }

    #[test]
    fn wrong_dimension_fails_unit_check() {
        let f = F::matrix_trace(RationalField, 2).with_dimension(3).unwrap();
        let r = check_pseudocharacter(&f, &samples2());
        assert!(!r.get("f(1) = d").unwrap().passed);
        assert!(!r.passed());
    }

    #[test]
    fn product_formula_for_nonlinear_central_function() {
        let f = F::power_trace(RationalField, 2, 2);
        let xs = samples2();
        let x = Multiset::new(xs[..2].to_vec());
        let y = Multiset::new(xs[2..].to_vec());
        assert!(product_formula_check(&f, &x, &y, 1000).unwrap().holds());
        let e = Multiset::empty();
        let c = product_formula_check(&f, &e, &e, 1000).unwrap();
        assert_eq!(c.lhs, Rational::integer(1));
        assert!(c.holds());
    }

    #[test]
    fn degree_d_and_its_negative_control() {
        let xs = samples2();
        let f = F::trace_pseudocharacter(RationalField, 2).unwrap();
        assert!(degree_d_product_check(&f, &xs[..2], &xs[2..])
            .unwrap()
            .holds());
        let wrong = F::matrix_trace(RationalField, 2).with_dimension(1).unwrap();
        assert!(!degree_d_product_check(&wrong, &xs[..1], &xs[1..2])
            .unwrap()
            .holds());
    }

    #[test]
    fn unit_argument_values() {
        let f = F::matrix_trace(RationalField, 2);
        let x = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            unit_arguments_check(&f, &x, 2).unwrap().lhs,
            Rational::integer(5)
        );
        let c = unit_arguments_check(&f, &x, 3).unwrap();
        assert_eq!(c.rhs, Rational::integer(0));
        assert!(c.holds());
    }

    #[test]
    fn roundtrip_on_identity_and_zero() {
        let f = F::trace_pseudocharacter(RationalField, 2).unwrap();
        let entries =
            trace_roundtrip_check(&f, &[m(&[&[1, 0], &[0, 1]]), m(&[&[0, 0], &[0, 0]])]).unwrap();
        assert_eq!(entries[0].recovered, Rational::integer(2));
        assert_eq!(entries[1].recovered, Rational::integer(0));
        assert!(entries.iter().all(RoundTripEntry::passed));
    }

    #[test]
    fn multiplicativity() {
        let f = F::trace_pseudocharacter(RationalField, 2).unwrap();
        let xs = samples2();
        assert!(multiplicativity_check(&f, &xs[0], &xs[1]).unwrap().holds());
    }
}
