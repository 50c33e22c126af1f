use std::collections::HashMap;

use super::CentralFunction;
use crate::algebra::Semigroup;
use crate::error::{Error, Result};
use crate::perm::{cycles, permutations};
use crate::scalar::Scalar;

/// The permutation-sum formula
///
/// ```text
/// sum over sigma in S_n of sgn(sigma) * prod over cycles (i1 .. ik) of f(x_i1 ... x_ik)
/// ```
///
/// with each cycle read from its smallest point along `i -> sigma(i)`.
/// Independent of the recursion; enumerates all `n!` permutations.
pub fn taylor_oracle<T: Semigroup, S: Scalar>(f: &CentralFunction<T, S>, args: &[T]) -> Result<S> {
    let n = args.len();
    if n == 0 {
        return Err(Error::EmptyArguments);
    }
    let cap = f.caps().oracle;
    if n > cap {
        return Err(Error::CapExceeded {
            what: "taylor oracle",
            n,
            cap,
        });
    }
    let ctx = f.context();
    let mut cache: HashMap<Vec<usize>, S> = HashMap::new();
    let mut total = S::zero_in(ctx);
    for sigma in permutations(n) {
        let cs = cycles(&sigma);
        let mut term = S::one_in(ctx);
        for c in &cs {
            let v = cache
                .entry(c.clone())
                .or_insert_with(|| {
                    let x = c[1..]
                        .iter()
                        .fold(args[c[0]].clone(), |acc, &i| acc.product(&args[i]));
                    f.eval(&x)
                })
                .clone();
            term = term * v;
        }
        if (n - cs.len()) % 2 == 1 {
            total = total - term;
        } else {
            total = total + term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Matrix, Word};
    use crate::pseudochar::f_rec;
    use crate::scalar::{Poly, Rational, RationalField};

    fn words(s: &[&str]) -> Vec<Word> {
        s.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn single_argument() {
        let f = CentralFunction::symbolic_word_trace();
        assert_eq!(
            taylor_oracle(&f, &words(&["x1"])).unwrap().to_string(),
            "tr(x1)"
        );
    }

    #[test]
    fn matches_second_and_third_forms_symbolically() {
        let f = CentralFunction::symbolic_word_trace();
        for args in [words(&["x1", "x2"]), words(&["x1", "x2", "x3"])] {
            let oracle: Poly = taylor_oracle(&f, &args).unwrap();
            assert_eq!(oracle, f_rec(&f, &args).unwrap());
        }
        let three = taylor_oracle(&f, &words(&["x1", "x2", "x3"])).unwrap();
        let t = |w: &str| Poly::var(&format!("tr({w})"));
        let expected = t("x1") * &t("x2") * &t("x3")
            - &(t("x1*x2") * &t("x3"))
            - &(t("x1*x3") * &t("x2"))
            - &(t("x2*x3") * &t("x1"))
            + &t("x1*x2*x3")
            + &t("x1*x3*x2");
        assert_eq!(three, expected);
    }

    #[test]
    fn symbolic_agreement_up_to_five() {
        let f = CentralFunction::symbolic_word_trace();
        let args = words(&["x1", "x2", "x3", "x4", "x5"]);
        for n in 1..=5 {
            assert_eq!(
                taylor_oracle(&f, &args[..n]).unwrap(),
                f_rec(&f, &args[..n]).unwrap()
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let f = CentralFunction::<Matrix<Rational>, Rational>::matrix_trace(RationalField, 1);
        let xs = vec![Matrix::identity(&RationalField, 1); 8];
        assert!(matches!(
            taylor_oracle(&f, &xs),
            Err(Error::CapExceeded { n: 8, cap: 7, .. })
        ));
    }
}
