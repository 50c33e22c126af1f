//! Determinants computed directly from matrix entries, as oracles for the
//! pseudocharacter side. Nothing here goes through `f^[n]`.

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest size accepted by the permutation-sum oracles.
pub const LEIBNIZ_CAP: usize = 6;

/// Visits every permutation of `0..n` with its sign, by Heap's algorithm.
fn for_each_signed_permutation(n: usize, mut visit: impl FnMut(&[usize], bool)) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut odd = false;
    visit(&p, odd);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            p.swap(j, i);
            odd = !odd;
            visit(&p, odd);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > LEIBNIZ_CAP {
        return Err(Error::CapExceeded {
            what: "leibniz determinant",
            n,
            cap: LEIBNIZ_CAP,
        });
    }
    Ok(())
}

/// `sum_sigma sgn(sigma) prod_i x[i][sigma(i)]`
pub fn leibniz_det<S: Scalar>(x: &Matrix<S>) -> Result<S> {
    let n = x.size();
    check_cap(n)?;
    let ctx = x.context();
    let mut total = S::zero_in(&ctx);
    for_each_signed_permutation(n, |p, odd| {
        let term = (0..n).fold(S::one_in(&ctx), |acc, i| acc * x.get(i, p[i]));
        total = if odd {
            total.clone() - term
        } else {
            total.clone() + term
        };
    });
    Ok(total)
}

/// Laplace expansion along the first row.
pub fn cofactor_det<S: Scalar>(x: &Matrix<S>) -> S {
    let rows: Vec<Vec<S>> = x.rows().map(<[S]>::to_vec).collect();
    cofactor(&rows, &x.context())
}

fn cofactor<S: Scalar>(rows: &[Vec<S>], ctx: &S::Context) -> S {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut total = S::zero_in(ctx);
    for j in 0..n {
        let minor: Vec<Vec<S>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, a)| a.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].clone() * cofactor(&minor, ctx);
        total = if j % 2 == 1 {
            total - term
        } else {
            total + term
        };
    }
    total
}

/// Coefficients of `det(tI - x)`, lowest degree first, by the Leibniz
/// expansion with univariate polynomial entries.
pub fn leibniz_char_poly<S: Scalar>(x: &Matrix<S>) -> Result<Vec<S>> {
    let n = x.size();
    check_cap(n)?;
    let ctx = x.context();
    let zero = S::zero_in(&ctx);
    let entry = |i: usize, j: usize| -> Vec<S> {
        let c = -x.get(i, j).clone();
        if i == j {
            vec![c, S::one_in(&ctx)]
        } else {
            vec![c]
        }
    };
    let mut total = vec![zero.clone(); n + 1];
    for_each_signed_permutation(n, |p, odd| {
        let mut term = vec![S::one_in(&ctx)];
        for (i, &j) in p.iter().enumerate() {
            let e = entry(i, j);
            let mut next = vec![zero.clone(); term.len() + e.len() - 1];
            for (a, u) in term.iter().enumerate() {
                for (b, v) in e.iter().enumerate() {
                    next[a + b] = next[a + b].clone() + &(u.clone() * v);
                }
            }
            term = next;
        }
        for (k, c) in term.into_iter().enumerate() {
            total[k] = if odd {
                total[k].clone() - c
            } else {
                total[k].clone() + c
            };
        }
    });
    Ok(total)
}
