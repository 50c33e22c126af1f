//! Hand-written oracles shared by the integration tests. Nothing here calls
//! the recursion or the multiset product.
#![allow(dead_code)]

use pseudochar::algebra::{Letter, Matrix, Semigroup, Word};
use pseudochar::scalar::Scalar;

pub fn tr<S: Scalar>(x: &Matrix<S>) -> S {
    x.trace()
}

pub fn mul<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
    x.product(y)
}

/// `tr x tr y - tr(xy)`
pub fn expansion2<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> S {
    tr(x) * tr(y) - tr(&mul(x, y))
}

/// The six-term expansion of the third form.
pub fn expansion3<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>, z: &Matrix<S>) -> S {
    let (xy, xz, yz) = (mul(x, y), mul(x, z), mul(y, z));
    tr(x) * tr(y) * tr(z) - tr(&xy) * tr(z) - tr(&xz) * tr(y) - tr(&yz) * tr(x)
        + tr(&mul(&xy, z))
        + tr(&mul(&xz, y))
}

/// The trace forms of degree at most 3, written out.
pub fn small_form<S: Scalar>(ctx: &S::Context, xs: &[Matrix<S>]) -> Option<S> {
    Some(match xs {
        [] => S::one_in(ctx),
        [x] => tr(x),
        [x, y] => expansion2(x, y),
        [x, y, z] => expansion3(x, y, z),
        _ => return None,
    })
}

/// Determinant of a matrix of size at most 3 by the explicit formula.
pub fn det_small<S: Scalar>(x: &Matrix<S>) -> S {
    let a = |i, j| x.get(i, j).clone();
    match x.size() {
        1 => a(0, 0),
        2 => a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0),
        3 => {
            a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
                - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
        }
        n => panic!("det_small on size {n}"),
    }
}

/// `a*I - x`
pub fn shifted<S: Scalar>(ctx: &S::Context, a: i64, x: &Matrix<S>) -> Matrix<S> {
    let n = x.size();
    Matrix::from_fn(n, |i, j| {
        let d = if i == j {
            S::from_i64_in(ctx, a)
        } else {
            S::zero_in(ctx)
        };
        d - x.get(i, j)
    })
}

pub fn letter(family: char, index: u32) -> Word {
    Word::letter(Letter::new(family, index))
}

/// Number of partial injections `{1..n} -> {1..m}` by brute force over all
/// maps into `{1..m} + {unmatched}`.
pub fn count_partial_injections(n: usize, m: usize) -> u64 {
    let mut count = 0;
    let total = (m + 1).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut used = vec![false; m];
        let mut ok = true;
        for _ in 0..n {
            let v = c % (m + 1);
            c /= m + 1;
            if v < m {
                ok &= !used[v];
                used[v] = true;
            }
        }
        count += ok as u64;
    }
    count
}
