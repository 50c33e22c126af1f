//! Seeded generation of random test inputs.
//!
//! Each trial gets its own ChaCha8 stream, derived from the run seed and the
//! trial index, so trials can run in any order or in parallel.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GroupElement, GroupTable, Letter, Matrix, Word};
use crate::multiset::{FormalSum, Multiset};
use crate::scalar::Scalar;

pub type TrialRng = ChaCha8Rng;

/// The generator for `trial` under `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform in `[-bound, bound]`.
pub fn random_int(rng: &mut TrialRng, bound: i64) -> i64 {
    if bound <= 0 {
        return 0;
    }
    rng.random_range(-bound..=bound)
}

pub fn random_scalar<S: Scalar>(rng: &mut TrialRng, ctx: &S::Context, bound: i64) -> S {
    S::from_i64_in(ctx, random_int(rng, bound))
}

/// An `n x n` matrix with integer entries in `[-bound, bound]`.
pub fn random_matrix<S: Scalar>(
    rng: &mut TrialRng,
    ctx: &S::Context,
    n: usize,
    bound: i64,
) -> Matrix<S> {
    Matrix::from_fn(n, |_, _| random_scalar(rng, ctx, bound))
}

pub fn random_matrices<S: Scalar>(
    rng: &mut TrialRng,
    ctx: &S::Context,
    n: usize,
    bound: i64,
    count: usize,
) -> Vec<Matrix<S>> {
    (0..count)
        .map(|_| random_matrix(rng, ctx, n, bound))
        .collect()
}

/// A word of length `1..=max_len` over `alphabet`.
pub fn random_word(rng: &mut TrialRng, alphabet: &[Letter], max_len: usize) -> Word {
    let len = rng.random_range(1..=max_len.max(1));
    let letters = (0..len)
        .map(|_| alphabet[rng.random_range(0..alphabet.len())])
        .collect();
    Word::new(letters).expect("nonempty")
}

/// A formal sum of `1..=max_terms` multisets of cardinality `0..=max_card`
/// with nonzero coefficients in `[-bound, bound]`.
pub fn random_word_sum(
    rng: &mut TrialRng,
    alphabet: &[Letter],
    max_len: usize,
    max_card: usize,
    max_terms: usize,
    bound: i64,
) -> FormalSum<Word> {
    let mut s = FormalSum::zero();
    let terms = rng.random_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let card = rng.random_range(0..=max_card);
        let m: Multiset<Word> = (0..card)
            .map(|_| random_word(rng, alphabet, max_len))
            .collect();
        let mut c = random_int(rng, bound.max(1));
        if c == 0 {
            c = 1;
        }
        s.add_multiset(m, c);
    }
    s
}

/// A group-algebra element with coefficients in `[-bound, bound]`.
pub fn random_group_element<S: Scalar>(
    rng: &mut TrialRng,
    group: &Arc<GroupTable>,
    ctx: &S::Context,
    bound: i64,
) -> GroupElement<S> {
    let coeffs = (0..group.order())
        .map(|_| random_scalar(rng, ctx, bound))
        .collect();
    GroupElement::from_coeffs(group.clone(), coeffs).expect("order matches")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, RationalField};

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let draw = |seed, trial| {
            let mut r = trial_rng(seed, trial);
            (0..8).map(|_| random_int(&mut r, 100)).collect::<Vec<_>>()
        };
        assert_eq!(draw(42, 3), draw(42, 3));
        assert_ne!(draw(42, 3), draw(42, 4));
        assert_ne!(draw(42, 3), draw(43, 3));
    }

    #[test]
    fn bounds() {
        let mut r = trial_rng(1, 0);
        let z: Matrix<Rational> = random_matrix(&mut r, &RationalField, 3, 0);
        assert_eq!(z, Matrix::zero(&RationalField, 3));
        for _ in 0..50 {
            let m: Matrix<Rational> = random_matrix(&mut r, &RationalField, 2, 5);
            assert!(m
                .rows()
                .flatten()
                .all(|a| a.numer().magnitude() <= &5u32.into()));
        }
    }

    #[test]
    fn words_respect_length() {
        let mut r = trial_rng(7, 0);
        let alphabet = [Letter::new('x', 1), Letter::new('y', 1)];
        for _ in 0..50 {
            let w = random_word(&mut r, &alphabet, 3);
            assert!((1..=3).contains(&w.len()));
        }
    }
}
