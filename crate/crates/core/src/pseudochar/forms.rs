use std::collections::HashMap;

use num_bigint::BigInt;

use super::CentralFunction;
use crate::algebra::Semigroup;
use crate::error::{Error, Result};
use crate::multiset::FormalSum;
use crate::scalar::Scalar;

/// How `f^[n]` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Recursion {
    /// Arguments are tracked as words in the distinct inputs; sub-results are
    /// memoized on the sorted multiset of words and `f` is cached per cyclic
    /// class of word. Requires a central `f`.
    #[default]
    Memoized,
    /// The defining recursion on values, in the given argument order, with
    /// no caching. Exponential; used to cross-check and for non-central `f`.
    Plain,
}

/// `f^[n](args)` with `n = args.len() >= 1`.
pub fn f_rec<T: Semigroup, S: Scalar>(f: &CentralFunction<T, S>, args: &[T]) -> Result<S> {
    if !f.is_central() {
        return f_rec_plain(f, args);
    }
    check_arity(f, args.len())?;
    FormEngine::new(f).value(args)
}

/// `f^[n](args)` by the defining recursion without any caching.
pub fn f_rec_plain<T: Semigroup, S: Scalar>(f: &CentralFunction<T, S>, args: &[T]) -> Result<S> {
    check_arity(f, args.len())?;
    Ok(plain(f, args))
}

/// `f^[n]` under an explicit strategy.
pub fn f_rec_with<T: Semigroup, S: Scalar>(
    f: &CentralFunction<T, S>,
    args: &[T],
    strategy: Recursion,
) -> Result<S> {
    match strategy {
        Recursion::Memoized => f_rec(f, args),
        Recursion::Plain => f_rec_plain(f, args),
    }
}

/// The linear extension of `f^[]` to `M(R)`: each multiset `x` contributes
/// `f^[|x|](x)`, and the empty multiset contributes 1.
pub fn f_hat<T: Semigroup, S: Scalar>(f: &CentralFunction<T, S>, s: &FormalSum<T>) -> Result<S> {
    let ctx = f.context();
    let mut engine = FormEngine::new(f);
    let mut total = S::zero_in(ctx);
    for (m, c) in s.terms() {
        let value = if m.is_empty() {
            S::one_in(ctx)
        } else {
            check_arity(f, m.len())?;
            if f.is_central() {
                engine.value(m.entries())?
            } else {
                plain(f, m.entries())
            }
        };
        total = total + &(S::from_bigint_in(ctx, c) * &value);
    }
    Ok(total)
}

fn check_arity<T, S: Scalar>(f: &CentralFunction<T, S>, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyArguments);
    }
    let cap = f.caps().recursion;
    if n > cap {
        return Err(Error::CapExceeded {
            what: "f^[n] recursion",
            n,
            cap,
        });
    }
    Ok(())
}

fn plain<T: Semigroup, S: Scalar>(f: &CentralFunction<T, S>, args: &[T]) -> S {
    let n = args.len();
    if n == 1 {
        return f.eval(&args[0]);
    }
    let (head, last) = (&args[..n - 1], &args[n - 1]);
    let mut v = f.eval(last) * plain(f, head);
    let mut merged = head.to_vec();
    for i in 0..n - 1 {
        merged[i] = head[i].product(last);
        v = v - plain(f, &merged);
        merged[i] = head[i].clone();
    }
    v
}

/// A word in the distinct input values, by index.
type Key = Vec<u32>;

/// Memoized evaluator for `f^[n]` over one family of inputs.
///
/// Inputs are interned; every argument that appears during the recursion is
/// a product of inputs and is represented by the word of their indices.
/// Products are computed once per word, `f` once per cyclic class.
pub(crate) struct FormEngine<'f, T, S: Scalar> {
    f: &'f CentralFunction<T, S>,
    ids: HashMap<T, u32>,
    inputs: Vec<T>,
    products: HashMap<Key, T>,
    leaves: HashMap<Key, S>,
    memo: HashMap<Vec<Key>, S>,
}

impl<'f, T: Semigroup, S: Scalar> FormEngine<'f, T, S> {
    pub(crate) fn new(f: &'f CentralFunction<T, S>) -> Self {
        FormEngine {
            f,
            ids: HashMap::new(),
            inputs: Vec::new(),
            products: HashMap::new(),
            leaves: HashMap::new(),
            memo: HashMap::new(),
        }
    }

    /// `f^[n](args)`; `args` must be nonempty and within the cap.
    pub(crate) fn value(&mut self, args: &[T]) -> Result<S> {
        check_arity(self.f, args.len())?;
        let words: Vec<Key> = args.iter().map(|x| vec![self.intern(x)]).collect();
        Ok(self.eval(words))
    }

    fn intern(&mut self, x: &T) -> u32 {
        if let Some(&id) = self.ids.get(x) {
            return id;
        }
        let id = self.inputs.len() as u32;
        self.inputs.push(x.clone());
        self.ids.insert(x.clone(), id);
        id
    }

    fn eval(&mut self, mut args: Vec<Key>) -> S {
        if args.len() == 1 {
            return self.leaf(&args[0]);
        }
        args.sort_unstable();
        if let Some(v) = self.memo.get(&args) {
            return v.clone();
        }
        let n = args.len();
        let last = args[n - 1].clone();
        let head = &args[..n - 1];
        let mut v = self.leaf(&last) * self.eval(head.to_vec());
        for i in 0..n - 1 {
            let mut next = head.to_vec();
            next[i].extend_from_slice(&last);
            v = v - self.eval(next);
        }
        self.memo.insert(args, v.clone());
        v
    }

    fn leaf(&mut self, word: &[u32]) -> S {
        let canonical = least_rotation(word);
        if let Some(v) = self.leaves.get(&canonical) {
            return v.clone();
        }
        let x = self.product(&canonical);
        let v = self.f.eval(&x);
        self.leaves.insert(canonical, v.clone());
        v
    }

    fn product(&mut self, word: &[u32]) -> T {
        if word.len() == 1 {
            return self.inputs[word[0] as usize].clone();
        }
        if let Some(p) = self.products.get(word) {
            return p.clone();
        }
        let prefix = self.product(&word[..word.len() - 1]);
        let p = prefix.product(&self.inputs[word[word.len() - 1] as usize]);
        self.products.insert(word.to_vec(), p.clone());
        p
    }
}

fn least_rotation(word: &[u32]) -> Key {
    let n = word.len();
    (0..n)
        .map(|k| word[k..].iter().chain(&word[..k]).copied().collect::<Key>())
        .min()
        .expect("nonempty word")
}

/// Integer coefficient as a scalar; small helper for callers in this module tree.
pub(crate) fn int<S: Scalar>(ctx: &S::Context, n: impl Into<BigInt>) -> S {
    S::from_bigint_in(ctx, &n.into())
}
