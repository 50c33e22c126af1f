//! Suite bodies over the free semigroup, with the universal central
//! function `w -> tr(w)` valued in polynomials.

use super::config::{Suite, SuiteConfig};
use super::report::{CheckRecord, Expect};
use super::rng::{random_word, random_word_sum};
use super::suites::{
    alphabet, cmp, letter_multiset, misordered_associativity, per_trial, render, second_form,
    third_form,
};
use crate::algebra::{Letter, Semigroup, SemigroupHom, Word};
use crate::error::Result;
use crate::multiset::{map_formal, multiset_product, partial_bijection_count, FormalSum, Multiset};
use crate::pseudochar::{f_rec, product_formula_check, taylor_oracle, CentralFunction};
use crate::scalar::{binomial, Poly, RationalField};

type Symbolic = CentralFunction<Word, Poly>;

pub(crate) fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let f = Symbolic::symbolic_word_trace().with_caps(cfg.caps);
    match cfg.suite {
        Suite::Expansions => expansions(&f),
        Suite::Assoc => assoc(cfg),
        Suite::Functoriality => functoriality(cfg),
        Suite::ProductFormula => product_formula(cfg, &f),
        Suite::TaylorEquiv => taylor_equiv(cfg, &f),
        _ => unreachable!("validated: {} has no word variant", cfg.suite),
    }
}

fn letters(family: char, n: usize) -> Vec<Word> {
    letter_multiset(family, n).into_entries()
}

fn expansions(f: &Symbolic) -> Vec<CheckRecord> {
    let xs = letters('x', 3);
    vec![
        CheckRecord::new(
            "f^[2] closed form",
            None,
            "n=2",
            render(&xs[..2]),
            cmp(f_rec(f, &xs[..2]), Ok(second_form(f, &xs))),
            Expect::Holds,
        ),
        CheckRecord::new(
            "f^[3] six-term form",
            None,
            "n=3",
            render(&xs),
            cmp(f_rec(f, &xs), Ok(third_form(f, &xs, false))),
            Expect::Holds,
        ),
        CheckRecord::new(
            "f^[3] with last sign flipped",
            None,
            "n=3",
            render(&xs),
            cmp(f_rec(f, &xs), Ok(third_form(f, &xs, true))),
            Expect::Fails,
        ),
    ]
}

/// `sum_k C(n,k) C(m,k) k!`
fn bijection_count_formula(n: usize, m: usize) -> num_bigint::BigInt {
    (0..=n.min(m))
        .map(|k| binomial(n, k) * binomial(m, k) * (1..=k).product::<num_bigint::BigInt>())
        .sum()
}

fn assoc(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let budget = cfg.budget;
    let mut out = Vec::new();
    for (n, m, count) in [(2, 1, 3), (2, 2, 7), (3, 3, 34)] {
        out.push(CheckRecord::flag(
            "partial bijection count",
            format!("n={n} m={m}"),
            partial_bijection_count(n, m),
            count,
        ));
    }
    for a in 0..=3 {
        let x = FormalSum::from(letter_multiset('x', a));
        let unit = FormalSum::unit();
        out.push(CheckRecord::new(
            "x*{} = x",
            None,
            format!("|x|={a}"),
            vec![x.to_string()],
            cmp(x.product(&unit), Ok(x.clone())),
            Expect::Holds,
        ));
        out.push(CheckRecord::new(
            "{}*x = x",
            None,
            format!("|x|={a}"),
            vec![x.to_string()],
            cmp(unit.product(&x), Ok(x.clone())),
            Expect::Holds,
        ));
        for b in 0..=3 {
            let y = FormalSum::from(letter_multiset('y', b));
            let params = format!("|x|={a} |y|={b}");
            let xy = x.product(&y);
            let ones = xy
                .as_ref()
                .map(|p| p.terms().all(|(_, c)| *c == 1.into()))
                .unwrap_or(false);
            let len = xy.as_ref().map(|p| p.len()).unwrap_or(0);
            out.push(CheckRecord::flag(
                "every coefficient of x*y is 1",
                params.clone(),
                ones,
                true,
            ));
            out.push(CheckRecord::flag(
                "number of terms of x*y",
                params.clone(),
                len,
                bijection_count_formula(a, b),
            ));
            for c in 0..=3 {
                let z = FormalSum::from(letter_multiset('z', c));
                let left = x
                    .product_with_budget(&y, budget)
                    .and_then(|xy| xy.product_with_budget(&z, budget));
                let right = y
                    .product_with_budget(&z, budget)
                    .and_then(|yz| x.product_with_budget(&yz, budget));
                out.push(CheckRecord::new(
                    "(x*y)*z = x*(y*z)",
                    None,
                    format!("|x|={a} |y|={b} |z|={c}"),
                    vec![x.to_string(), y.to_string(), z.to_string()],
                    cmp(left, right),
                    Expect::Holds,
                ));
            }
        }
    }
    // powers of one letter commute, so x*y = y*x for multisets of them
    let power = |k: usize| Word::new(vec![Letter::new('x', 1); k]).expect("k >= 1");
    let mut powers: Vec<Multiset<Word>> = vec![Multiset::empty()];
    for i in 1..=2 {
        powers.push(Multiset::new(vec![power(i)]));
        for j in i..=2 {
            powers.push(Multiset::new(vec![power(i), power(j)]));
        }
    }
    for x in &powers {
        for y in &powers {
            out.push(CheckRecord::new(
                "x*y = y*x for commuting entries",
                None,
                format!("|x|={} |y|={}", x.len(), y.len()),
                vec![x.to_string(), y.to_string()],
                cmp(multiset_product(x, y), multiset_product(y, x)),
                Expect::Holds,
            ));
        }
    }
    out.push(misordered_associativity());
    let (x, y) = (letter_multiset('x', 1), letter_multiset('y', 1));
    out.push(CheckRecord::new(
        "x*y = y*x for free letters",
        None,
        "|x|=1 |y|=1",
        vec![x.to_string(), y.to_string()],
        cmp(multiset_product(&x, &y), multiset_product(&y, &x)),
        Expect::Fails,
    ));
    out
}

fn functoriality(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let domain = alphabet();
    let target = [Letter::new('a', 1), Letter::new('a', 2)];
    let budget = cfg.budget;
    let mut out = per_trial(cfg, |t, rng| {
        let s = random_word_sum(rng, &domain, cfg.word_length, 2, 2, cfg.bound);
        let u = random_word_sum(rng, &domain, cfg.word_length, 2, 2, cfg.bound);
        let images: Vec<Word> = domain
            .iter()
            .map(|_| random_word(rng, &target, 2))
            .collect();
        let psi = SemigroupHom::new(domain.iter().copied().zip(images.iter().cloned()));
        let mut inputs = vec![format!("S = {s}"), format!("T = {u}")];
        inputs.extend(
            domain
                .iter()
                .zip(&images)
                .map(|(l, w)| format!("psi({l}) = {w}")),
        );
        let lhs = s
            .product_with_budget(&u, budget)
            .and_then(|su| map_formal(&psi, &su));
        let rhs = map_formal(&psi, &s)
            .and_then(|a| map_formal(&psi, &u).and_then(|b| a.product_with_budget(&b, budget)));
        vec![CheckRecord::new(
            "M(psi)(S*T) = M(psi)(S)*M(psi)(T)",
            Some(t),
            "",
            inputs,
            cmp(lhs, rhs),
            Expect::Holds,
        )]
    });
    // the anti-homomorphism w -> psi(reversed w)
    let psi = SemigroupHom::new([
        (Letter::new('x', 1), Word::letter(target[0])),
        (Letter::new('y', 1), Word::letter(target[1])),
    ]);
    let reversed = |w: &Word| -> Result<Word> {
        let mut letters = w.letters().to_vec();
        letters.reverse();
        psi.apply(&Word::new(letters)?)
    };
    let s = FormalSum::from(letter_multiset('x', 1));
    let u = FormalSum::from(letter_multiset('y', 1));
    let lhs = s.product(&u).and_then(|su| su.try_map(reversed));
    let rhs = s
        .try_map(reversed)
        .and_then(|a| u.try_map(reversed).and_then(|b| a.product(&b)));
    out.push(CheckRecord::new(
        "anti-homomorphism is not functorial",
        None,
        "",
        vec![
            format!("S = {s}"),
            format!("T = {u}"),
            "psi(x1) = a1, psi(y1) = a2, reversed".into(),
        ],
        cmp(lhs, rhs),
        Expect::Fails,
    ));
    out
}

fn product_formula(cfg: &SuiteConfig, f: &Symbolic) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for total in 0..=5 {
        for a in 0..=total {
            let b = total - a;
            let (x, y) = (letter_multiset('x', a), letter_multiset('y', b));
            out.push(CheckRecord::new(
                "f^(x*y) = f^[n](x) f^[m](y)",
                None,
                format!("n={a} m={b}"),
                vec![format!("x = {x}"), format!("y = {y}")],
                product_formula_check(f, &x, &y, cfg.budget),
                Expect::Holds,
            ));
        }
    }
    // a function that sees the word itself rather than its cyclic class
    let g =
        CentralFunction::<Word, Poly>::non_central("word variable", RationalField, |w: &Word| {
            Poly::var(&format!("v({w})"))
        });
    let (x, y) = (letter_multiset('x', 2), letter_multiset('y', 2));
    out.push(CheckRecord::new(
        "product formula for a non-central function",
        None,
        "n=2 m=2",
        vec![format!("x = {x}"), format!("y = {y}")],
        product_formula_check(&g, &x, &y, cfg.budget),
        Expect::Fails,
    ));
    out
}

fn taylor_equiv(cfg: &SuiteConfig, f: &Symbolic) -> Vec<CheckRecord> {
    let top = cfg.caps.oracle.min(5);
    let xs = letters('x', top);
    let mut out: Vec<CheckRecord> = (1..=top)
        .map(|k| {
            CheckRecord::new(
                "f^[n] = permutation sum",
                None,
                format!("n={k}"),
                render(&xs[..k]),
                cmp(f_rec(f, &xs[..k]), taylor_oracle(f, &xs[..k])),
                Expect::Holds,
            )
        })
        .collect();
    let t = |w: &Word| f.eval(w);
    let unsigned = t(&xs[0]) * t(&xs[1]) + t(&xs[0].product(&xs[1]));
    out.push(CheckRecord::new(
        "f^[2] = unsigned permutation sum",
        None,
        "n=2",
        render(&xs[..2]),
        cmp(f_rec(f, &xs[..2]), Ok(unsigned)),
        Expect::Fails,
    ));
    out
}
