//! Acceptance criteria. Runs as a plain binary and prints one line per
//! criterion; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use pseudochar::algebra::{Matrix, SemigroupHom, Word};
use pseudochar::multiset::{
    map_formal, partial_bijection_count, FormalSum, Multiset, DEFAULT_TERM_BUDGET,
};
use pseudochar::pseudochar::{
    char_poly, degree_d_product_check, det_from_pseudocharacter, f_hat, f_rec, taylor_oracle,
    CentralFunction,
};
use pseudochar::scalar::{ModInt, Modulus, Rational, RationalField, Scalar};
use pseudochar::verify::rng::{
    random_matrices, random_matrix, random_word_sum, trial_rng, TrialRng,
};
use pseudochar::verify::{leibniz_char_poly, leibniz_det, report_body};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn trace<S: Scalar>(ctx: &S::Context, n: usize) -> CentralFunction<Matrix<S>, S> {
    CentralFunction::matrix_trace(ctx.clone(), n)
}

fn z(m: u64) -> Modulus {
    Modulus::new(m).unwrap()
}

fn expansions() -> Outcome {
    let ctx = RationalField;
    let mut n_checks = 0;
    for n in [2, 3] {
        let f = trace::<Rational>(&ctx, n);
        for t in 0..100 {
            let xs = random_matrices::<Rational>(&mut trial_rng(1, t), &ctx, n, 6, 3);
            let two = ok(f_rec(&f, &xs[..2]))?;
            ensure(two == expansion2(&xs[0], &xs[1]), || {
                format!("f^[2] differs on {xs:?}")
            })?;
            let three = ok(f_rec(&f, &xs))?;
            ensure(three == expansion3(&xs[0], &xs[1], &xs[2]), || {
                format!("f^[3] differs on {xs:?}")
            })?;
            n_checks += 2;
        }
    }
    Ok(format!("{n_checks} comparisons"))
}

fn distinct(family: char, k: usize) -> Multiset<Word> {
    (1..=k as u32).map(|i| letter(family, i)).collect()
}

fn power_multiset(powers: &[usize]) -> Multiset<Word> {
    powers
        .iter()
        .map(|&p| format!("x1{}", "*x1".repeat(p - 1)).parse().unwrap())
        .collect()
}

fn random_matrix_multiset(rng: &mut TrialRng) -> Multiset<Matrix<Rational>> {
    use rand::Rng;
    let k = rng.random_range(0..=3);
    random_matrices(rng, &RationalField, 2, 4, k)
        .into_iter()
        .collect()
}

fn ring_structure() -> Outcome {
    let fs = |m: Multiset<Word>| FormalSum::from(m);
    let prod = |a: &FormalSum<Word>, b: &FormalSum<Word>| a.product(b).unwrap();
    let one = FormalSum::<Word>::unit();
    let mut assoc = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let (x, y, w) = (
                    fs(distinct('x', a)),
                    fs(distinct('y', b)),
                    fs(distinct('z', c)),
                );
                let left = prod(&prod(&x, &y), &w);
                let right = prod(&x, &prod(&y, &w));
                ensure(left == right, || {
                    format!("associativity fails for cardinalities {a},{b},{c}")
                })?;
                assoc += 1;
            }
        }
        let x = fs(distinct('x', a));
        ensure(prod(&one, &x) == x && prod(&x, &one) == x, || {
            format!("unit law fails at cardinality {a}")
        })?;
    }
    let two = |f| fs(distinct(f, 2));
    let (x, y, w) = (two('x'), two('y'), two('z'));
    ensure(prod(&prod(&x, &y), &w) == prod(&x, &prod(&y, &w)), || {
        "2,2,2 case".into()
    })?;

    // commutativity where the entries commute: powers of one letter
    let shapes: [&[usize]; 7] = [&[], &[1], &[2], &[1, 1], &[1, 2], &[2, 2, 1], &[1, 3, 2]];
    let mut comm = 0;
    for p in shapes {
        for q in shapes {
            let (x, y) = (fs(power_multiset(p)), fs(power_multiset(q)));
            ensure(prod(&x, &y) == prod(&y, &x), || {
                format!("commutativity fails for {p:?}, {q:?}")
            })?;
            comm += 1;
        }
    }
    // for non-commuting letters the two orders differ
    let (x1, y1) = (fs(distinct('x', 1)), fs(distinct('y', 1)));
    ensure(prod(&x1, &y1) != prod(&y1, &x1), || {
        "free-letter commutativity control held".into()
    })?;

    for t in 0..100 {
        let mut rng = trial_rng(2, t);
        let [x, y, w] = [(); 3].map(|_| FormalSum::from(random_matrix_multiset(&mut rng)));
        let left = x.product(&y).and_then(|xy| xy.product(&w));
        let right = y.product(&w).and_then(|yw| x.product(&yw));
        ensure(ok(left)? == ok(right)?, || {
            format!("matrix associativity fails in trial {t}")
        })?;
    }

    for ((n, m), expected) in [((2, 1), 3), ((2, 2), 7), ((3, 3), 34)] {
        let brute = count_partial_injections(n, m);
        let terms = prod(&fs(distinct('x', n)), &fs(distinct('y', m))).len() as u64;
        let lib = partial_bijection_count(n, m) as u64;
        ensure(
            brute == expected && terms == expected && lib == expected,
            || {
                format!(
                    "({n},{m}): brute {brute}, terms {terms}, library {lib}, expected {expected}"
                )
            },
        )?;
    }
    Ok(format!(
        "{assoc} exhaustive triples, {comm} commuting pairs, 100 matrix triples, counts 3/7/34"
    ))
}

fn functoriality_in<S: Scalar>(ctx: &S::Context, n: usize, seed: u64) -> Result<(), String> {
    let alphabet: Vec<_> = ["x1", "x2", "y1", "y2"]
        .iter()
        .map(|l| l.parse().unwrap())
        .collect();
    for t in 0..100 {
        let mut rng = trial_rng(seed, t);
        let s = random_word_sum(&mut rng, &alphabet, 3, 2, 2, 3);
        let u = random_word_sum(&mut rng, &alphabet, 3, 2, 2, 3);
        let psi = SemigroupHom::new(
            alphabet
                .iter()
                .map(|&l| (l, random_matrix::<S>(&mut rng, ctx, n, 3))),
        );
        let left = ok(map_formal(&psi, &ok(s.product(&u))?))?;
        let right = ok(ok(map_formal(&psi, &s))?.product(&ok(map_formal(&psi, &u))?))?;
        ensure(left == right, || {
            format!("trial {t}: M(psi)(S x T) differs for S = {s}, T = {u}")
        })?;
    }
    Ok(())
}

fn functoriality() -> Outcome {
    functoriality_in::<Rational>(&RationalField, 2, 3)?;
    functoriality_in::<ModInt>(&z(7), 3, 4)?;
    Ok("100 sums into M2(Q), 100 into M3(Z/7)".into())
}

fn product_formula_in<S: Scalar>(ctx: &S::Context, n: usize, seed: u64) -> Result<usize, String> {
    let f = trace::<S>(ctx, n);
    let mut count = 0;
    for a in 0..=6usize {
        for b in 0..=6 - a {
            for t in 0..50 {
                let mut rng = trial_rng(seed, (a * 7 + b) as u64 * 1000 + t);
                let xs = random_matrices::<S>(&mut rng, ctx, n, 3, a);
                let ys = random_matrices::<S>(&mut rng, ctx, n, 3, b);
                let form = |v: &[Matrix<S>]| match small_form(ctx, v) {
                    Some(s) => Ok(s),
                    None => ok(f_rec(&f, v)),
                };
                let rhs = form(&xs)? * form(&ys)?;
                let x: Multiset<_> = xs.into_iter().collect();
                let y: Multiset<_> = ys.into_iter().collect();
                let product = ok(FormalSum::from(x.clone())
                    .product_with_budget(&FormalSum::from(y.clone()), DEFAULT_TERM_BUDGET))?;
                let lhs = ok(f_hat(&f, &product))?;
                ensure(lhs == rhs, || {
                    format!("(n,m) = ({a},{b}) over {ctx}: {lhs} != {rhs} for x = {x}, y = {y}")
                })?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn product_formula() -> Outcome {
    let mut total = product_formula_in::<Rational>(&RationalField, 2, 5)?;
    total += product_formula_in::<Rational>(&RationalField, 3, 6)?;
    total += product_formula_in::<ModInt>(&z(101), 2, 7)?;
    Ok(format!("{total} tuples, 50 per (n,m) and ring"))
}

fn sum_over_s_d<S: Scalar>(ctx: &S::Context, xs: &[Matrix<S>], ys: &[Matrix<S>]) -> S {
    let d = xs.len();
    let perms: Vec<Vec<usize>> = match d {
        1 => vec![vec![0]],
        2 => vec![vec![0, 1], vec![1, 0]],
        3 => vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ],
        _ => unreachable!(),
    };
    perms.iter().fold(S::zero_in(ctx), |acc, p| {
        let args: Vec<_> = (0..d).map(|i| mul(&xs[i], &ys[p[i]])).collect();
        acc + small_form(ctx, &args).unwrap()
    })
}

fn degree_d_in<S: Scalar>(ctx: &S::Context, seed: u64) -> Result<(), String> {
    for d in 1..=3 {
        let f = ok(trace::<S>(ctx, d).with_dimension(d))?;
        for t in 0..100 {
            let mut rng = trial_rng(seed, d as u64 * 1000 + t);
            let xs = random_matrices::<S>(&mut rng, ctx, d, 4, d);
            let ys = random_matrices::<S>(&mut rng, ctx, d, 4, d);
            let lhs = small_form(ctx, &xs).unwrap() * small_form(ctx, &ys).unwrap();
            let rhs = sum_over_s_d(ctx, &xs, &ys);
            ensure(lhs == rhs, || format!("d={d} over {ctx}: {lhs} != {rhs}"))?;
            let lib = ok(degree_d_product_check(&f, &xs, &ys))?;
            ensure(lib.lhs == lhs && lib.rhs == rhs, || {
                format!("library disagrees at d={d}, trial {t}")
            })?;
        }
        let wrong = ok(trace::<S>(ctx, d + 1).with_dimension(d))?;
        let ones = vec![Matrix::identity(ctx, d + 1); d];
        let control = ok(degree_d_product_check(&wrong, &ones, &ones))?;
        ensure(control.lhs != control.rhs, || {
            format!("control held for M_{} declared {d}", d + 1)
        })?;
    }
    Ok(())
}

fn degree_d() -> Outcome {
    degree_d_in::<Rational>(&RationalField, 8)?;
    degree_d_in::<ModInt>(&z(7), 9)?;
    Ok("d = 1,2,3 over Q and Z/7, 100 tuples each; wrong-dimension control fails".into())
}

fn determinant_in<S: Scalar>(ctx: &S::Context, seed: u64) -> Result<(), String> {
    for d in 1..=3 {
        let f = ok(CentralFunction::<Matrix<S>, S>::trace_pseudocharacter(
            ctx.clone(),
            d,
        ))?;
        for t in 0..200 {
            let mut rng = trial_rng(seed, d as u64 * 1000 + t);
            let x = random_matrix::<S>(&mut rng, ctx, d, 9);
            let y = random_matrix::<S>(&mut rng, ctx, d, 9);
            let det = det_small(&x);
            let df = ok(det_from_pseudocharacter(&f, &x))?;
            ensure(df == det && ok(leibniz_det(&x))? == det, || {
                format!("D_f({x}) = {df}, det = {det}")
            })?;
            let dxy = ok(det_from_pseudocharacter(&f, &mul(&x, &y)))?;
            ensure(
                dxy == df.clone() * ok(det_from_pseudocharacter(&f, &y))?,
                || format!("D_f not multiplicative on {x}, {y}"),
            )?;
            let cp = ok(char_poly(&f, &x))?;
            let c = cp.coefficients();
            ensure(c == ok(leibniz_char_poly(&x))?.as_slice(), || {
                format!("char poly of {x}: {cp}")
            })?;
            for a in 0..=d as i64 {
                let at = c
                    .iter()
                    .rev()
                    .fold(S::zero_in(ctx), |acc, ck| acc * S::from_i64_in(ctx, a) + ck);
                ensure(at == det_small(&shifted(ctx, a, &x)), || {
                    format!("char poly of {x} wrong at t = {a}")
                })?;
            }
            ensure(-c[d - 1].clone() == tr(&x), || {
                format!("-c_(d-1) != tr for {x}")
            })?;
        }
    }
    Ok(())
}

fn determinant() -> Outcome {
    determinant_in::<Rational>(&RationalField, 10)?;
    determinant_in::<ModInt>(&z(101), 11)?;
    Ok("d = 1,2,3, 200 matrices each over Q and Z/101".into())
}

fn units() -> Outcome {
    let ctx = RationalField;
    for n in [2usize, 3] {
        let f = trace::<Rational>(&ctx, n);
        let one = Matrix::identity(&ctx, n);
        for t in 0..100 {
            let x = random_matrix::<Rational>(&mut trial_rng(12, n as u64 * 1000 + t), &ctx, n, 9);
            for k in 1..=6 {
                let mut args = vec![x.clone()];
                args.extend(std::iter::repeat_n(one.clone(), k - 1));
                let expected =
                    (1..k as i64).fold(tr(&x), |acc, i| acc * Rational::integer(n as i64 - i));
                let got = ok(f_rec(&f, &args))?;
                ensure(got == expected, || {
                    format!("n={k} on M_{n}: {got} != {expected}")
                })?;
            }
        }
    }
    Ok("n <= 6 on M2 and M3, 100 matrices each".into())
}

fn oracle_in<S: Scalar>(ctx: &S::Context, seed: u64) -> Result<(), String> {
    for size in [2, 3] {
        let f = trace::<S>(ctx, size);
        for n in 1..=6 {
            for t in 0..50 {
                let xs = random_matrices::<S>(
                    &mut trial_rng(seed, (size * 10 + n) as u64 * 1000 + t),
                    ctx,
                    size,
                    3,
                    n,
                );
                let (rec, orc) = (ok(f_rec(&f, &xs))?, ok(taylor_oracle(&f, &xs))?);
                ensure(rec == orc, || {
                    format!("n={n} on M_{size} over {ctx}: {rec} != {orc}")
                })?;
            }
        }
    }
    Ok(())
}

fn oracle() -> Outcome {
    oracle_in::<Rational>(&RationalField, 13)?;
    oracle_in::<ModInt>(&z(101), 14)?;
    Ok("n <= 6, 50 tuples per n, M2 and M3 over Q and Z/101".into())
}

fn vanishing() -> Outcome {
    let ctx = RationalField;
    for d in 1..=3 {
        let f = trace::<Rational>(&ctx, d);
        for k in d + 1..=d + 2 {
            for t in 0..100 {
                let xs = random_matrices::<Rational>(
                    &mut trial_rng(15, (d * 10 + k) as u64 * 1000 + t),
                    &ctx,
                    d,
                    5,
                    k,
                );
                let v = ok(f_rec(&f, &xs))?;
                ensure(v.is_zero(), || format!("f^[{k}] = {v} on M_{d}"))?;
            }
        }
    }
    Ok("d = 1,2,3, k = d+1, d+2, 100 tuples each".into())
}

fn reproducibility() -> Outcome {
    let dir = ok(tempfile::tempdir())?;
    let mut bodies = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.json"));
        let status = ok(Command::new(env!("CARGO_BIN_EXE_pseudochar"))
            .args(["check", "all", "--seed", "42", "--quiet", "--json"])
            .arg(&path)
            .status())?;
        ensure(status.code() == Some(0), || {
            format!("run {run} exited with {status}")
        })?;
        bodies.push(ok(report_body(&ok(std::fs::read_to_string(&path))?))?);
    }
    ensure(bodies[0] == bodies[1], || "report bodies differ".into())?;
    Ok(format!("identical bodies, {} bytes", bodies[0].len()))
}

struct Criterion {
    name: &'static str,
    limit: Option<u64>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "low-degree expansions",
            limit: Some(5),
            run: expansions,
        },
        Criterion {
            name: "multiset ring structure",
            limit: Some(30),
            run: ring_structure,
        },
        Criterion {
            name: "functoriality",
            limit: None,
            run: functoriality,
        },
        Criterion {
            name: "product formula",
            limit: Some(60),
            run: product_formula,
        },
        Criterion {
            name: "degree-d formula",
            limit: None,
            run: degree_d,
        },
        Criterion {
            name: "determinant and characteristic polynomial",
            limit: Some(60),
            run: determinant,
        },
        Criterion {
            name: "unit arguments",
            limit: None,
            run: units,
        },
        Criterion {
            name: "oracle equivalence",
            limit: None,
            run: oracle,
        },
        Criterion {
            name: "vanishing",
            limit: None,
            run: vanishing,
        },
        Criterion {
            name: "reproducibility",
            limit: None,
            run: reproducibility,
        },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > Duration::from_secs(limit) => Err(format!(
                "took {:.1} s, limit {limit} s",
                elapsed.as_secs_f64()
            )),
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e)
            }
        };
        println!(
            "{tag} {:>2} {:<42} {:>6.2} s  {detail}",
            i + 1,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
