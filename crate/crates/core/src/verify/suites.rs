//! Suite bodies over matrix algebras `M_n(A)`.

use rand::Rng;
use rayon::prelude::*;

use super::config::{Suite, SuiteConfig};
use super::oracle::{leibniz_char_poly, leibniz_det};
use super::report::{CheckRecord, Expect};
use super::rng::{
    random_matrices, random_matrix, random_scalar, random_word_sum, trial_rng, TrialRng,
};
use crate::algebra::{Algebra, Letter, Matrix, Semigroup, SemigroupHom, Word};
use crate::error::Result;
use crate::multiset::{map_formal, FormalSum, Multiset};
use crate::pseudochar::{
    char_poly, char_poly_by_interpolation, check_pseudocharacter, degree_d_product_check,
    det_from_pseudocharacter, f_rec, multiplicativity_check, product_formula_check, taylor_oracle,
    trace_roundtrip_check, unit_arguments_check, CentralFunction, CharPoly, Comparison,
};
use crate::scalar::Scalar;

type Trace<S> = CentralFunction<Matrix<S>, S>;

pub(crate) fn cmp<V>(lhs: Result<V>, rhs: Result<V>) -> Result<Comparison<V>> {
    Ok(Comparison {
        lhs: lhs?,
        rhs: rhs?,
    })
}

pub(crate) fn render<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Runs `body` for every trial in parallel and concatenates the records in
/// trial order.
pub(crate) fn per_trial(
    cfg: &SuiteConfig,
    body: impl Fn(u64, &mut TrialRng) -> Vec<CheckRecord> + Sync,
) -> Vec<CheckRecord> {
    let per: Vec<Vec<CheckRecord>> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| body(t, &mut trial_rng(cfg.seed, t)))
        .collect();
    per.into_iter().flatten().collect()
}

/// Letters used by random word sums.
pub(crate) fn alphabet() -> Vec<Letter> {
    vec![
        Letter::new('x', 1),
        Letter::new('x', 2),
        Letter::new('y', 1),
        Letter::new('y', 2),
    ]
}

pub(crate) fn letter_multiset(family: char, n: usize) -> Multiset<Word> {
    (1..=n as u32)
        .map(|i| Word::letter(Letter::new(family, i)))
        .collect()
}

/// All checks of `cfg.suite` over `M_n` with entries in the ring of `ctx`.
pub(crate) fn run<S: Scalar>(cfg: &SuiteConfig, ctx: S::Context) -> Vec<CheckRecord> {
    let m = MatrixSuites::<S> { cfg, ctx };
    match cfg.suite {
        Suite::Expansions => m.expansions(),
        Suite::Assoc => m.assoc(),
        Suite::Functoriality => m.functoriality(),
        Suite::ProductFormula => m.product_formula(),
        Suite::DegreeD => m.degree_d(),
        Suite::DetMult => m.det_mult(),
        Suite::Charpoly => m.charpoly(),
        Suite::Units => m.units(),
        Suite::TaylorEquiv => m.taylor_equiv(),
        Suite::Vanishing => m.vanishing(),
        Suite::PseudocharAxioms => m.axioms(),
    }
}

struct MatrixSuites<'a, S: Scalar> {
    cfg: &'a SuiteConfig,
    ctx: S::Context,
}

impl<S: Scalar> MatrixSuites<'_, S> {
    fn n(&self) -> usize {
        self.cfg.size
    }

    fn trace_on(&self, n: usize) -> Trace<S> {
        Trace::matrix_trace(self.ctx.clone(), n).with_caps(self.cfg.caps)
    }

    /// The trace on `M_n` with dimension `d` declared.
    fn declared(&self, n: usize, d: usize) -> Result<Trace<S>> {
        self.trace_on(n).with_dimension(d)
    }

    fn random(&self, rng: &mut TrialRng, count: usize) -> Vec<Matrix<S>> {
        random_matrices(rng, &self.ctx, self.n(), self.cfg.bound, count)
    }

    fn identity(&self, n: usize) -> Matrix<S> {
        Matrix::identity(&self.ctx, n)
    }

    fn int(&self, a: i64) -> S {
        S::from_i64_in(&self.ctx, a)
    }

    fn expansions(&self) -> Vec<CheckRecord> {
        let f = self.trace_on(self.n());
        let mut out = per_trial(self.cfg, |t, rng| {
            let xs = self.random(rng, 3);
            vec![
                CheckRecord::new(
                    "f^[2] closed form",
                    Some(t),
                    "n=2",
                    render(&xs[..2]),
                    cmp(f_rec(&f, &xs[..2]), Ok(second_form(&f, &xs))),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "f^[3] six-term form",
                    Some(t),
                    "n=3",
                    render(&xs),
                    cmp(f_rec(&f, &xs), Ok(third_form(&f, &xs, false))),
                    Expect::Holds,
                ),
            ]
        });
        let ones = vec![self.identity(self.n()); 3];
        out.push(CheckRecord::new(
            "f^[3] with last sign flipped",
            None,
            "n=3",
            render(&ones),
            cmp(f_rec(&f, &ones), Ok(third_form(&f, &ones, true))),
            Expect::Fails,
        ));
        out
    }

    fn assoc(&self) -> Vec<CheckRecord> {
        let budget = self.cfg.budget;
        let mut out = per_trial(self.cfg, |t, rng| {
            let sizes: Vec<usize> = (0..3).map(|_| rng.random_range(0..=3)).collect();
            let parts: Vec<Multiset<Matrix<S>>> = sizes
                .iter()
                .map(|&k| self.random(rng, k).into_iter().collect())
                .collect();
            let [x, y, z] = [0, 1, 2].map(|i| FormalSum::from(parts[i].clone()));
            let params = format!("|x|={} |y|={} |z|={}", sizes[0], sizes[1], sizes[2]);
            let inputs: Vec<String> = parts.iter().map(ToString::to_string).collect();
            let left = x
                .product_with_budget(&y, budget)
                .and_then(|xy| xy.product_with_budget(&z, budget));
            let right = y
                .product_with_budget(&z, budget)
                .and_then(|yz| x.product_with_budget(&yz, budget));
            let unit = FormalSum::unit();
            vec![
                CheckRecord::new(
                    "(x*y)*z = x*(y*z)",
                    Some(t),
                    params.clone(),
                    inputs.clone(),
                    cmp(left, right),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "x*{} = x",
                    Some(t),
                    params.clone(),
                    inputs[..1].to_vec(),
                    cmp(x.product(&unit), Ok(x.clone())),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "{}*x = x",
                    Some(t),
                    params,
                    inputs[..1].to_vec(),
                    cmp(unit.product(&x), Ok(x.clone())),
                    Expect::Holds,
                ),
            ]
        });
        out.push(misordered_associativity());
        out
    }

    fn functoriality(&self) -> Vec<CheckRecord> {
        let letters = alphabet();
        let budget = self.cfg.budget;
        let mut out = per_trial(self.cfg, |t, rng| {
            let s = random_word_sum(rng, &letters, self.cfg.word_length, 2, 2, self.cfg.bound);
            let u = random_word_sum(rng, &letters, self.cfg.word_length, 2, 2, self.cfg.bound);
            let images = self.random(rng, letters.len());
            let psi = SemigroupHom::new(letters.iter().copied().zip(images.iter().cloned()));
            let mut inputs = vec![format!("S = {s}"), format!("T = {u}")];
            inputs.extend(
                letters
                    .iter()
                    .zip(&images)
                    .map(|(l, m)| format!("psi({l}) = {m}")),
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
        // w -> 2^(|w|-1) psi(w) is not multiplicative
        let one = self.identity(self.n());
        let weighted =
            |w: &Word| -> Result<Matrix<S>> { Ok(one.scale(&self.int(2).pow(w.len() as u32 - 1))) };
        let s = FormalSum::from(letter_multiset('x', 1));
        let u = FormalSum::from(letter_multiset('y', 1));
        let lhs = s.product(&u).and_then(|su| su.try_map(weighted));
        let rhs = s
            .try_map(weighted)
            .and_then(|a| u.try_map(weighted).and_then(|b| a.product(&b)));
        out.push(CheckRecord::new(
            "length-weighted map is not functorial",
            None,
            "",
            vec![
                format!("S = {s}"),
                format!("T = {u}"),
                format!("psi(w) = 2^(|w|-1) {one}"),
            ],
            cmp(lhs, rhs),
            Expect::Fails,
        ));
        out
    }

    fn product_formula(&self) -> Vec<CheckRecord> {
        let f = self.trace_on(self.n());
        let square =
            CentralFunction::power_trace(self.ctx.clone(), self.n(), 2).with_caps(self.cfg.caps);
        let budget = self.cfg.budget;
        let mut out = per_trial(self.cfg, |t, rng| {
            let xs = self.random(rng, 6);
            let ys = self.random(rng, 6);
            let mut recs = Vec::new();
            for total in 0..=6 {
                for a in 0..=total {
                    let b = total - a;
                    let x: Multiset<_> = xs[..a].iter().cloned().collect();
                    let y: Multiset<_> = ys[..b].iter().cloned().collect();
                    let params = format!("n={a} m={b}");
                    let inputs = vec![format!("x = {x}"), format!("y = {y}")];
                    recs.push(CheckRecord::new(
                        "f^(x*y) = f^[n](x) f^[m](y)",
                        Some(t),
                        params.clone(),
                        inputs.clone(),
                        product_formula_check(&f, &x, &y, budget),
                        Expect::Holds,
                    ));
                    if total <= 4 {
                        recs.push(CheckRecord::new(
                            "product formula for tr(x^2)",
                            Some(t),
                            params,
                            inputs,
                            product_formula_check(&square, &x, &y, budget),
                            Expect::Holds,
                        ));
                    }
                }
            }
            recs
        });
        // a non-central function: the top-left entry of a 2x2 matrix; over Q the
        // two sides are 4 and 3, so they differ in every ring
        let g = CentralFunction::non_central("x[0][0]", self.ctx.clone(), |m: &Matrix<S>| {
            m.get(0, 0).clone()
        });
        let mk = |rows: &[&[i64]]| Matrix::from_i64_rows(&self.ctx, rows);
        let x: Multiset<_> = [mk(&[&[1, 2], &[3, 4]]), mk(&[&[1, -1], &[0, 2]])]
            .into_iter()
            .collect();
        let y: Multiset<_> = [mk(&[&[1, -1], &[0, 2]]), mk(&[&[1, 0], &[1, 1]])]
            .into_iter()
            .collect();
        out.push(CheckRecord::new(
            "product formula for non-central x[0][0]",
            None,
            "n=2 m=2",
            vec![format!("x = {x}"), format!("y = {y}")],
            product_formula_check(&g, &x, &y, budget),
            Expect::Fails,
        ));
        out
    }

    fn degree_d(&self) -> Vec<CheckRecord> {
        let d = self.cfg.dim;
        let f = self.declared(self.n(), d);
        let mut out = per_trial(self.cfg, |t, rng| {
            let xs = self.random(rng, d);
            let ys = self.random(rng, d);
            let mut inputs = render(&xs);
            inputs.extend(render(&ys));
            let result = f.clone().and_then(|f| degree_d_product_check(&f, &xs, &ys));
            vec![CheckRecord::new(
                "f^[d](x) f^[d](y) = sum_sigma f^[d](x_i y_sigma(i))",
                Some(t),
                format!("d={d}"),
                inputs,
                result,
                Expect::Holds,
            )]
        });
        // the trace on M_(d+1) declared with dimension d
        let ones = vec![self.identity(d + 1); d];
        let wrong = self
            .declared(d + 1, d)
            .and_then(|g| degree_d_product_check(&g, &ones, &ones));
        out.push(CheckRecord::new(
            "degree-d formula for trace on M_(d+1) declared d",
            None,
            format!("d={d}"),
            render(&ones),
            wrong,
            Expect::Fails,
        ));
        out
    }

    fn det_mult(&self) -> Vec<CheckRecord> {
        let d = self.cfg.dim;
        let params = format!("d={d}");
        let f = match self.declared(self.n(), d) {
            Ok(f) => f,
            Err(e) => {
                return vec![CheckRecord::new::<S>(
                    "declare dimension",
                    None,
                    params,
                    vec![],
                    Err(e),
                    Expect::Holds,
                )]
            }
        };
        let det = |x: &Matrix<S>| det_from_pseudocharacter(&f, x);
        let mut out = per_trial(self.cfg, |t, rng| {
            let xs = self.random(rng, 2);
            let a = random_scalar::<S>(rng, &self.ctx, self.cfg.bound);
            let (x, y) = (&xs[0], &xs[1]);
            vec![
                CheckRecord::new(
                    "D_f(x) = det(x)",
                    Some(t),
                    params.clone(),
                    render(&xs[..1]),
                    cmp(det(x), leibniz_det(x)),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "D_f(xy) = D_f(x) D_f(y)",
                    Some(t),
                    params.clone(),
                    render(&xs),
                    multiplicativity_check(&f, x, y),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "D_f(a x) = a^d D_f(x)",
                    Some(t),
                    format!("{params} a={a}"),
                    render(&xs[..1]),
                    cmp(det(&x.scale(&a)), det(x).map(|v| a.pow(d as u32) * v)),
                    Expect::Holds,
                ),
            ]
        });
        let one = self.identity(self.n());
        out.push(CheckRecord::new(
            "D_f(1) = 1",
            None,
            params.clone(),
            render(std::slice::from_ref(&one)),
            cmp(det(&one), Ok(self.int(1))),
            Expect::Holds,
        ));
        let big = self.identity(d + 1);
        let wrong = self
            .declared(d + 1, d)
            .and_then(|g| cmp(det_from_pseudocharacter(&g, &big), Ok(self.int(1))));
        out.push(CheckRecord::new(
            "D_f(1) = 1 for trace on M_(d+1) declared d",
            None,
            params,
            render(&[big]),
            wrong,
            Expect::Fails,
        ));
        out
    }

    fn charpoly(&self) -> Vec<CheckRecord> {
        let d = self.cfg.dim;
        let params = format!("d={d}");
        let f = match self.declared(self.n(), d) {
            Ok(f) => f,
            Err(e) => {
                return vec![CheckRecord::new::<S>(
                    "declare dimension",
                    None,
                    params,
                    vec![],
                    Err(e),
                    Expect::Holds,
                )]
            }
        };
        let mut out = per_trial(self.cfg, |t, rng| {
            let x = random_matrix::<S>(rng, &self.ctx, self.n(), self.cfg.bound);
            let inputs = render(std::slice::from_ref(&x));
            let p = char_poly(&f, &x);
            let sign = if d.is_multiple_of(2) { 1 } else { -1 };
            vec![
                CheckRecord::new(
                    "D_f(t-x) = det(tI-x)",
                    Some(t),
                    params.clone(),
                    inputs.clone(),
                    cmp(p.clone(), leibniz_char_poly(&x).map(CharPoly::new)),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "interpolation agrees",
                    Some(t),
                    params.clone(),
                    inputs.clone(),
                    cmp(p.clone(), char_poly_by_interpolation(&f, &x)),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "-c_(d-1) = f(x)",
                    Some(t),
                    params.clone(),
                    inputs.clone(),
                    cmp(
                        p.clone().map(|p| p.trace().expect("degree d >= 1")),
                        Ok(f.eval(&x)),
                    ),
                    Expect::Holds,
                ),
                CheckRecord::new(
                    "c_0 = (-1)^d D_f(x)",
                    Some(t),
                    params.clone(),
                    inputs,
                    cmp(
                        p.map(|p| p.coefficients()[0].clone()),
                        det_from_pseudocharacter(&f, &x).map(|v| self.int(sign) * v),
                    ),
                    Expect::Holds,
                ),
            ]
        });
        let fixed = [self.identity(self.n()), Matrix::zero(&self.ctx, self.n())];
        match trace_roundtrip_check(&f, &fixed) {
            Ok(entries) => out.extend(entries.into_iter().map(|e| {
                let c = Comparison {
                    lhs: e.recovered,
                    rhs: e.trace,
                };
                CheckRecord::new(
                    "trace round trip",
                    None,
                    params.clone(),
                    vec![e.input],
                    Ok(c),
                    Expect::Holds,
                )
            })),
            Err(e) => out.push(CheckRecord::new::<S>(
                "trace round trip",
                None,
                params.clone(),
                vec![],
                Err(e),
                Expect::Holds,
            )),
        }
        // 2 * trace: f(1) = 2n, so D_f(t - 1) is not monic
        let two = self.int(2);
        let doubled = CentralFunction::new("2 tr", self.ctx.clone(), move |m: &Matrix<S>| {
            two.clone() * m.trace()
        })
        .with_unit(self.identity(self.n()))
        .with_dimension(d);
        let one = self.identity(self.n());
        let lead = doubled
            .and_then(|g| char_poly(&g, &one))
            .map(|p| p.coefficients()[d].clone());
        out.push(CheckRecord::new(
            "c_d = 1 for 2 tr",
            None,
            params,
            render(&[one]),
            cmp(lead, Ok(self.int(1))),
            Expect::Fails,
        ));
        out
    }

    fn units(&self) -> Vec<CheckRecord> {
        let f = self.trace_on(self.n());
        let mut out = per_trial(self.cfg, |t, rng| {
            let x = random_matrix::<S>(rng, &self.ctx, self.n(), self.cfg.bound);
            (1..=6)
                .map(|k| {
                    CheckRecord::new(
                        "f^[n](x,1,..,1) = f(x) prod (f(1)-i)",
                        Some(t),
                        format!("n={k}"),
                        render(std::slice::from_ref(&x)),
                        unit_arguments_check(&f, &x, k),
                        Expect::Holds,
                    )
                })
                .collect()
        });
        // shifted product f(x)(f(1) - i + 1) at n = 2, x = 1
        let one = self.identity(self.n());
        let s = f.eval(&one);
        out.push(CheckRecord::new(
            "unit arguments with shifted factors",
            None,
            "n=2",
            render(std::slice::from_ref(&one)),
            cmp(f_rec(&f, &[one.clone(), one]), Ok(s.clone() * s)),
            Expect::Fails,
        ));
        out
    }

    fn taylor_equiv(&self) -> Vec<CheckRecord> {
        let f = self.trace_on(self.n());
        let top = self.cfg.caps.oracle.min(6);
        let mut out = per_trial(self.cfg, |t, rng| {
            (1..=top)
                .map(|k| {
                    let xs = self.random(rng, k);
                    CheckRecord::new(
                        "f^[n] = permutation sum",
                        Some(t),
                        format!("n={k}"),
                        render(&xs),
                        cmp(f_rec(&f, &xs), taylor_oracle(&f, &xs)),
                        Expect::Holds,
                    )
                })
                .collect()
        });
        let ones = vec![self.identity(self.n()); 2];
        let s = f.eval(&ones[0]);
        // unsigned sum at (1, 1): f(1)^2 + f(1)
        out.push(CheckRecord::new(
            "f^[2] = unsigned permutation sum",
            None,
            "n=2",
            render(&ones),
            cmp(f_rec(&f, &ones), Ok(s.clone() * &s + &s)),
            Expect::Fails,
        ));
        out
    }

    fn vanishing(&self) -> Vec<CheckRecord> {
        let n = self.n();
        let f = self.trace_on(n);
        let mut out = per_trial(self.cfg, |t, rng| {
            (n + 1..=n + 2)
                .map(|k| {
                    let xs = self.random(rng, k);
                    CheckRecord::new(
                        "f^[k] = 0 for k > d",
                        Some(t),
                        format!("k={k}"),
                        render(&xs),
                        cmp(f_rec(&f, &xs), Ok(self.int(0))),
                        Expect::Holds,
                    )
                })
                .collect()
        });
        let ones = vec![self.identity(n); n];
        out.push(CheckRecord::new(
            "f^[d](1,..,1) = 0",
            None,
            format!("k={n}"),
            render(&ones),
            cmp(f_rec(&f, &ones), Ok(self.int(0))),
            Expect::Fails,
        ));
        out
    }

    fn axioms(&self) -> Vec<CheckRecord> {
        let d = self.cfg.dim;
        let params = format!("d={d}");
        let f = self.declared(self.n(), d);
        let mut out = per_trial(self.cfg, |t, rng| {
            let mut samples = self.random(rng, 4);
            samples.push(self.identity(self.n()));
            let inputs = render(&samples);
            let f = match &f {
                Ok(f) => f,
                Err(e) => {
                    return vec![CheckRecord::new::<S>(
                        "declare dimension",
                        Some(t),
                        params.clone(),
                        inputs,
                        Err(e.clone()),
                        Expect::Holds,
                    )]
                }
            };
            let report = check_pseudocharacter(f, &samples);
            let mut recs: Vec<CheckRecord> = report
                .checks
                .iter()
                .map(|c| {
                    CheckRecord::outcome(
                        c.name,
                        Some(t),
                        params.clone(),
                        inputs.clone(),
                        c.passed,
                        c.detail.clone(),
                        Expect::Holds,
                    )
                })
                .collect();
            match trace_roundtrip_check(f, &samples) {
                Ok(entries) => recs.extend(entries.into_iter().map(|e| {
                    let c = Comparison {
                        lhs: e.recovered,
                        rhs: e.trace,
                    };
                    CheckRecord::new(
                        "trace round trip",
                        Some(t),
                        params.clone(),
                        vec![e.input],
                        Ok(c),
                        Expect::Holds,
                    )
                })),
                Err(e) => recs.push(CheckRecord::new::<S>(
                    "trace round trip",
                    Some(t),
                    params.clone(),
                    vec![],
                    Err(e),
                    Expect::Holds,
                )),
            }
            recs
        });
        // declared one too high
        let samples = vec![self.identity(self.n())];
        let (holds, detail) = match self.declared(self.n(), d + 1) {
            Ok(g) => {
                let r = check_pseudocharacter(&g, &samples);
                (
                    r.passed(),
                    r.checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.detail.clone())
                        .collect::<Vec<_>>()
                        .join("; "),
                )
            }
            Err(e) => (false, e.to_string()),
        };
        out.push(CheckRecord::outcome(
            "axioms with dimension d+1",
            None,
            format!("d={}", d + 1),
            render(&samples),
            holds,
            detail,
            Expect::Fails,
        ));
        out
    }
}

/// `f(x1)f(x2) - f(x1x2)`
pub(crate) fn second_form<T: Semigroup, S: Scalar>(f: &CentralFunction<T, S>, xs: &[T]) -> S {
    f.eval(&xs[0]) * f.eval(&xs[1]) - f.eval(&xs[0].product(&xs[1]))
}

/// The six-term expansion of `f^[3]`; `flip` negates the last term.
pub(crate) fn third_form<T: Semigroup, S: Scalar>(
    f: &CentralFunction<T, S>,
    xs: &[T],
    flip: bool,
) -> S {
    let t = |x: &T| f.eval(x);
    let (x1, x2, x3) = (&xs[0], &xs[1], &xs[2]);
    let v = t(x1) * t(x2) * t(x3)
        - t(&x1.product(x2)) * t(x3)
        - t(&x1.product(x3)) * t(x2)
        - t(&x2.product(x3)) * t(x1)
        + t(&x1.product(x2).product(x3));
    let last = t(&x1.product(x3).product(x2));
    if flip {
        v - last
    } else {
        v + last
    }
}

/// `(x*y)*z` against `x*(z*y)` on single letters: the factors of the inner
/// product are swapped, so the matched words differ.
pub(crate) fn misordered_associativity() -> CheckRecord {
    let [x, y, z] = ['x', 'y', 'z'].map(|c| FormalSum::from(letter_multiset(c, 1)));
    let left = x.product(&y).and_then(|xy| xy.product(&z));
    let right = z.product(&y).and_then(|zy| x.product(&zy));
    CheckRecord::new(
        "(x*y)*z = x*(z*y)",
        None,
        "|x|=1 |y|=1 |z|=1",
        vec![x.to_string(), y.to_string(), z.to_string()],
        cmp(left, right),
        Expect::Fails,
    )
}
