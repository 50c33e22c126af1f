//! The `pseudochar` command line.
//!
//! ```text
//! pseudochar check <suite>|all [--dim d] [--ring rational|mod:<m>|words] [--size n]
//!                  [--trials t] [--seed s] [--bound b] [--budget k]
//!                  [--config file] [--json path] [--quiet]
//! pseudochar eval fn|det|charpoly --matrix <file> [--matrix <file> ..] [--dim d] [--ring r]
//! ```
//!
//! Exit status is 0 when every requested suite passes, 1 when one fails and
//! 2 for usage or configuration errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::pseudochar::{char_poly, det_from_pseudocharacter, f_rec, CentralFunction};
use crate::scalar::{ModInt, Modulus, Rational, RationalField, Scalar};
use crate::verify::{run_all, Ring, Settings, Suite};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pseudochar",
    version,
    about = "Verify pseudocharacter identities with exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite, or `all` for the default suite matrix.
    Check {
        /// expansions, assoc, functoriality, product-formula, degree-d, det-mult,
        /// charpoly, units, taylor-equiv, vanishing, pseudochar-axioms or all
        suite: String,
    },
    /// Evaluate f^[n], D_f or D_f(t - x) on matrices read from files.
    Eval {
        what: EvalKind,
        /// Matrix file: first line the size, then one row per line. Repeat
        /// for several arguments of f^[n].
        #[arg(long, required = true)]
        matrix: Vec<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    /// f^[n](x1, .., xn) for the trace, n = number of matrices
    Fn,
    /// D_f(x) = f^[d](x, .., x) / d!
    Det,
    /// D_f(t - x)
    Charpoly,
}

#[derive(Debug, Default, Args)]
pub struct Options {
    /// Pseudocharacter dimension d
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    /// rational, mod:<m> or words
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Matrix size n (defaults to d)
    #[arg(long, global = true)]
    pub size: Option<usize>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Random entries are drawn from [-bound, bound]
    #[arg(long, global = true)]
    pub bound: Option<i64>,
    /// Largest number of intermediate multisets in one product
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    /// Key-value config file; flags override its values
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write the JSON report here
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Print nothing on success
    #[arg(long, global = true)]
    pub quiet: bool,
}

impl Options {
    /// Defaults, then the config file, then flags.
    pub fn settings(&self) -> Result<Settings> {
        let mut s = Settings::default();
        if let Some(path) = &self.config {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            s.apply_file(&text)?;
        }
        if let Some(r) = &self.ring {
            s.set("ring", r)?;
        }
        s.dim = self.dim.or(s.dim);
        s.size = self.size.or(s.size);
        s.trials = self.trials.unwrap_or(s.trials);
        s.seed = self.seed.unwrap_or(s.seed);
        s.bound = self.bound.unwrap_or(s.bound);
        s.budget = self.budget.unwrap_or(s.budget);
        Ok(s)
    }
}

/// Parses `args` and runs; returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run(cli: &Cli) -> Result<i32> {
    let settings = cli.options.settings()?;
    match &cli.command {
        Command::Check { suite } => check(suite, &settings, &cli.options),
        Command::Eval { what, matrix } => eval(*what, matrix, &settings),
    }
}

fn check(suite: &str, settings: &Settings, options: &Options) -> Result<i32> {
    let configs = if suite == "all" {
        settings.default_matrix()?
    } else {
        vec![settings.config_for(suite.parse::<Suite>()?)?]
    };
    let report = run_all(&configs)?;
    if let Some(path) = &options.json {
        fs::write(path, report.to_json())
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    if !options.quiet || !report.pass {
        print!("{report}");
    }
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn eval(what: EvalKind, files: &[PathBuf], settings: &Settings) -> Result<i32> {
    let text = match settings.ring.unwrap_or(Ring::Rational) {
        Ring::Rational => eval_in::<Rational>(what, files, settings, RationalField)?,
        Ring::Mod(m) => eval_in::<ModInt>(what, files, settings, Modulus::new(m)?)?,
        Ring::Words => return Err(Error::Config("eval needs a matrix ring".into())),
    };
    println!("{text}");
    Ok(EXIT_PASS)
}

fn eval_in<S: Scalar>(
    what: EvalKind,
    files: &[PathBuf],
    settings: &Settings,
    ctx: S::Context,
) -> Result<String> {
    let xs = files
        .iter()
        .map(|p| load_matrix::<S>(p, &ctx))
        .collect::<Result<Vec<_>>>()?;
    let n = xs[0].size();
    if let Some(bad) = xs.iter().find(|x| x.size() != n) {
        return Err(Error::DimensionMismatch {
            left: n,
            right: bad.size(),
        });
    }
    let f = CentralFunction::<Matrix<S>, S>::matrix_trace(ctx, n);
    if what == EvalKind::Fn {
        return Ok(f_rec(&f, &xs)?.to_string());
    }
    if xs.len() != 1 {
        return Err(Error::Config(
            "det and charpoly take exactly one --matrix".into(),
        ));
    }
    let f = f.with_dimension(settings.dim.unwrap_or(n))?;
    Ok(match what {
        EvalKind::Det => det_from_pseudocharacter(&f, &xs[0])?.to_string(),
        _ => char_poly(&f, &xs[0])?.to_string(),
    })
}

/// Reads a matrix file: first line `d`, then `d` lines of `d` entries,
/// integers or fractions `p/q`, separated by whitespace. Blank lines and
/// `#` comments are ignored.
pub fn parse_matrix<S: Scalar>(text: &str, ctx: &S::Context) -> Result<Matrix<S>> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let d: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the matrix size".into()))?;
    let rows = lines
        .map(|l| {
            l.split_whitespace()
                .map(|a| S::parse_in(ctx, a))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != d {
        return Err(Error::Parse(format!(
            "expected {d} rows, found {}",
            rows.len()
        )));
    }
    Matrix::from_rows(rows)
}

pub fn load_matrix<S: Scalar>(path: &Path, ctx: &S::Context) -> Result<Matrix<S>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text, ctx)
}
