use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multiset::DEFAULT_TERM_BUDGET;
use crate::pseudochar::Caps;
use crate::scalar::{inverse_of_factorial, ModInt, Modulus};

/// The base ring of a suite, or the free semigroup for symbolic suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Rational,
    Mod(u64),
    Words,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => f.write_str("rational"),
            Ring::Mod(m) => write!(f, "mod:{m}"),
            Ring::Words => f.write_str("words"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(Ring::Rational),
            "words" => Ok(Ring::Words),
            _ => {
                let m = s
                    .strip_prefix("mod:")
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::Config(format!("unknown ring `{s}` (rational, mod:<m>, words)"))
                    })?;
                Modulus::new(m)?;
                Ok(Ring::Mod(m))
            }
        }
    }
}

macro_rules! suites {
    ($($variant:ident => $name:literal, words: $words:literal, pseudo: $pseudo:literal;)*) => {
        /// A named group of checks.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Suite {
            $($variant,)*
        }

        impl Suite {
            pub const ALL: &'static [Suite] = &[$(Suite::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Suite::$variant => $name,)*
                }
            }

            /// Whether the suite has a free-semigroup variant.
            pub fn supports_words(self) -> bool {
                match self {
                    $(Suite::$variant => $words,)*
                }
            }

            /// Whether the suite needs `d!` to be invertible.
            pub fn needs_pseudocharacter(self) -> bool {
                match self {
                    $(Suite::$variant => $pseudo,)*
                }
            }
        }
    };
}

suites! {
    Expansions => "expansions", words: true, pseudo: false;
    Assoc => "assoc", words: true, pseudo: false;
    Functoriality => "functoriality", words: true, pseudo: false;
    ProductFormula => "product-formula", words: true, pseudo: false;
    DegreeD => "degree-d", words: false, pseudo: true;
    DetMult => "det-mult", words: false, pseudo: true;
    Charpoly => "charpoly", words: false, pseudo: true;
    Units => "units", words: false, pseudo: false;
    TaylorEquiv => "taylor-equiv", words: true, pseudo: false;
    Vanishing => "vanishing", words: false, pseudo: false;
    PseudocharAxioms => "pseudochar-axioms", words: false, pseudo: true;
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Config(format!("unknown suite `{s}` ({})", names.join(", ")))
            })
    }
}

/// Everything one suite run depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub ring: Ring,
    /// Matrix size `n`.
    pub size: usize,
    /// Declared pseudocharacter dimension `d`.
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    /// Random entries are drawn from `[-bound, bound]`.
    pub bound: i64,
    /// Term budget for products in `M(H)`.
    pub budget: u128,
    pub caps: Caps,
    /// Longest random word.
    pub word_length: usize,
}

impl SuiteConfig {
    pub fn new(suite: Suite, ring: Ring, dim: usize) -> Self {
        SuiteConfig {
            suite,
            ring,
            size: dim,
            dim,
            ..Settings::default().base(suite)
        }
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.bound < 1 {
            return Err(Error::Config("bound must be at least 1".into()));
        }
        if self.word_length == 0 {
            return Err(Error::Config("word length must be at least 1".into()));
        }
        match self.ring {
            Ring::Words if !self.suite.supports_words() => {
                return Err(Error::Config(format!(
                    "suite `{}` needs a matrix ring",
                    self.suite
                )));
            }
            Ring::Words => return Ok(()),
            _ => {}
        }
        if self.size == 0 || self.dim == 0 {
            return Err(Error::Config(
                "size and dimension must be at least 1".into(),
            ));
        }
        if let Ring::Mod(m) = self.ring {
            if self.suite.needs_pseudocharacter() {
                inverse_of_factorial::<ModInt>(&Modulus::new(m)?, self.dim)?;
            }
        }
        Ok(())
    }
}

/// Values from the command line and config file before they are turned into
/// suite configurations. Unset ring and sizes mean "default" for a single
/// suite and "every value" for the default matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub ring: Option<Ring>,
    pub size: Option<usize>,
    pub dim: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    pub budget: u128,
    pub caps: Caps,
    pub word_length: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            ring: None,
            size: None,
            dim: None,
            trials: 20,
            seed: 0,
            bound: 5,
            budget: DEFAULT_TERM_BUDGET,
            caps: Caps::default(),
            word_length: 3,
        }
    }
}

/// Rings and dimensions of the default matrix.
pub const DEFAULT_RINGS: [Ring; 3] = [Ring::Rational, Ring::Mod(7), Ring::Mod(101)];
pub const DEFAULT_DIMS: [usize; 3] = [1, 2, 3];

impl Settings {
    /// Sets one `key = value` pair. Keys: ring, size, dim, trials, seed,
    /// bound, budget, recursion_cap, oracle_cap, word_length.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::Config(format!("`{key}` expects a number, got `{value}`")))
        }
        match key {
            "ring" => self.ring = Some(value.parse()?),
            "size" => self.size = Some(num(key, value)?),
            "dim" => self.dim = Some(num(key, value)?),
            "trials" => self.trials = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            "bound" => self.bound = num(key, value)?,
            "budget" => self.budget = num(key, value)?,
            "recursion_cap" => self.caps.recursion = num(key, value)?,
            "oracle_cap" => self.caps.oracle = num(key, value)?,
            "word_length" => self.word_length = num(key, value)?,
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// Applies a config file: `key = value` lines, `#` comments.
    pub fn apply_file(&mut self, text: &str) -> Result<()> {
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", k + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    fn base(&self, suite: Suite) -> SuiteConfig {
        SuiteConfig {
            suite,
            ring: Ring::Rational,
            size: 2,
            dim: 2,
            trials: self.trials,
            seed: self.seed,
            bound: self.bound,
            budget: self.budget,
            caps: self.caps,
            word_length: self.word_length,
        }
    }

    /// The configuration for one explicitly requested suite. Size and
    /// dimension default to each other, then to 2.
    pub fn config_for(&self, suite: Suite) -> Result<SuiteConfig> {
        let ring = self.ring.unwrap_or(Ring::Rational);
        let default = if ring == Ring::Words { 1 } else { 2 };
        let size = self.size.or(self.dim).unwrap_or(default);
        let cfg = SuiteConfig {
            ring,
            size,
            dim: self.dim.unwrap_or(size),
            ..self.base(suite)
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Every suite over `d in {1,2,3}` and the rational, mod 7 and mod 101
    /// rings, plus the free-semigroup variants. A ring or dimension given
    /// in the settings restricts the matrix to that value.
    pub fn default_matrix(&self) -> Result<Vec<SuiteConfig>> {
        let rings: Vec<Ring> = match self.ring {
            Some(r) => vec![r],
            None => DEFAULT_RINGS.iter().copied().chain([Ring::Words]).collect(),
        };
        let dims: Vec<usize> = match self.dim.or(self.size) {
            Some(d) => vec![d],
            None => DEFAULT_DIMS.to_vec(),
        };
        let mut out = Vec::new();
        for &suite in Suite::ALL {
            for &ring in &rings {
                if ring == Ring::Words {
                    if suite.supports_words() {
                        out.push(SuiteConfig {
                            ring,
                            size: 1,
                            dim: 1,
                            ..self.base(suite)
                        });
                    }
                    continue;
                }
                for &d in &dims {
                    out.push(SuiteConfig {
                        ring,
                        size: self.size.unwrap_or(d),
                        dim: d,
                        ..self.base(suite)
                    });
                }
            }
        }
        for cfg in &out {
            cfg.validate()?;
        }
        Ok(out)
    }
}
