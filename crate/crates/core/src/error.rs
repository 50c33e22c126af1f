use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("{value} is not invertible {context}")]
    NotInvertible { value: String, context: String },

    #[error("{d}! not invertible {context}")]
    FactorialNotInvertible { d: usize, context: String },

    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("empty word: the free semigroup has no unit")]
    EmptyWord,

    #[error("partial bijection {bijection} does not fit multisets of sizes {n} and {m}")]
    BijectionSize {
        bijection: String,
        n: usize,
        m: usize,
    },

    #[error("term budget exceeded: {predicted} predicted terms, budget {budget}")]
    BudgetExceeded { predicted: u128, budget: u128 },

    #[error("{what}: n = {n} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("f^[n] needs at least one argument; evaluate the empty multiset with f_hat")]
    EmptyArguments,

    #[error("central function `{0}` has no declared dimension")]
    NoDimension(String),

    #[error("central function `{0}` has no unit element to evaluate on")]
    NoUnit(String),

    #[error("interpolation nodes must be pairwise distinct with invertible differences")]
    Interpolation,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
