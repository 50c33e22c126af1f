//! Seeded verification suites with negative controls and structured reports.
//!
//! A suite evaluates one family of identities on random or exhaustive
//! inputs and compares both sides exactly. Every suite also evaluates at
//! least one deliberately wrong variant (a negative control) that must
//! fail; a suite passes when all ordinary checks hold and all controls fail.
//!
//! Trials are independent: trial `t` draws from its own generator seeded
//! by `(seed, t)`, so reports do not depend on scheduling.

pub mod config;
pub mod oracle;
pub mod report;
pub mod rng;
mod suites;
mod words;

pub use config::{Ring, Settings, Suite, SuiteConfig};
pub use oracle::{cofactor_det, leibniz_char_poly, leibniz_det};
pub use report::{
    report_body, strip_durations, CheckRecord, Counts, Expect, RunReport, SuiteReport,
};

use std::time::Instant;

use crate::error::Result;
use crate::scalar::{ModInt, Modulus, Rational, RationalField};

/// Runs one suite. Invalid configurations are errors; failing checks are
/// recorded in the report.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let checks = match cfg.ring {
        Ring::Rational => suites::run::<Rational>(cfg, RationalField),
        Ring::Mod(m) => suites::run::<ModInt>(cfg, Modulus::new(m)?),
        Ring::Words => words::run(cfg),
    };
    Ok(SuiteReport::new(cfg, checks, elapsed_ms(start)))
}

/// Runs several suites in order.
pub fn run_all(configs: &[SuiteConfig]) -> Result<RunReport> {
    let start = Instant::now();
    let reports = configs.iter().map(run_suite).collect::<Result<Vec<_>>>()?;
    Ok(RunReport::new(reports, elapsed_ms(start)))
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}
