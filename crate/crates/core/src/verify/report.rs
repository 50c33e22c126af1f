use std::fmt::{self, Display};

use serde::Serialize;
use serde_json::Value;

use super::config::SuiteConfig;
use crate::error::Result;
use crate::pseudochar::Comparison;

/// Whether a check is expected to hold or is a negative control that must
/// fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Holds,
    Fails,
}

/// One evaluated identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    /// Trial index; absent for fixed inputs.
    pub trial: Option<u64>,
    pub params: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub expect: Expect,
    /// Whether `lhs == rhs`.
    pub holds: bool,
    pub error: Option<String>,
    /// Whether the outcome matches the expectation.
    pub passed: bool,
}

impl CheckRecord {
    pub fn new<V: PartialEq + Display>(
        check: &str,
        trial: Option<u64>,
        params: impl Into<String>,
        inputs: Vec<String>,
        result: Result<Comparison<V>>,
        expect: Expect,
    ) -> Self {
        let (lhs, rhs, holds, error) = match result {
            Ok(c) => (
                abbreviate(c.lhs.to_string()),
                abbreviate(c.rhs.to_string()),
                c.holds(),
                None,
            ),
            Err(e) => (String::new(), String::new(), false, Some(e.to_string())),
        };
        let passed = error.is_none()
            && match expect {
                Expect::Holds => holds,
                Expect::Fails => !holds,
            };
        CheckRecord {
            check: check.into(),
            trial,
            params: params.into(),
            inputs,
            lhs,
            rhs,
            expect,
            holds,
            error,
            passed,
        }
    }

    /// A check with a yes/no outcome and a description in place of two sides.
    pub fn outcome(
        check: &str,
        trial: Option<u64>,
        params: impl Into<String>,
        inputs: Vec<String>,
        holds: bool,
        detail: String,
        expect: Expect,
    ) -> Self {
        let passed = match expect {
            Expect::Holds => holds,
            Expect::Fails => !holds,
        };
        CheckRecord {
            check: check.into(),
            trial,
            params: params.into(),
            inputs,
            lhs: detail,
            rhs: String::new(),
            expect,
            holds,
            error: None,
            passed,
        }
    }

    /// A check comparing a computed value with an exact expected one.
    pub fn flag(
        check: &str,
        params: impl Into<String>,
        value: impl Display,
        expected: impl Display,
    ) -> Self {
        let (lhs, rhs) = (value.to_string(), expected.to_string());
        let holds = lhs == rhs;
        CheckRecord {
            check: check.into(),
            trial: None,
            params: params.into(),
            inputs: Vec::new(),
            lhs,
            rhs,
            expect: Expect::Holds,
            holds,
            error: None,
            passed: holds,
        }
    }
}

/// Longest rendered side kept in a record; longer values are cut and
/// marked with their full length. Inputs are always kept in full.
const MAX_RENDERED: usize = 400;

fn abbreviate(s: String) -> String {
    if s.len() <= MAX_RENDERED {
        return s;
    }
    let mut cut = MAX_RENDERED;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{}... ({} chars)", &s[..cut], s.len())
}

/// The configuration as echoed in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub ring: String,
    pub size: usize,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
    pub budget: String,
    pub recursion_cap: usize,
    pub oracle_cap: usize,
    pub word_length: usize,
}

impl From<&SuiteConfig> for ConfigEcho {
    fn from(c: &SuiteConfig) -> Self {
        ConfigEcho {
            ring: c.ring.to_string(),
            size: c.size,
            dim: c.dim,
            trials: c.trials,
            seed: c.seed,
            bound: c.bound,
            budget: c.budget.to_string(),
            recursion_cap: c.caps.recursion,
            oracle_cap: c.caps.oracle,
            word_length: c.word_length,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub negative_controls: usize,
}

impl Counts {
    fn of(checks: &[CheckRecord]) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        Counts {
            checks: checks.len(),
            passed,
            failed: checks.len() - passed,
            negative_controls: checks.iter().filter(|c| c.expect == Expect::Fails).count(),
        }
    }

    fn add(&mut self, other: Counts) {
        self.checks += other.checks;
        self.passed += other.passed;
        self.failed += other.failed;
        self.negative_controls += other.negative_controls;
    }
}

/// How to rerun a failing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reproduction {
    pub check: String,
    pub seed: u64,
    pub trial: Option<u64>,
    pub params: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckRecord>,
    pub counts: Counts,
    /// True when every check passed and at least one negative control ran.
    pub pass: bool,
    pub failures: Vec<Reproduction>,
    pub duration_ms: u64,
}

impl SuiteReport {
    pub fn new(cfg: &SuiteConfig, checks: Vec<CheckRecord>, duration_ms: u64) -> Self {
        let counts = Counts::of(&checks);
        let failures = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| Reproduction {
                check: c.check.clone(),
                seed: cfg.seed,
                trial: c.trial,
                params: c.params.clone(),
            })
            .collect();
        SuiteReport {
            suite: cfg.suite.to_string(),
            config: cfg.into(),
            pass: counts.failed == 0 && counts.negative_controls > 0,
            counts,
            checks,
            failures,
            duration_ms,
        }
    }

    /// One summary line.
    pub fn summary(&self) -> String {
        let c = &self.config;
        let mark = if self.pass { "PASS" } else { "FAIL" };
        format!(
            "{mark} {:<17} {:<9} n={} d={}  {}/{} checks, {} negative controls, {} ms",
            self.suite,
            c.ring,
            c.size,
            c.dim,
            self.counts.passed,
            self.counts.checks,
            self.counts.negative_controls,
            self.duration_ms
        )
    }
}

impl fmt::Display for SuiteReport {
    /// Summary line followed by every failing check with its inputs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for c in self.checks.iter().filter(|c| !c.passed) {
            let trial = c.trial.map_or("fixed input".to_string(), |t| {
                format!("seed {} trial {t}", self.config.seed)
            });
            write!(
                f,
                "  {} [{}] ({trial}), expected to {:?}: ",
                c.check, c.params, c.expect
            )?;
            match &c.error {
                Some(e) => writeln!(f, "error: {e}")?,
                None => writeln!(f, "lhs = {}, rhs = {}", c.lhs, c.rhs)?,
            }
            for input in &c.inputs {
                writeln!(f, "    {input}")?;
            }
        }
        Ok(())
    }
}

/// Reports for several suites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub suites: Vec<SuiteReport>,
    pub counts: Counts,
    pub pass: bool,
    pub duration_ms: u64,
}

impl RunReport {
    pub fn new(suites: Vec<SuiteReport>, duration_ms: u64) -> Self {
        let mut counts = Counts::default();
        for s in &suites {
            counts.add(s.counts);
        }
        RunReport {
            pass: suites.iter().all(|s| s.pass),
            counts,
            suites,
            duration_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            write!(f, "{s}")?;
        }
        let mark = if self.pass { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{mark}: {} suites, {}/{} checks passed, {} ms",
            self.suites.len(),
            self.counts.passed,
            self.counts.checks,
            self.duration_ms
        )
    }
}

/// Removes every `duration_ms` field, leaving the part of a report that is
/// determined by the configuration.
pub fn strip_durations(value: &mut Value) {
    match value {
        Value::Object(map) => {
            map.remove("duration_ms");
            map.values_mut().for_each(strip_durations);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_durations),
        _ => {}
    }
}

/// A report body as canonical JSON text without durations.
pub fn report_body(json: &str) -> serde_json::Result<String> {
    let mut v: Value = serde_json::from_str(json)?;
    strip_durations(&mut v);
    serde_json::to_string(&v)
}
