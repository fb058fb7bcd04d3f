//! Claim verification suites.
//!
//! A suite expands into independent tasks (one per graph or per `n`), runs
//! them on a dedicated rayon pool, and returns one [`VerificationResult`]
//! per claim instance sorted by `claim_id`. Thread count changes only the
//! timings.

pub mod claims;
mod suites;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use claims::Claim;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "report-only")]
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ReportOnly => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationResult {
    pub claim_id: String,
    pub statement: &'static str,
    /// The expected value, or the string `"unspecified"` for report-only rows.
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    pub runtime_ms: u64,
}

fn claim_id(claim: &Claim, suffix: &str) -> String {
    if suffix.is_empty() {
        claim.id.to_string()
    } else {
        format!("{}.{suffix}", claim.id)
    }
}

/// Rows produced by one task; timings are filled in when the task ends.
#[derive(Default)]
pub(crate) struct Rows(Vec<VerificationResult>);

impl Rows {
    fn push(
        &mut self,
        claim: &Claim,
        suffix: &str,
        expected: Value,
        computed: Value,
        status: Status,
    ) -> &mut VerificationResult {
        self.0.push(VerificationResult {
            claim_id: claim_id(claim, suffix),
            statement: claim.statement,
            expected,
            computed,
            status,
            detail: None,
            runtime_ms: 0,
        });
        self.0.last_mut().expect("just pushed")
    }

    pub(crate) fn check<E: Serialize, C: Serialize>(
        &mut self,
        claim: &Claim,
        suffix: &str,
        expected: E,
        computed: C,
    ) -> &mut VerificationResult {
        let expected = serde_json::to_value(expected).expect("expected value serializes");
        let computed = serde_json::to_value(computed).expect("computed value serializes");
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        self.push(claim, suffix, expected, computed, status)
    }

    pub(crate) fn report<C: Serialize>(&mut self, claim: &Claim, suffix: &str, computed: C) -> &mut VerificationResult {
        let computed = serde_json::to_value(computed).expect("computed value serializes");
        self.push(claim, suffix, Value::from("unspecified"), computed, Status::ReportOnly)
    }

    pub(crate) fn error(&mut self, claim: &Claim, suffix: &str, err: &Error) {
        let computed = serde_json::json!({ "error": err.to_string() });
        self.push(claim, suffix, Value::Null, computed, Status::Fail);
    }

    fn finish(mut self, elapsed: Duration) -> Vec<VerificationResult> {
        let ms = elapsed.as_millis() as u64;
        for r in &mut self.0 {
            r.runtime_ms = ms;
        }
        self.0
    }
}

pub(crate) type Task = Box<dyn Fn() -> Vec<VerificationResult> + Send + Sync>;

/// Wraps `f` as a task; an error becomes a failing row under `claim`.
pub(crate) fn task<F>(claim: &'static Claim, suffix: String, f: F) -> Task
where
    F: Fn(&mut Rows) -> Result<()> + Send + Sync + 'static,
{
    Box::new(move || {
        let start = Instant::now();
        let mut rows = Rows::default();
        if let Err(e) = f(&mut rows) {
            rows.error(claim, &suffix, &e);
        }
        rows.finish(start.elapsed())
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Thm1,
    Thm6,
    Thm7,
    Thm8,
    Heawood,
    Cage8,
    Dodecahedron,
    Claim,
    Lk33,
    Exceptional,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 11] =
        ["thm1", "thm6", "thm7", "thm8", "heawood", "cage8", "dodecahedron", "claim", "lk33", "exceptional", "all"];

    const EACH: [Suite; 10] = [
        Suite::Thm1,
        Suite::Thm6,
        Suite::Thm7,
        Suite::Thm8,
        Suite::Heawood,
        Suite::Cage8,
        Suite::Dodecahedron,
        Suite::Claim,
        Suite::Lk33,
        Suite::Exceptional,
    ];

    fn takes_range(self) -> bool {
        matches!(self, Suite::Thm6 | Suite::Thm7 | Suite::Thm8)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| if i < Suite::EACH.len() { Suite::EACH[i] } else { Suite::All })
            .ok_or_else(|| {
                Error::InvalidParameter(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = Suite::EACH.iter().position(|s| s == self).unwrap_or(Suite::NAMES.len() - 1);
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Inclusive range of `n` for the parametrised suites.
    pub range: Option<RangeInclusive<usize>>,
    /// Petersen parameter for `thm7`; both 1 and 2 when absent.
    pub k: Option<usize>,
    /// Allow the expensive instances (the 7-vertex census).
    pub slow: bool,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { range: None, k: None, slow: false, jobs: default_jobs() }
    }
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Parses `a:b` into an inclusive range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::InvalidParameter(format!("range {s:?} must look like a:b with a <= b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn tasks_for(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Task>> {
    if !suite.takes_range() && opts.range.is_some() {
        return Err(Error::InvalidParameter(format!("suite {suite} takes no --range")));
    }
    if suite != Suite::Thm7 && opts.k.is_some() {
        return Err(Error::InvalidParameter(format!("suite {suite} takes no --k")));
    }
    match suite {
        Suite::Thm1 => Ok(suites::thm1()),
        Suite::Thm6 => suites::thm6(opts),
        Suite::Thm7 => suites::thm7(opts),
        Suite::Thm8 => suites::thm8(opts),
        Suite::Heawood => Ok(suites::heawood()),
        Suite::Cage8 => Ok(suites::cage8()),
        Suite::Dodecahedron => Ok(suites::dodecahedron()),
        Suite::Claim => Ok(suites::claim()),
        Suite::Lk33 => Ok(suites::lk33()),
        Suite::Exceptional => Ok(suites::exceptional()),
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                all.extend(tasks_for(s, opts)?);
            }
            Ok(all)
        }
    }
}

/// Runs a suite. Errors are reserved for bad options and infeasible ranges;
/// failing claims are reported as rows.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Vec<VerificationResult>> {
    let tasks = tasks_for(suite, opts)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let mut results: Vec<VerificationResult> = pool.install(|| tasks.par_iter().flat_map_iter(|t| t()).collect());
    results.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(results)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
}

impl Summary {
    pub fn of(results: &[VerificationResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::ReportOnly => s.report_only += 1,
            }
        }
        s
    }
}

/// The results as JSON, optionally without `runtime_ms`.
pub fn to_json(results: &[VerificationResult], timings: bool) -> Value {
    let mut v = serde_json::to_value(results).expect("results serialize");
    if !timings {
        for row in v.as_array_mut().expect("array") {
            row.as_object_mut().expect("object").remove("runtime_ms");
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("thm9".parse::<Suite>().is_err());
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("6:16").unwrap(), 6..=16);
        assert_eq!(parse_range(" 3 : 3 ").unwrap(), 3..=3);
        assert!(parse_range("9:3").is_err());
        assert!(parse_range("9").is_err());
        assert!(parse_range("a:3").is_err());
    }

    #[test]
    fn status_follows_expected() {
        let mut rows = Rows::default();
        rows.check(&claims::HEAWOOD_COUNT, "", 24, 24);
        rows.check(&claims::HEAWOOD_COUNT, "x", 24, 25);
        rows.report(&claims::LK33_SUMMARY, "", 1);
        let out = rows.finish(Duration::from_millis(3));
        assert_eq!(out.iter().map(|r| r.status).collect::<Vec<_>>(), [Status::Pass, Status::Fail, Status::ReportOnly]);
        assert_eq!(out[2].expected, Value::from("unspecified"));
        assert_eq!(out[1].claim_id, "heawood.01.cycles.x");
        assert!(out.iter().all(|r| r.runtime_ms == 3));
        let json = to_json(&out, false);
        assert!(json[0].get("runtime_ms").is_none());
        assert_eq!(Summary::of(&out), Summary { pass: 1, fail: 1, report_only: 1 });
    }

    #[test]
    fn options_are_validated() {
        let opts = VerifyOptions { range: Some(3..=4), ..VerifyOptions::default() };
        assert!(matches!(run(Suite::Heawood, &opts), Err(Error::InvalidParameter(_))));
        let opts = VerifyOptions { k: Some(2), ..VerifyOptions::default() };
        assert!(matches!(run(Suite::Thm8, &opts), Err(Error::InvalidParameter(_))));
    }
}
