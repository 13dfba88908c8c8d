//! Registry of executable claims, a parallel runner and report renderers.

mod checks;
mod registry;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::conicbundle::equal_up_to_scalar;
use crate::hashimoto::{power_sum_form, w4_ring};
use crate::numfield::RationalField;
use crate::polyalg::{parse_expr, MultiPoly, PolyRing};

pub use registry::{registry, ANCHOR_MAP};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown report format {0:?} (expected json or md)")]
    UnknownFormat(String),
    #[error("parallelism must be at least 1")]
    ZeroJobs,
    #[error("could not build the worker pool: {0}")]
    Pool(String),
}

/// How a computed value is compared with the expected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparator {
    /// Identical strings after trimming.
    Exact,
    /// Polynomials over ℚ in the given variables, compared exactly.
    Polynomial(&'static [&'static str]),
    /// Polynomials equal up to a nonzero rational scalar.
    UpToScalar(&'static [&'static str]),
    /// `;`-separated items compared as sets.
    SetEquality,
}

impl Comparator {
    pub fn matches(self, expected: &str, computed: &str) -> bool {
        match self {
            Comparator::Exact => expected.trim() == computed.trim(),
            Comparator::SetEquality => {
                let items = |s: &str| {
                    let mut v: Vec<String> =
                        s.split(';').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect();
                    v.sort();
                    v
                };
                items(expected) == items(computed)
            }
            Comparator::Polynomial(vars) | Comparator::UpToScalar(vars) => {
                let ring = PolyRing::new(RationalField, vars);
                let (Ok(e), Ok(c)) = (parse_expr(expected, &ring), parse_expr(computed, &ring)) else {
                    return false;
                };
                match self {
                    Comparator::Polynomial(_) => e == c,
                    _ => !e.is_zero() && equal_up_to_scalar(&c, &e).is_some(),
                }
            }
        }
    }
}

/// Inputs shared by the claims. Tests swap in a corrupted `F₄` to check
/// that the harness reports failures.
#[derive(Debug, Clone)]
pub struct Context {
    pub f2: MultiPoly<RationalField>,
    pub f4: MultiPoly<RationalField>,
}

impl Default for Context {
    fn default() -> Self {
        Context { f2: power_sum_form(2).expect("degree 2"), f4: power_sum_form(4).expect("degree 4") }
    }
}

impl Context {
    /// `F₄ + x1⁴`, which breaks the pencil.
    pub fn corrupted() -> Self {
        let mut ctx = Context::default();
        let x1 = MultiPoly::var_at(&w4_ring(), 0);
        ctx.f4 = ctx.f4.add(&x1.pow(4));
        ctx
    }

    /// `F₄ - λF₂²`.
    pub fn member(&self, lambda: &crate::numfield::Rational) -> MultiPoly<RationalField> {
        self.f4.sub(&self.f2.mul(&self.f2).scale(lambda))
    }
}

pub type Runner = fn(&Context) -> Result<String, String>;

/// Where a claim comes from: a section label and a verbatim quote.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchor {
    pub section: &'static str,
    pub quote: &'static str,
}

impl Anchor {
    pub fn render(&self) -> String {
        format!("{}: \"{}\"", self.section, self.quote)
    }
}

#[derive(Clone)]
pub struct ClaimSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: Anchor,
    pub expected: &'static str,
    pub comparator: Comparator,
    pub runner: Runner,
}

impl std::fmt::Debug for ClaimSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClaimSpec").field("id", &self.id).field("expected", &self.expected).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub status: Status,
    pub paper_anchor: String,
    pub expected: String,
    pub computed: String,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub results: Vec<ClaimResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(results: Vec<ClaimResult>) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        let timestamp =
            std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Report { version: TOOL_VERSION.to_string(), timestamp, results, summary }
    }

    /// 0 when everything passed, 2 if any claim errored, otherwise 1.
    pub fn exit_code(&self) -> i32 {
        if self.summary.error > 0 {
            2
        } else if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }
}

/// Claims whose id starts with `filter`, sorted by id.
pub fn list_claims(filter: Option<&str>) -> Vec<ClaimSpec> {
    let mut v: Vec<ClaimSpec> = registry().into_iter().filter(|c| filter.is_none_or(|p| c.id.starts_with(p))).collect();
    v.sort_by_key(|c| c.id);
    v
}

pub fn run_claim(claim: &ClaimSpec, ctx: &Context) -> ClaimResult {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| (claim.runner)(ctx)));
    let runtime_ms = start.elapsed().as_millis() as u64;
    let (status, computed) = match outcome {
        Ok(Ok(value)) => {
            let status = if claim.comparator.matches(claim.expected, &value) { Status::Pass } else { Status::Fail };
            (status, value)
        }
        Ok(Err(e)) => (Status::Error, e),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (Status::Error, format!("panicked: {msg}"))
        }
    };
    ClaimResult {
        id: claim.id.to_string(),
        status,
        paper_anchor: claim.anchor.render(),
        expected: claim.expected.to_string(),
        computed,
        runtime_ms,
    }
}

/// Runs the matching claims on `jobs` worker threads. The order of the
/// results is the id order regardless of scheduling.
pub fn run(filter: Option<&str>, jobs: usize) -> Result<Report, VerifyError> {
    run_with(&Context::default(), filter, jobs)
}

pub fn run_with(ctx: &Context, filter: Option<&str>, jobs: usize) -> Result<Report, VerifyError> {
    if jobs == 0 {
        return Err(VerifyError::ZeroJobs);
    }
    let claims = list_claims(filter);
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| VerifyError::Pool(e.to_string()))?;
    let results = pool.install(|| claims.par_iter().map(|c| run_claim(c, ctx)).collect());
    Ok(Report::new(results))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(VerifyError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Markdown => render_markdown(report),
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn render_markdown(report: &Report) -> String {
    let mut out = format!("# icosa-verify {}\n\n", report.version);
    let s = report.summary;
    out.push_str(&format!("{} pass, {} fail, {} error\n\n", s.pass, s.fail, s.error));
    out.push_str("| id | status | anchor | expected | computed | ms |\n|---|---|---|---|---|---|\n");
    for r in &report.results {
        out.push_str(&format!(
            "| `{}` | {} | {} | {} | {} | {} |\n",
            r.id,
            r.status.as_str(),
            md_cell(&r.paper_anchor),
            md_cell(&r.expected),
            md_cell(&r.computed),
            r.runtime_ms
        ));
    }
    out
}

#[cfg(test)]
mod tests;
