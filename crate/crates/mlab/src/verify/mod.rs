//! A registry of named identities with uniform execution, tolerances and
//! reporting.
//!
//! The catalog lives in `identities.json`, shipped with the crate and parsed
//! once; every record pairs with an evaluator in [`catalog`].  Numeric
//! records compare left and right evaluations against a per-record absolute
//! tolerance; exact records compare q-expansion coefficients in rational
//! arithmetic.  Negative controls are deliberately false identities that
//! must fail, so a broken comparator cannot silently pass everything.

mod catalog;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Comparison kind of a catalog record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    ExactSeries,
    Numeric,
}

/// One identity in the catalog.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub id: String,
    pub description: String,
    /// Literature source or derivation note.
    pub reference: String,
    pub kind: Kind,
    /// Absolute tolerance for numeric records.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Truncation order for exact-series records.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<i64>,
    #[serde(default)]
    pub tags: Vec<String>,
    /// Negative control: the check is expected to fail.
    #[serde(default)]
    pub control: bool,
}

/// Outcome status of one verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Result of running one record.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub status: Status,
    pub seconds: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

/// What an evaluator produces: numeric (lhs, rhs) sample pairs, or an exact
/// coefficient comparison verdict.
pub(crate) enum CheckOutcome {
    Numeric(Vec<(f64, f64)>),
    Exact(bool),
}

static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();

fn catalog_records() -> &'static [IdentityRecord] {
    CATALOG.get_or_init(|| {
        let mut records: Vec<IdentityRecord> =
            serde_json::from_str(include_str!("identities.json"))
                .expect("identities.json must parse");
        records.sort_by(|a, b| a.id.cmp(&b.id));
        records
    })
}

/// Catalog records, optionally filtered by tag (or exact id).  `None` and
/// `"all"` select everything.  Deterministic lexicographic order.
pub fn list_identities(filter: Option<&str>) -> Vec<IdentityRecord> {
    let records = catalog_records();
    match filter {
        None | Some("all") => records.to_vec(),
        Some(f) => records
            .iter()
            .filter(|r| r.id == f || r.tags.iter().any(|t| t == f))
            .cloned()
            .collect(),
    }
}

/// Run a single identity by id.
pub fn run(id: &str) -> Result<VerifyReport> {
    let record = catalog_records()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    Ok(run_record(record))
}

fn run_record(record: &IdentityRecord) -> VerifyReport {
    let start = Instant::now();
    let outcome = catalog::evaluate(&record.id);
    let seconds = start.elapsed().as_secs_f64();
    let mut report = VerifyReport {
        id: record.id.clone(),
        lhs: f64::NAN,
        rhs: f64::NAN,
        abs_diff: f64::NAN,
        tolerance: record.tolerance.unwrap_or(0.0),
        status: Status::Error,
        seconds,
        message: None,
    };
    match outcome {
        None => {
            report.message = Some("no evaluator registered for this id".into());
        }
        Some(Err(e)) => {
            report.message = Some(e.to_string());
        }
        Some(Ok(CheckOutcome::Exact(ok))) => {
            report.lhs = 0.0;
            report.rhs = 0.0;
            report.abs_diff = if ok { 0.0 } else { 1.0 };
            report.tolerance = 0.0;
            report.status = if ok { Status::Pass } else { Status::Fail };
        }
        Some(Ok(CheckOutcome::Numeric(pairs))) => {
            let tol = record.tolerance.unwrap_or(1e-8);
            let mut worst: Option<(f64, f64, f64)> = None;
            for (l, r) in pairs {
                let d = (l - r).abs();
                let d = if d.is_finite() { d } else { f64::INFINITY };
                if worst.map_or(true, |(_, _, wd)| d > wd) {
                    worst = Some((l, r, d));
                }
            }
            if let Some((l, r, d)) = worst {
                report.lhs = l;
                report.rhs = r;
                report.abs_diff = d;
                report.tolerance = tol;
                report.status = if d <= tol { Status::Pass } else { Status::Fail };
            } else {
                report.message = Some("evaluator produced no sample pairs".into());
            }
        }
    }
    report
}

/// Run every record matching `filter` with the given worker count.
/// Reports come back sorted by id regardless of scheduling.
pub fn run_all(filter: Option<&str>, parallelism: usize) -> Vec<VerifyReport> {
    let records = list_identities(filter);
    let parallelism = parallelism.max(1).min(records.len().max(1));
    let next = AtomicUsize::new(0);
    let out: Mutex<Vec<VerifyReport>> = Mutex::new(Vec::with_capacity(records.len()));
    std::thread::scope(|scope| {
        for _ in 0..parallelism {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= records.len() {
                    break;
                }
                let report = run_record(&records[i]);
                out.lock().unwrap().push(report);
            });
        }
    });
    let mut reports = out.into_inner().unwrap();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}
