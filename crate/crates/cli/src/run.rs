use std::collections::BTreeMap;
use std::time::Instant;

use nonint_core::criteria::{certify, Status};
use nonint_core::unfoldings::theorem_conditions;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::report::{ClauseReport, InputEcho, ReportDocument, SystemEcho, Timing};
use crate::spec::{SystemSource, SystemSpec};

pub const EXIT_NONINTEGRABLE: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_INPUT_ERROR: i32 = 4;

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Nonintegrable => EXIT_NONINTEGRABLE,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
        Status::Inapplicable => EXIT_INAPPLICABLE,
    }
}

/// Builds the system, runs the certifier and wraps the result.
pub fn run_check(spec: &SystemSpec, timing: bool) -> Result<(ReportDocument, Status), CliError> {
    let t = Instant::now();
    let (sys, curve) = spec.build()?;
    let cert = certify(&sys, &curve, spec.max_order)?;
    let system = match &spec.source {
        SystemSource::Inline { p, q, phi } => {
            SystemEcho::Inline { p: p.clone(), q: q.clone(), phi: phi.clone() }
        }
        SystemSource::Builtin { family, chart, params } => SystemEcho::Builtin {
            family: family.as_str().into(),
            chart: *chart,
            params: params.clone(),
            p: sys.p.to_string(),
            q: sys.q.to_string(),
        },
    };
    let echo = InputEcho { d: spec.field.d(), max_order: spec.max_order, system };
    let mut doc = ReportDocument::from_certificate(&cert, echo);
    if timing {
        doc.timing = Some(Timing { total_us: t.elapsed().as_micros() as u64 });
    }
    Ok((doc, cert.status))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub index: usize,
    pub params: BTreeMap<String, String>,
    pub clauses: Option<ClauseReport>,
    pub report: Option<ReportDocument>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SweepSummary {
    pub tuples: usize,
    pub errors: usize,
    /// Keyed by `status`, `status k=K criterion` for firings.
    pub counts: BTreeMap<String, usize>,
    /// Tuples where a theorem clause holds but the certifier did not prove nonintegrability.
    pub disagreements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub summary: SweepSummary,
    pub version: String,
}

/// Grid points in index order; the last key varies fastest.
/// An empty grid, or any key with no values, yields no points.
pub fn grid_points(grid: &BTreeMap<String, Vec<String>>) -> Vec<BTreeMap<String, String>> {
    if grid.is_empty() || grid.values().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = vec![BTreeMap::new()];
    for (k, vs) in grid {
        out = out
            .into_iter()
            .flat_map(|base| {
                vs.iter().map(move |v| {
                    let mut m = base.clone();
                    m.insert(k.clone(), v.clone());
                    m
                })
            })
            .collect();
    }
    out
}

fn sweep_one(template: &SystemSpec, index: usize, point: BTreeMap<String, String>) -> SweepEntry {
    let mut spec = template.clone();
    if let SystemSource::Builtin { params, .. } = &mut spec.source {
        params.extend(point.clone());
    }
    let mut entry = SweepEntry { index, params: point, clauses: None, report: None, error: None };
    let clauses = spec.theorem().map(|th| {
        spec.unfolding_params()
            .and_then(|p| theorem_conditions(&p, th).map_err(CliError::from))
            .map(|r| ClauseReport::from(&r))
    });
    match clauses.transpose() {
        Ok(c) => entry.clauses = c,
        Err(e) => {
            entry.error = Some(e.to_string());
            return entry;
        }
    }
    match run_check(&spec, false) {
        Ok((doc, _)) => entry.report = Some(doc),
        Err(e) => entry.error = Some(e.to_string()),
    }
    entry
}

/// Runs every grid point of a builtin template, in parallel.
pub fn sweep(template: &SystemSpec, grid: &BTreeMap<String, Vec<String>>) -> Result<SweepReport, CliError> {
    if !matches!(template.source, SystemSource::Builtin { .. }) {
        return Err(CliError::Usage("sweep needs a builtin family".into()));
    }
    let points = grid_points(grid);
    let entries: Vec<SweepEntry> = points
        .into_par_iter()
        .enumerate()
        .map(|(i, p)| sweep_one(template, i, p))
        .collect();
    let mut summary = SweepSummary { tuples: entries.len(), ..Default::default() };
    for e in &entries {
        let Some(doc) = &e.report else {
            summary.errors += 1;
            continue;
        };
        let key = match &doc.firing {
            Some(f) => format!("{} k={} {}", doc.status, f.k, f.criterion),
            None => doc.status.clone(),
        };
        *summary.counts.entry(key).or_default() += 1;
        if e.clauses.as_ref().is_some_and(|c| c.any_clause_holds) && doc.firing.is_none() {
            summary.disagreements.push(e.index);
        }
    }
    Ok(SweepReport { entries, summary, version: crate::report::VERSION.into() })
}
