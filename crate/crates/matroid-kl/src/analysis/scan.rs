//! Exhaustive scan of the sparse paving parameter space.
//!
//! For every `n <= max_n`, `1 <= k <= n-1` and every
//! `0 <= lambda <= lambda_bound(n, k)` the closed-form triple is built and
//! the requested checks evaluated. The lambda interval is the full coarse
//! bound, which includes values no actual matroid attains (the largest
//! achievable lambda is a hard coding-theory quantity); scanning the
//! superset is the stronger check, and any failures it reports at
//! unattainable parameters are data, not errors.
//!
//! Cells are distributed over worker threads and the results merged in
//! `(n, k, lambda)` order, so reports are byte-identical across runs.

use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{is_log_concave, is_nonnegative, is_real_rooted};
use crate::closed_form::{self, ClosedFormError};

/// Which checks to run per `(n, k, lambda)` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSet {
    pub p_real_rooted: bool,
    pub z_real_rooted: bool,
    pub q_log_concave: bool,
    pub nonnegative: bool,
}

impl CheckSet {
    pub fn all() -> CheckSet {
        CheckSet {
            p_real_rooted: true,
            z_real_rooted: true,
            q_log_concave: true,
            nonnegative: true,
        }
    }

    pub fn none() -> CheckSet {
        CheckSet {
            p_real_rooted: false,
            z_real_rooted: false,
            q_log_concave: false,
            nonnegative: false,
        }
    }
}

impl Default for CheckSet {
    fn default() -> Self {
        CheckSet::all()
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Scan every ground set size up to this value (inclusive).
    pub max_n: usize,
    pub checks: CheckSet,
    /// Record only failing entries. The summary counters are unaffected;
    /// this keeps memory flat on very large horizons.
    pub failures_only: bool,
}

impl ScanConfig {
    pub fn new(max_n: usize) -> ScanConfig {
        ScanConfig {
            max_n,
            checks: CheckSet::all(),
            failures_only: false,
        }
    }
}

/// Result row for one `(n, k, lambda)` triple. Checks that were not
/// requested report `true`.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct ScanEntry {
    pub n: u16,
    pub k: u16,
    pub lambda: u64,
    pub p_real_rooted: bool,
    pub z_real_rooted: bool,
    pub q_log_concave: bool,
    pub all_nonnegative: bool,
}

impl ScanEntry {
    pub fn passed(&self) -> bool {
        self.p_real_rooted && self.z_real_rooted && self.q_log_concave && self.all_nonnegative
    }
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub max_n: usize,
    pub checks: CheckSet,
    pub failures_only: bool,
    /// Number of `(n, k)` cells scanned.
    pub cells: usize,
    /// Number of `(n, k, lambda)` triples evaluated.
    pub evaluated: u64,
    /// Number of triples failing at least one requested check.
    pub failures: u64,
    /// One entry per evaluated triple in `(n, k, lambda)` order, or only
    /// the failing ones when `failures_only` is set.
    pub entries: Vec<ScanEntry>,
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn zero_failures(&self) -> bool {
        self.failures == 0
    }

    pub fn failing_entries(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    /// One JSON object per line, in deterministic scan order.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for e in &self.entries {
            serde_json::to_writer(&mut w, e)?;
            writeln!(w)?;
        }
        Ok(())
    }

    /// Human summary; the only place wall time is reported.
    pub fn human_summary(&self) -> String {
        format!(
            "scanned n <= {}: {} cells, {} (n,k,lambda) triples over the full lambda interval \
             [0, lambda_bound], {} failures; {:.2}s",
            self.max_n,
            self.cells,
            self.evaluated,
            self.failures,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Run the scan. Parallelism comes from the ambient rayon pool; wrap the
/// call in a custom pool to pin the number of workers.
pub fn scan_sparse_paving(config: &ScanConfig) -> Result<ScanReport, ClosedFormError> {
    let start = Instant::now();
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for n in 1..=config.max_n {
        for k in 1..n {
            cells.push((n, k));
        }
    }
    let results: Vec<Result<CellResult, ClosedFormError>> = cells
        .par_iter()
        .map(|&(n, k)| scan_cell(n, k, &config.checks, config.failures_only))
        .collect();
    let mut entries = Vec::new();
    let mut evaluated = 0u64;
    let mut failures = 0u64;
    for r in results {
        let cell = r?;
        evaluated += cell.evaluated;
        failures += cell.failures;
        entries.extend(cell.entries);
    }
    Ok(ScanReport {
        max_n: config.max_n,
        checks: config.checks,
        failures_only: config.failures_only,
        cells: cells.len(),
        evaluated,
        failures,
        entries,
        elapsed: start.elapsed(),
    })
}

struct CellResult {
    entries: Vec<ScanEntry>,
    evaluated: u64,
    failures: u64,
}

fn scan_cell(
    n: usize,
    k: usize,
    checks: &CheckSet,
    failures_only: bool,
) -> Result<CellResult, ClosedFormError> {
    let bound = u64::try_from(&closed_form::lambda_bound(n, k)?)
        .expect("lambda bound fits in u64 for n <= 64");
    let uniform = closed_form::uniform_triple(k, n)?;
    let deltas = closed_form::delta_set(k)?;
    let mut p = uniform.p;
    let mut q = uniform.q;
    let mut z = uniform.z;
    let mut entries = Vec::new();
    if !failures_only {
        entries.reserve(bound as usize + 1);
    }
    let mut failures = 0u64;
    for lambda in 0..=bound {
        if lambda > 0 {
            p = &p - &deltas.p;
            q = &q - &deltas.q;
            z = &z - &deltas.z;
        }
        let entry = ScanEntry {
            n: n as u16,
            k: k as u16,
            lambda,
            p_real_rooted: !checks.p_real_rooted || is_real_rooted(&p),
            z_real_rooted: !checks.z_real_rooted || is_real_rooted(&z),
            q_log_concave: !checks.q_log_concave || is_log_concave(&q),
            all_nonnegative: !checks.nonnegative
                || (is_nonnegative(&p) && is_nonnegative(&q) && is_nonnegative(&z)),
        };
        if !entry.passed() {
            failures += 1;
        }
        if !failures_only || !entry.passed() {
            entries.push(entry);
        }
    }
    Ok(CellResult {
        entries,
        evaluated: bound + 1,
        failures,
    })
}
