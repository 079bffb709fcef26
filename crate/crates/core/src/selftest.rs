//! Built-in consistency check: the solver against the brute-force oracle on
//! every small labeled graph and on one fixture per rule, with the
//! observations and the leaf ceiling monitored throughout.

use crate::error::SolveError;
use crate::generate::{rule_trigger, GenError, TRIGGER_RULES};
use crate::observations::InvariantMonitor;
use crate::oracle::{brute_min_disjoint, brute_min_pvc4, enumerate_labeled_graphs, OracleError, MAX_LABELED_N};
use crate::solver::{minimize_disjoint_with, minimize_with, verify_cover, SolveOptions};

#[derive(Debug, Default, Clone)]
pub struct SelftestReport {
    pub graphs_checked: u64,
    pub fixtures_checked: u64,
    pub mismatches: Vec<String>,
    pub monitor: InvariantMonitor,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.monitor.is_clean()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SelftestError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

/// Checks all labeled graphs on up to `max_n` vertices (capped at the
/// oracle's enumeration limit) and one rule fixture per seed in `0..seeds`.
pub fn run(max_n: usize, seeds: u64, opts: SolveOptions) -> Result<SelftestReport, SelftestError> {
    let mut report = SelftestReport::default();
    for n in 0..=max_n.min(MAX_LABELED_N) {
        for g in enumerate_labeled_graphs(n)? {
            let want = brute_min_pvc4(&g)?.min_size;
            let got = minimize_with(&g, opts, &mut report.monitor)?;
            report.graphs_checked += 1;
            if got.size != want || !verify_cover(&g, &got.cover) {
                report.mismatches.push(format!(
                    "edges {:?}: solver {} vs oracle {want}",
                    g.edges().collect::<Vec<_>>(),
                    got.size
                ));
            }
        }
    }
    for rule in TRIGGER_RULES {
        for seed in 0..seeds {
            let inst = rule_trigger(rule, seed)?;
            let want = brute_min_disjoint(&inst)?.map(|a| a.min_size);
            let got = minimize_disjoint_with(&inst, opts, &mut report.monitor)?;
            report.fixtures_checked += 1;
            if want != Some(got.size) {
                report.mismatches.push(format!("rule {rule} seed {seed}: solver {} vs oracle {want:?}", got.size));
            }
        }
    }
    Ok(report)
}
