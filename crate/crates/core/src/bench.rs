//! Per-budget search-tree measurements over a seeded instance suite.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::SolveError;
use crate::generate::{generate, GenError, GenSpec, Model};
use crate::observations::InvariantMonitor;
use crate::solver::{iterative_compression_with, SolveOptions};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub k: i64,
    pub instances: usize,
    pub feasible: usize,
    pub nodes: u64,
    pub leaves: u64,
    pub disjoint_solves: u64,
    /// Largest leaf count of one disjoint solve relative to its ceiling.
    pub max_leaf_ratio: f64,
    pub leaf_violations: u64,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchTable {
    pub suite: String,
    pub rows: Vec<BenchRow>,
    /// `exp` of the least-squares slope of `ln(nodes)` against `k`.
    pub growth_base: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Runs `iterative_compression` for every `k` in `0..=kmax` on `count`
/// instances of `model` seeded `seed, seed + 1, ...`.
pub fn run(model: &Model, count: usize, seed: u64, kmax: i64, opts: SolveOptions) -> Result<BenchTable, BenchError> {
    let graphs = (0..count as u64)
        .map(|i| generate(&GenSpec { model: model.clone(), seed: seed + i }).map(|g| g.graph().clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for k in 0..=kmax {
        let start = Instant::now();
        let mut monitor = InvariantMonitor::default();
        let mut row = BenchRow {
            k,
            instances: graphs.len(),
            feasible: 0,
            nodes: 0,
            leaves: 0,
            disjoint_solves: 0,
            max_leaf_ratio: 0.0,
            leaf_violations: 0,
            seconds: 0.0,
        };
        for g in &graphs {
            let res = iterative_compression_with(g, k, opts, &mut monitor)?;
            row.feasible += res.cover.is_some() as usize;
            row.nodes += res.stats.nodes;
            row.leaves += res.stats.leaves;
            row.disjoint_solves += res.stats.disjoint_solves;
        }
        row.max_leaf_ratio = monitor.max_leaf_ratio;
        row.leaf_violations = monitor.leaf_violations;
        row.seconds = start.elapsed().as_secs_f64();
        rows.push(row);
    }
    let growth_base = fit_growth(&rows);
    Ok(BenchTable { suite: model.to_string(), rows, growth_base })
}

/// Fits `nodes ≈ a · b^k` over rows with at least one node and returns `b`.
pub fn fit_growth(rows: &[BenchRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.nodes > 0)
        .map(|r| (r.k as f64, (r.nodes as f64).ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some((sxy / sxx).exp())
}

impl BenchTable {
    /// Fixed-width table without timings.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "suite: {}", self.suite).unwrap();
        writeln!(
            out,
            "{:>3} {:>9} {:>8} {:>12} {:>12} {:>10} {:>10} {:>10}",
            "k", "instances", "feasible", "nodes", "leaves", "solves", "leaf_ratio", "violations"
        )
        .unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:>3} {:>9} {:>8} {:>12} {:>12} {:>10} {:>10.4} {:>10}",
                r.k, r.instances, r.feasible, r.nodes, r.leaves, r.disjoint_solves, r.max_leaf_ratio, r.leaf_violations
            )
            .unwrap();
        }
        match self.growth_base {
            Some(b) => writeln!(out, "growth base: {b:.4}").unwrap(),
            None => writeln!(out, "growth base: n/a").unwrap(),
        }
        let violations: u64 = self.rows.iter().map(|r| r.leaf_violations).sum();
        writeln!(out, "leaf bound: {}", if violations == 0 { "ok" } else { "VIOLATED" }).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(k: i64, nodes: u64) -> BenchRow {
        BenchRow {
            k,
            instances: 1,
            feasible: 0,
            nodes,
            leaves: 0,
            disjoint_solves: 0,
            max_leaf_ratio: 0.0,
            leaf_violations: 0,
            seconds: 0.0,
        }
    }

    #[test]
    fn fits_exact_exponential() {
        let rows: Vec<_> = (0..6).map(|k| row(k, 3 * 2u64.pow(k as u32))).collect();
        assert!((fit_growth(&rows).unwrap() - 2.0).abs() < 1e-9);
        assert_eq!(fit_growth(&rows[..1]), None);
    }

    #[test]
    fn small_suite_runs() {
        let t = run(&Model::Gnp { n: 12, p: 0.3 }, 3, 1, 3, SolveOptions::default()).unwrap();
        assert_eq!(t.rows.len(), 4);
        assert!(t.rows.iter().all(|r| r.leaf_violations == 0));
        assert!(t.to_text().contains("leaf bound: ok"));
    }
}
