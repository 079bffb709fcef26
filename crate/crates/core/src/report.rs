//! Solve reports in text and JSON form.
//!
//! The text form contains no timings, so identical inputs produce identical
//! bytes. The JSON form adds wall time and carries a `schema` version.

use std::fmt::Write as _;

use serde::Serialize;

use crate::graph::VertexSet;
use crate::rules::{rule_name, RULE_COUNT};
use crate::solver::SolveStats;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleFires {
    pub id: u8,
    pub name: &'static str,
    pub fires: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub vertices: usize,
    pub edges: usize,
    /// Number of forbidden vertices; 0 for a plain graph.
    pub v1_size: usize,
    /// The budget asked about; absent for minimization.
    pub k: Option<i64>,
    pub feasible: bool,
    /// 1-based ids.
    pub cover: Option<Vec<usize>>,
    pub stats: SolveStats,
    pub rule_fires: Vec<RuleFires>,
}

impl Report {
    pub fn new(
        command: &str,
        vertices: usize,
        edges: usize,
        v1_size: usize,
        k: Option<i64>,
        cover: Option<&VertexSet>,
        stats: SolveStats,
    ) -> Self {
        let rule_fires = (1..=RULE_COUNT as u8)
            .map(|id| RuleFires { id, name: rule_name(id), fires: stats.fires(id) })
            .collect();
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            vertices,
            edges,
            v1_size,
            k,
            feasible: cover.is_some(),
            cover: cover.map(|c| c.iter().map(|v| v + 1).collect()),
            stats,
            rule_fires,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "answer: {}", if self.feasible { "yes" } else { "no" }).unwrap();
        writeln!(w, "graph: {} vertices, {} edges, {} in V1", self.vertices, self.edges, self.v1_size).unwrap();
        if let Some(k) = self.k {
            writeln!(w, "k: {k}").unwrap();
        }
        if let Some(cover) = &self.cover {
            let ids: Vec<String> = cover.iter().map(usize::to_string).collect();
            writeln!(w, "size: {}", cover.len()).unwrap();
            writeln!(w, "cover: {}", ids.join(" ")).unwrap();
        }
        let s = &self.stats;
        writeln!(w, "nodes: {}", s.nodes).unwrap();
        writeln!(w, "leaves: {}", s.leaves).unwrap();
        writeln!(w, "max_depth: {}", s.max_depth).unwrap();
        writeln!(w, "reductions: {}", s.reductions).unwrap();
        writeln!(w, "disjoint_solves: {}", s.disjoint_solves).unwrap();
        writeln!(w, "rule fires:").unwrap();
        for r in self.rule_fires.iter().filter(|r| r.fires > 0) {
            writeln!(w, "  {:>2} {:<22} {}", r.id, r.name, r.fires).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut stats = SolveStats { nodes: 3, leaves: 2, ..Default::default() };
        stats.rule_fires[3] = 1;
        Report::new("solve", 4, 3, 2, Some(1), Some(&[1].into_iter().collect()), stats)
    }

    #[test]
    fn json_has_schema_and_fires() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["cover"], serde_json::json!([2]));
        assert_eq!(v["rule_fires"][3]["name"], "small_component");
        assert_eq!(v["rule_fires"][3]["fires"], 1);
        assert_eq!(v["stats"]["nodes"], 3);
    }

    #[test]
    fn text_lists_only_fired_rules() {
        let text = sample().to_text();
        assert!(text.starts_with("answer: yes\n"));
        assert!(text.contains("cover: 2\n"));
        assert!(text.contains("small_component"));
        assert!(!text.contains("budget"));
    }
}
