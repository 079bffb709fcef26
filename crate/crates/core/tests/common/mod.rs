//! Test-side instruments that do not reuse the library's own checks.
//!
//! The observations, the ring-of-stars shape and the leaf ceiling are
//! recomputed here from adjacency alone, so a bug in the library's
//! structural helpers cannot hide itself.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use pvc4::generate::make_disjoint_instance;
use pvc4::rules::{match_rule, Fired, RuleOutcome};
use pvc4::solver::{CoverResult, SearchObserver};
use pvc4::{Graph, Instance, VertexId};

/// `⌈1.62^k⌉`, the leaf ceiling for a disjoint solve with budget `k`.
pub fn leaf_bound(k: i64) -> u64 {
    1.62f64.powi(k.max(0) as i32).ceil() as u64
}

/// Graph on `n ≤ max_n` vertices from an edge mask over all pairs.
pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges: Vec<_> = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Seeded disjoint instance on a random graph, when a partition exists.
pub fn instance_strategy(max_n: usize) -> impl Strategy<Value = Option<Instance>> {
    (graph_strategy(max_n), any::<u64>()).prop_map(|(g, seed)| make_disjoint_instance(&g, seed, 0).ok())
}

/// Adjacency-level view of an instance.
pub struct View<'a> {
    inst: &'a Instance,
    /// Components of `G[V2]`, each sorted.
    pub comps2: Vec<Vec<VertexId>>,
}

impl<'a> View<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        let g = inst.graph();
        let mut seen = BTreeSet::new();
        let mut comps2 = Vec::new();
        for v in g.vertices().filter(|&v| !inst.is_v1(v)) {
            if !seen.insert(v) {
                continue;
            }
            let mut comp = vec![v];
            let mut i = 0;
            while i < comp.len() {
                for &u in g.neighbors(comp[i]) {
                    if !inst.is_v1(u) && seen.insert(u) {
                        comp.push(u);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            comps2.push(comp);
        }
        View { inst, comps2 }
    }

    fn n1(&self, v: VertexId) -> Vec<VertexId> {
        self.inst.graph().neighbors(v).iter().copied().filter(|&u| self.inst.is_v1(u)).collect()
    }

    fn n2(&self, v: VertexId) -> Vec<VertexId> {
        self.inst.graph().neighbors(v).iter().copied().filter(|&u| !self.inst.is_v1(u)).collect()
    }

    pub fn is_connection(&self, x: VertexId) -> bool {
        self.inst.is_v1(x) && self.n1(x).is_empty() && self.n2(x).len() >= 2
    }

    pub fn is_leaf(&self, x: VertexId) -> bool {
        self.inst.is_v1(x) && self.n1(x).is_empty() && self.n2(x).len() == 1
    }

    fn connections(&self) -> Vec<VertexId> {
        self.inst.graph().vertices().filter(|&x| self.is_connection(x)).collect()
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.inst.graph().neighbors(u).contains(&v)
    }

    /// 2-components met by `x` but not inside `N(x)`.
    fn split_by(&self, x: VertexId) -> Vec<&Vec<VertexId>> {
        self.comps2
            .iter()
            .filter(|c| {
                let hit = c.iter().filter(|&&v| self.adjacent(x, v)).count();
                hit > 0 && hit < c.len()
            })
            .collect()
    }

    /// Center of `G[set]` when it is a star on at least three vertices.
    fn star_center(&self, set: &[VertexId]) -> Option<VertexId> {
        if set.len() < 3 {
            return None;
        }
        let inner = |v: VertexId| set.iter().filter(|&&u| self.adjacent(v, u)).count();
        let center = *set.iter().find(|&&v| inner(v) == set.len() - 1)?;
        set.iter().all(|&v| v == center || inner(v) == 1).then_some(center)
    }

    /// Checks the five observations whose thresholds are at most `rule`.
    pub fn observation_failures(&self, rule: u8) -> Vec<String> {
        let inst = self.inst;
        let mut out = Vec::new();
        if rule >= 8 {
            for x in self.connections() {
                let crowded = self.n2(x).iter().any(|&v| self.n1(v) != [x]);
                if crowded && self.n2(x).len() != 2 {
                    out.push(format!("after 7: connection {x} has deg_2 {}", self.n2(x).len()));
                }
            }
        }
        if rule >= 9 {
            for x in inst.graph().vertices().filter(|&x| inst.is_v1(x)) {
                if !self.n1(x).is_empty() {
                    out.push(format!("after 8: V1 vertex {x} has a V1 neighbor"));
                }
            }
        }
        if rule >= 10 {
            for v in inst.graph().vertices().filter(|&v| !inst.is_v1(v)) {
                let n = self.n1(v).into_iter().filter(|&x| self.is_connection(x)).count();
                if n > 1 {
                    out.push(format!("after 9: V2 vertex {v} touches {n} connection vertices"));
                }
            }
        }
        if rule >= 18 {
            for x in self.connections() {
                let n = self.split_by(x).len();
                if n < 2 {
                    out.push(format!("after 17: connection {x} splits {n} components"));
                }
            }
        }
        if rule >= 20 {
            for x in self.connections() {
                for c in self.split_by(x) {
                    let boundary: Vec<VertexId> = c
                        .iter()
                        .copied()
                        .filter(|&b| !self.adjacent(x, b))
                        .filter(|&b| self.n2(b).iter().any(|&v| self.adjacent(x, v)))
                        .collect();
                    match (self.star_center(c), boundary.as_slice()) {
                        (Some(center), [b]) if *b == center && self.n1(center).is_empty() => {}
                        _ => out.push(format!("after 19: {c:?} split by {x} is not a star centered at its boundary")),
                    }
                }
            }
        }
        out
    }

    /// Checks that every component of the whole graph is a ring of
    /// three-vertex stars joined end to end through degree-2 connection
    /// vertices, with only leaves hanging off star ends.
    pub fn ring_of_stars_failure(&self) -> Option<String> {
        let inst = self.inst;
        let g = inst.graph();
        let mut star_of = std::collections::BTreeMap::new();
        let mut ends = BTreeSet::new();
        for (i, c) in self.comps2.iter().enumerate() {
            let center = match (c.len(), self.star_center(c)) {
                (3, Some(center)) => center,
                _ => return Some(format!("{c:?} is not a 3-vertex star")),
            };
            if !self.n1(center).is_empty() {
                return Some(format!("center {center} has a V1 neighbor"));
            }
            for &v in c {
                star_of.insert(v, i);
                if v != center {
                    ends.insert(v);
                }
            }
        }
        // each end meets exactly one connection vertex; stars linked by
        // connections form cycles
        let mut links: Vec<Vec<usize>> = vec![Vec::new(); self.comps2.len()];
        for x in g.vertices().filter(|&x| inst.is_v1(x)) {
            if self.is_leaf(x) {
                if !ends.contains(&self.n2(x)[0]) {
                    return Some(format!("leaf {x} hangs off a star center"));
                }
                continue;
            }
            if !self.is_connection(x) || g.degree(x) != 2 {
                return Some(format!("V1 vertex {x} is neither a leaf nor a degree-2 connection"));
            }
            let (a, b) = (g.neighbors(x)[0], g.neighbors(x)[1]);
            if !ends.contains(&a) || !ends.contains(&b) || star_of[&a] == star_of[&b] {
                return Some(format!("connection {x} does not join ends of two stars"));
            }
            links[star_of[&a]].push(star_of[&b]);
            links[star_of[&b]].push(star_of[&a]);
        }
        for &e in &ends {
            let n = self.n1(e).into_iter().filter(|&x| self.is_connection(x)).count();
            if n != 1 {
                return Some(format!("star end {e} meets {n} connection vertices"));
            }
        }
        if links.iter().any(|l| l.len() != 2) {
            return Some("a star is not on exactly one ring".into());
        }
        None
    }
}

/// `(|V2|, |E|, |V|)`, which every reduction must strictly decrease.
pub fn measure(inst: &Instance) -> (usize, usize, usize) {
    (inst.v2_count(), inst.graph().num_edges(), inst.graph().num_vertices())
}

/// Observer recording every breach of the search invariants.
#[derive(Default)]
pub struct Checker {
    pub nodes_checked: u64,
    pub disjoint_solves: u64,
    pub rule24_nodes: u64,
    pub max_leaf_ratio: f64,
    pub observation_failures: Vec<String>,
    pub leaf_failures: Vec<String>,
    /// Lower rules that match, invalid rule-24 shapes, reductions that do
    /// not shrink the instance.
    pub totality_failures: Vec<String>,
}

fn record(list: &mut Vec<String>, msg: String) {
    if list.len() < 10 {
        list.push(msg);
    }
}

impl SearchObserver for Checker {
    fn on_rule(&mut self, inst: &Instance, _depth: u64, fired: &Fired) {
        self.nodes_checked += 1;
        let rule = fired.rule_id();
        let view = View::new(inst);
        for f in view.observation_failures(rule) {
            record(&mut self.observation_failures, format!("rule {rule}: {f}"));
        }
        for lower in 1..rule {
            match match_rule(lower, inst) {
                Ok(None) => {}
                Ok(Some(_)) => record(&mut self.totality_failures, format!("rule {lower} matches where {rule} fired")),
                Err(e) => record(&mut self.totality_failures, format!("rule {lower} errs where {rule} fired: {e}")),
            }
        }
        if rule == 24 {
            self.rule24_nodes += 1;
            if let Some(f) = view.ring_of_stars_failure() {
                record(&mut self.totality_failures, format!("rule 24 on a non-ring: {f}"));
            }
        }
        match &fired.outcome {
            RuleOutcome::Reduce { next, .. } if measure(next) >= measure(inst) => {
                record(&mut self.totality_failures, format!("rule {rule} reduction does not shrink the instance"));
            }
            RuleOutcome::Branch(sets) if sets.iter().any(|s| s.vertices().is_empty()) => {
                record(&mut self.totality_failures, format!("rule {rule} has an empty branch set"));
            }
            _ => {}
        }
    }

    fn on_disjoint_done(&mut self, k0: i64, result: &CoverResult) {
        self.disjoint_solves += 1;
        let bound = leaf_bound(k0);
        self.max_leaf_ratio = self.max_leaf_ratio.max(result.stats.leaves as f64 / bound as f64);
        if result.stats.leaves > bound {
            record(&mut self.leaf_failures, format!("k0 = {k0}: {} leaves > {bound}", result.stats.leaves));
        }
    }
}

impl Checker {
    pub fn assert_clean(&self) {
        assert!(self.observation_failures.is_empty(), "{:?}", self.observation_failures);
        assert!(self.leaf_failures.is_empty(), "{:?}", self.leaf_failures);
        assert!(self.totality_failures.is_empty(), "{:?}", self.totality_failures);
    }
}
