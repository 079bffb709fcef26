//! Structural facts that hold at a search node once a prefix of the rule
//! list has been ruled out. The solver does not rely on these checks; they
//! exist so tests and `selftest` can assert them at every visited node.

use std::fmt;

use serde::Serialize;

use crate::graph::VertexId;
use crate::partition::{Instance, Side, Structure};
use crate::rules::Fired;
use crate::solver::{CoverResult, SearchObserver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Observation {
    /// A connection vertex with a neighbor `v`, `N_1(v) != {x}`, has `deg_2 = 2`.
    ConnectionDegreeTwo,
    /// `V1` is independent.
    V1Independent,
    /// Each `V2` vertex touches at most one connection vertex.
    SingleConnection,
    /// Each connection vertex splits at least two 2-components.
    SplitsTwo,
    /// Split 2-components are stars centered at their boundary vertex, and
    /// the center has no `V1` neighbor.
    StarBoundaryCenter,
}

impl Observation {
    pub const ALL: [Observation; 5] = [
        Observation::ConnectionDegreeTwo,
        Observation::V1Independent,
        Observation::SingleConnection,
        Observation::SplitsTwo,
        Observation::StarBoundaryCenter,
    ];

    /// The observation holds whenever the selected rule id is at least this.
    pub fn threshold(self) -> u8 {
        match self {
            Observation::ConnectionDegreeTwo => 8,
            Observation::V1Independent => 9,
            Observation::SingleConnection => 10,
            Observation::SplitsTwo => 18,
            Observation::StarBoundaryCenter => 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservationViolation {
    pub observation: Observation,
    pub detail: String,
}

impl fmt::Display for ObservationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.observation, self.detail)
    }
}

/// Checks every observation whose threshold is at most `selected_rule`.
pub fn check_observations(inst: &Instance, selected_rule: u8) -> Vec<ObservationViolation> {
    let s = Structure::new(inst);
    let mut out = Vec::new();
    for obs in Observation::ALL {
        if selected_rule >= obs.threshold() {
            if let Err(detail) = check(&s, obs) {
                out.push(ObservationViolation { observation: obs, detail });
            }
        }
    }
    out
}

fn check(s: &Structure<'_>, obs: Observation) -> Result<(), String> {
    let inst = s.instance();
    let g = s.graph();
    match obs {
        Observation::ConnectionDegreeTwo => {
            for x in s.connections() {
                let crowded = g
                    .neighbors(x)
                    .iter()
                    .any(|&v| inst.neighbors_on(v, Side::One).any(|y| y != x));
                if crowded && inst.deg_i(x, Side::Two) != 2 {
                    return Err(format!("connection vertex {x} has deg_2 = {}", inst.deg_i(x, Side::Two)));
                }
            }
        }
        Observation::V1Independent => {
            if let Some(x) = inst.v1().find(|&x| inst.deg_i(x, Side::One) > 0) {
                return Err(format!("V1 vertex {x} has a V1 neighbor"));
            }
        }
        Observation::SingleConnection => {
            for v in inst.v2() {
                let conns: Vec<VertexId> = g.neighbors(v).iter().copied().filter(|&y| s.is_connection(y)).collect();
                if conns.len() > 1 {
                    return Err(format!("V2 vertex {v} touches connection vertices {conns:?}"));
                }
            }
        }
        Observation::SplitsTwo => {
            for x in s.connections() {
                let n = s.split_components(x).len();
                if n < 2 {
                    return Err(format!("connection vertex {x} splits {n} 2-components"));
                }
            }
        }
        Observation::StarBoundaryCenter => {
            for x in s.connections() {
                for c in s.split_components(x) {
                    let comp = s.comp(c);
                    let center = g.star_center(comp).ok_or_else(|| format!("split component {comp:?} is not a star"))?;
                    let boundary = s.boundary_vertex(x, c).map_err(|e| e.detail)?;
                    if boundary != center {
                        return Err(format!("boundary {boundary} of {comp:?} is not the center {center}"));
                    }
                    if inst.deg_i(center, Side::One) != 0 {
                        return Err(format!("center {center} of {comp:?} has a V1 neighbor"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Leaf ceiling `⌈1.62^k0⌉` for one disjoint solve with initial budget `k0`.
pub fn leaf_bound(k0: i64) -> u64 {
    1.62f64.powi(k0.max(0) as i32).ceil() as u64
}

/// Observer that checks the observations at every rule application and the
/// leaf ceiling after every disjoint solve, keeping the first few failures.
#[derive(Debug, Default, Clone)]
pub struct InvariantMonitor {
    pub nodes_checked: u64,
    pub disjoint_solves: u64,
    pub observation_violations: u64,
    pub leaf_violations: u64,
    /// Largest `leaves / leaf_bound(k0)` seen.
    pub max_leaf_ratio: f64,
    pub samples: Vec<String>,
}

const MAX_SAMPLES: usize = 8;

impl InvariantMonitor {
    pub fn is_clean(&self) -> bool {
        self.observation_violations == 0 && self.leaf_violations == 0
    }

    fn sample(&mut self, msg: String) {
        if self.samples.len() < MAX_SAMPLES {
            self.samples.push(msg);
        }
    }
}

impl SearchObserver for InvariantMonitor {
    fn on_rule(&mut self, inst: &Instance, depth: u64, fired: &Fired) {
        self.nodes_checked += 1;
        for v in check_observations(inst, fired.rule_id()) {
            self.observation_violations += 1;
            self.sample(format!("depth {depth}, rule {}: {v}", fired.rule_id()));
        }
    }

    fn on_disjoint_done(&mut self, k0: i64, result: &CoverResult) {
        self.disjoint_solves += 1;
        let bound = leaf_bound(k0);
        self.max_leaf_ratio = self.max_leaf_ratio.max(result.stats.leaves as f64 / bound as f64);
        if result.stats.leaves > bound {
            self.leaf_violations += 1;
            self.sample(format!("k0 = {k0}: {} leaves exceed {bound}", result.stats.leaves));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn v1_edge_breaks_independence() {
        // 0*-1* edge in V1, plus V2 path 2-3 attached
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, [0, 1], 1).unwrap();
        assert!(check_observations(&inst, 8).is_empty());
        let v = check_observations(&inst, 9);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].observation, Observation::V1Independent);
    }

    #[test]
    fn thresholds_gate_checks() {
        // x=0 touches both ends of the star {1,2,3} (center 2) and splits only it
        let g = Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, [0], 1).unwrap();
        assert!(check_observations(&inst, 17).is_empty());
        let v = check_observations(&inst, 18);
        assert!(v.iter().any(|o| o.observation == Observation::SplitsTwo));
    }

    #[test]
    fn leaf_bounds() {
        assert_eq!(leaf_bound(0), 1);
        assert_eq!(leaf_bound(1), 2);
        assert_eq!(leaf_bound(4), 7);
        assert_eq!(leaf_bound(-3), 1);
    }
}
