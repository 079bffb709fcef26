//! Search driver for the disjoint problem, the iterative-compression loop
//! that lifts it to plain 4-path vertex cover, and a minimization wrapper.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{InvariantViolation, SolveError};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::partition::{Instance, InstanceError};
use crate::combinations::next_combination;
use crate::rules::{select_rule, Fired, RuleOutcome, RULE_COUNT};

pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search nodes per disjoint solve.
    pub node_cap: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { node_cap: DEFAULT_NODE_CAP }
    }
}

/// Search-tree instrumentation.
///
/// A node is one invocation of the branching procedure; reductions applied
/// inside a node do not open new nodes. A leaf is a node that answers
/// without exploring any child, either through a terminal rule or because
/// every branch set exceeds the remaining budget.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub leaves: u64,
    pub max_depth: u64,
    pub reductions: u64,
    /// Number of disjoint solves folded into these stats.
    pub disjoint_solves: u64,
    /// `rule_fires[i]` counts firings of rule `i + 1`.
    pub rule_fires: [u64; RULE_COUNT],
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SolveStats {
    pub fn merge(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.reductions += other.reductions;
        self.disjoint_solves += other.disjoint_solves;
        for (a, b) in self.rule_fires.iter_mut().zip(other.rule_fires) {
            *a += b;
        }
        self.elapsed += other.elapsed;
    }

    pub fn fires(&self, rule_id: u8) -> u64 {
        self.rule_fires[rule_id as usize - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub cover: Option<VertexSet>,
    pub stats: SolveStats,
}

/// Hooks into the search. All methods default to no-ops.
pub trait SearchObserver {
    /// Called at every rule application, before the outcome is acted on.
    fn on_rule(&mut self, _inst: &Instance, _depth: u64, _fired: &Fired) {}

    /// Called when a disjoint solve with initial budget `k0` finishes.
    fn on_disjoint_done(&mut self, _k0: i64, _result: &CoverResult) {}
}

/// Observer that ignores everything.
#[derive(Debug, Default, Clone, Copy)]
pub struct Quiet;

impl SearchObserver for Quiet {}

struct Search<'o> {
    opts: SolveOptions,
    stats: SolveStats,
    observer: &'o mut dyn SearchObserver,
}

impl Search<'_> {
    fn run(&mut self, mut inst: Instance, depth: u64) -> Result<Option<VertexSet>, SolveError> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.opts.node_cap {
            return Err(SolveError::NodeBudgetExceeded { cap: self.opts.node_cap });
        }
        self.stats.max_depth = self.stats.max_depth.max(depth);
        loop {
            let fired = select_rule(&inst)?;
            self.observer.on_rule(&inst, depth, &fired);
            let id = fired.rule_id();
            self.stats.rule_fires[id as usize - 1] += 1;
            match fired.outcome {
                RuleOutcome::Terminal(yes) => {
                    self.stats.leaves += 1;
                    return Ok(yes.then(VertexSet::new));
                }
                RuleOutcome::Reduce { next, .. } => {
                    if measure(&next) >= measure(&inst) {
                        return Err(InvariantViolation::in_rule(id, "reduction did not shrink the instance").into());
                    }
                    self.stats.reductions += 1;
                    inst = next;
                }
                RuleOutcome::Branch(sets) => {
                    let mut explored = false;
                    for set in sets {
                        // a child with negative budget would stop at rule 1
                        if set.len() as i64 > inst.k() {
                            continue;
                        }
                        explored = true;
                        let child = inst.take(set.vertices());
                        if let Some(mut cover) = self.run(child, depth + 1)? {
                            cover.extend(set.into_inner());
                            return Ok(Some(cover));
                        }
                    }
                    if !explored {
                        self.stats.leaves += 1;
                    }
                    return Ok(None);
                }
            }
        }
    }
}

fn measure(inst: &Instance) -> (usize, usize, usize) {
    (inst.v2_count(), inst.graph().num_edges(), inst.graph().num_vertices())
}

/// Decides the disjoint problem: is there a cover of size at most `k`
/// avoiding `V1`? Returns the first cover found.
pub fn solve_disjoint(inst: &Instance) -> Result<CoverResult, SolveError> {
    solve_disjoint_with(inst, SolveOptions::default(), &mut Quiet)
}

pub fn solve_disjoint_with(
    inst: &Instance,
    opts: SolveOptions,
    observer: &mut dyn SearchObserver,
) -> Result<CoverResult, SolveError> {
    let start = Instant::now();
    let mut search = Search { opts, stats: SolveStats::default(), observer };
    let cover = search.run(inst.clone(), 0)?;
    let mut stats = search.stats;
    stats.disjoint_solves = 1;
    stats.elapsed = start.elapsed();
    let result = CoverResult { cover, stats };
    observer.on_disjoint_done(inst.k(), &result);
    Ok(result)
}

/// Decides whether `g` has a 4-path vertex cover of size at most `k`.
///
/// Vertices are inserted in ascending id order while a cover of the
/// processed subgraph is maintained. When the cover overflows to `k + 1`
/// vertices, every subset `Y` of it is tried as the part kept in the new
/// solution (largest first), and the rest becomes the forbidden set of a
/// disjoint instance on the processed subgraph minus `Y`.
pub fn iterative_compression(g: &Graph, k: i64) -> Result<CoverResult, SolveError> {
    iterative_compression_with(g, k, SolveOptions::default(), &mut Quiet)
}

pub fn iterative_compression_with(
    g: &Graph,
    k: i64,
    opts: SolveOptions,
    observer: &mut dyn SearchObserver,
) -> Result<CoverResult, SolveError> {
    if k < 0 {
        return Err(SolveError::NegativeBudget(k));
    }
    let start = Instant::now();
    let mut stats = SolveStats::default();
    let mut processed = VertexSet::new();
    let mut cover = VertexSet::new();
    let mut outcome = Some(());
    for v in g.vertices() {
        processed.insert(v);
        cover.insert(v);
        if cover.len() as i64 <= k {
            continue;
        }
        let sub = g.induced_subgraph(&processed);
        match compress(&sub, &cover, k, opts, observer, &mut stats)? {
            Some(next) => cover = next,
            None => {
                outcome = None;
                break;
            }
        }
    }
    stats.elapsed = start.elapsed();
    let cover = match outcome {
        Some(()) => {
            if !verify_cover(g, &cover) || cover.len() as i64 > k {
                return Err(InvariantViolation::new(None, format!("compression produced an invalid cover {cover:?}")).into());
            }
            Some(cover)
        }
        None => None,
    };
    Ok(CoverResult { cover, stats })
}

/// Given a cover of `sub` of size `k + 1`, finds one of size at most `k`.
fn compress(
    sub: &Graph,
    cover: &VertexSet,
    k: i64,
    opts: SolveOptions,
    observer: &mut dyn SearchObserver,
    stats: &mut SolveStats,
) -> Result<Option<VertexSet>, SolveError> {
    let members: Vec<VertexId> = cover.iter().copied().collect();
    let n = members.len();
    for keep in (0..n.min(k as usize + 1)).rev() {
        let mut idx: Vec<usize> = (0..keep).collect();
        loop {
            let kept: VertexSet = idx.iter().map(|&i| members[i]).collect();
            let forbidden = cover.difference(&kept).copied();
            match Instance::new(sub.delete_vertices(&kept), forbidden, k - keep as i64) {
                Ok(inst) => {
                    let res = solve_disjoint_with(&inst, opts, observer)?;
                    stats.merge(&res.stats);
                    if let Some(mut found) = res.cover {
                        found.extend(kept);
                        return Ok(Some(found));
                    }
                }
                Err(InstanceError::V1HasFourPath(_)) => {}
                Err(e) => {
                    return Err(InvariantViolation::new(None, format!("compression built a bad instance: {e}")).into());
                }
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimum {
    pub size: usize,
    pub cover: VertexSet,
    pub stats: SolveStats,
}

/// Smallest `k` for which [`iterative_compression`] succeeds, with a witness.
pub fn minimize(g: &Graph) -> Result<Minimum, SolveError> {
    minimize_with(g, SolveOptions::default(), &mut Quiet)
}

pub fn minimize_with(g: &Graph, opts: SolveOptions, observer: &mut dyn SearchObserver) -> Result<Minimum, SolveError> {
    let mut stats = SolveStats::default();
    for k in 0..=g.num_vertices() as i64 {
        let res = iterative_compression_with(g, k, opts, observer)?;
        stats.merge(&res.stats);
        if let Some(cover) = res.cover {
            return Ok(Minimum { size: cover.len(), cover, stats });
        }
    }
    Err(InvariantViolation::new(None, "no cover found even with every vertex allowed").into())
}

/// Smallest budget for which [`solve_disjoint`] succeeds on `inst`, with a
/// witness. The budget stored in `inst` is ignored.
pub fn minimize_disjoint_with(
    inst: &Instance,
    opts: SolveOptions,
    observer: &mut dyn SearchObserver,
) -> Result<Minimum, SolveError> {
    let mut stats = SolveStats::default();
    for k in 0..=inst.v2_count() as i64 {
        let res = solve_disjoint_with(&inst.with_k(k), opts, observer)?;
        stats.merge(&res.stats);
        if let Some(cover) = res.cover {
            return Ok(Minimum { size: cover.len(), cover, stats });
        }
    }
    Err(InvariantViolation::new(None, "no cover found even with all of V2 allowed").into())
}

/// True iff `g - set` has no 4-path.
pub fn verify_cover(g: &Graph, set: &VertexSet) -> bool {
    g.find_4path_where(|v| !set.contains(&v)).is_none()
}
