//! Seeded instance generators.
//!
//! All randomness comes from [`PRNG_ID`] seeded with the [`GenSpec`] seed, so a
//! given [`GenSpec`] always yields the same graph or instance.

mod triggers;

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::partition::{Instance, InstanceError};

pub use triggers::{rule_trigger, TRIGGER_RULES};

/// Identifier of the generator PRNG, recorded in emitted files.
pub const PRNG_ID: &str = "chacha8";

pub fn rng_seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
    #[error("no valid V1 partition found after {0} attempts")]
    NoPartition(usize),
    #[error("no fixture for rule {rule} after {attempts} attempts")]
    NoFixture { rule: u8, attempts: usize },
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// Erdős–Rényi `G(n, p)`.
    Gnp { n: usize, p: f64 },
    Path { n: usize },
    Cycle { n: usize },
    /// `K_{1,leaves}` with center 0.
    Star { leaves: usize },
    /// A spine path with up to `legs` pendant vertices per spine vertex.
    Caterpillar { spine: usize, legs: usize },
    /// Ring of `s` three-vertex stars joined by connection vertices, with
    /// random leaves on the star ends.
    CycleOfStars { s: usize },
    /// A disjoint instance on which exactly `rule` is selected.
    RuleTrigger { rule: u8 },
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Gnp { n, p } => write!(f, "gnp n={n} p={p}"),
            Model::Path { n } => write!(f, "path n={n}"),
            Model::Cycle { n } => write!(f, "cycle n={n}"),
            Model::Star { leaves } => write!(f, "star leaves={leaves}"),
            Model::Caterpillar { spine, legs } => write!(f, "caterpillar spine={spine} legs={legs}"),
            Model::CycleOfStars { s } => write!(f, "cycle-of-stars s={s}"),
            Model::RuleTrigger { rule } => write!(f, "rule-trigger rule={rule}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub model: Model,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Graph(Graph),
    Instance(Instance),
}

impl Generated {
    pub fn graph(&self) -> &Graph {
        match self {
            Generated::Graph(g) => g,
            Generated::Instance(i) => i.graph(),
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    let mut rng = rng_seeded(spec.seed);
    Ok(match spec.model {
        Model::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GenError::InvalidSpec(format!("edge probability {p} outside [0, 1]")));
            }
            Generated::Graph(gnp(n, p, &mut rng))
        }
        Model::Path { n } => Generated::Graph(path(n)),
        Model::Cycle { n } => {
            if n < 3 {
                return Err(GenError::InvalidSpec(format!("cycle needs at least 3 vertices, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Generated::Graph(Graph::from_edges(n, &edges).expect("valid cycle"))
        }
        Model::Star { leaves } => {
            let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
            Generated::Graph(Graph::from_edges(leaves + 1, &edges).expect("valid star"))
        }
        Model::Caterpillar { spine, legs } => Generated::Graph(caterpillar(spine, legs, &mut rng)),
        Model::CycleOfStars { s } => {
            if s == 0 {
                return Err(GenError::InvalidSpec("cycle of stars needs s >= 1".into()));
            }
            Generated::Instance(cycle_of_stars(s, &mut rng))
        }
        Model::RuleTrigger { rule } => Generated::Instance(rule_trigger(rule, spec.seed)?),
    })
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).expect("distinct live vertices");
            }
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

fn caterpillar<R: Rng>(spine: usize, legs: usize, rng: &mut R) -> Graph {
    let counts: Vec<usize> = (0..spine).map(|_| rng.random_range(0..=legs)).collect();
    let n = spine + counts.iter().sum::<usize>();
    let mut g = Graph::new(n);
    for i in 1..spine {
        g.add_edge(i - 1, i).expect("spine edge");
    }
    let mut next = spine;
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            g.add_edge(i, next).expect("leg edge");
            next += 1;
        }
    }
    g
}

/// Star `i` is `{4i, 4i+1, 4i+2}` with center `4i+1`; `4i+3` joins the
/// end `4i+2` to the first end of the next star. Leaves come after.
fn cycle_of_stars<R: Rng>(s: usize, rng: &mut R) -> Instance {
    let mut edges = Vec::new();
    let mut v1 = Vec::new();
    for i in 0..s {
        let (u, v, w, x) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        edges.extend([(u, v), (v, w), (w, x), (x, 4 * ((i + 1) % s))]);
        v1.push(x);
    }
    let mut n = 4 * s;
    for i in 0..s {
        for end in [4 * i, 4 * i + 2] {
            if rng.random_bool(0.3) {
                edges.push((end, n));
                v1.push(n);
                n += 1;
            }
        }
    }
    let g = Graph::from_edges(n, &edges).expect("valid ring");
    Instance::new(g, v1, s as i64).expect("ring of stars is a valid instance")
}

const PARTITION_ATTEMPTS: usize = 64;

/// Picks a `V1` for `g` that covers every 4-path and induces none.
///
/// Each attempt greedily hits 4-paths with a random vertex of the path
/// found, then drops redundant members in random order. Fails when no
/// attempt yields a 4-path-free `G[V1]` (for dense graphs none may exist).
pub fn make_disjoint_instance(g: &Graph, seed: u64, k: i64) -> Result<Instance, GenError> {
    let mut rng = rng_seeded(seed);
    for _ in 0..PARTITION_ATTEMPTS {
        let mut v1 = VertexSet::new();
        while let Some(p) = g.find_4path_where(|v| !v1.contains(&v)) {
            v1.insert(p[rng.random_range(0..4)]);
        }
        let mut order: Vec<VertexId> = v1.iter().copied().collect();
        order.shuffle(&mut rng);
        for v in order {
            v1.remove(&v);
            if g.find_4path_where(|u| !v1.contains(&u)).is_some() {
                v1.insert(v);
            }
        }
        if g.find_4path_where(|v| v1.contains(&v)).is_none() {
            return Ok(Instance::new(g.clone(), v1, k)?);
        }
    }
    Err(GenError::NoPartition(PARTITION_ATTEMPTS))
}
