//! Fixtures on which a chosen rule is the one selected.
//!
//! Random instances are drawn from a family shaped like the late stages of
//! the search: `V2` is a disjoint union of stars and triangles, and `V1` is
//! an independent set attached to it. If the root instance does not select
//! the target rule, the search is run on it and the first visited state that
//! does is returned instead.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::partition::Instance;
use crate::rules::{select_rule, Fired, RULE_COUNT};
use crate::solver::{solve_disjoint_with, SearchObserver, SolveOptions};

use super::{rng_seeded, GenError};

const ATTEMPTS: usize = 6000;
const CAPTURE_NODE_CAP: u64 = 20_000;
/// Keeps fixtures small enough for exhaustive checking.
pub const MAX_V2: usize = 16;

/// Rule ids with fixtures. Rules 1 and 2 are terminal
/// checks that every other fixture exercises.
pub const TRIGGER_RULES: std::ops::RangeInclusive<u8> = 3..=RULE_COUNT as u8;

pub fn rule_trigger(rule: u8, seed: u64) -> Result<Instance, GenError> {
    if !TRIGGER_RULES.contains(&rule) {
        return Err(GenError::InvalidSpec(format!("no fixtures for rule {rule}")));
    }
    for attempt in 0..ATTEMPTS {
        let mut rng = rng_seeded(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(attempt as u64));
        let families = families_for(rule);
        let family = families[attempt % families.len()];
        let Some(inst) = structured(&mut rng, family) else { continue };
        if let Some(found) = capture(&inst, rule) {
            return Ok(found);
        }
    }
    Err(GenError::NoFixture { rule, attempts: ATTEMPTS })
}

struct Capture {
    rule: u8,
    found: Option<Instance>,
}

impl SearchObserver for Capture {
    fn on_rule(&mut self, inst: &Instance, _depth: u64, fired: &Fired) {
        if self.found.is_none() && fired.rule_id() == self.rule {
            self.found = Some(inst.clone());
        }
    }
}

fn capture(inst: &Instance, rule: u8) -> Option<Instance> {
    if select_rule(inst).ok()?.rule_id() == rule {
        return Some(inst.clone());
    }
    let mut obs = Capture { rule, found: None };
    let _ = solve_disjoint_with(inst, SolveOptions { node_cap: CAPTURE_NODE_CAP }, &mut obs);
    obs.found
}

#[derive(Clone, Copy)]
enum Family {
    /// Each `V1` vertex picks a few single `V2` vertices.
    Scattered,
    /// Each `V1` vertex picks a few components and a subset of each.
    Blocks,
    /// Star petals joined in pairs by degree-2 connection vertices.
    Petals,
    /// Each `V1` vertex holds a whole small component and single vertices
    /// of others.
    Contain,
    /// Rings of three-vertex stars.
    Ring,
}

const FAMILIES: [Family; 5] = [Family::Scattered, Family::Blocks, Family::Petals, Family::Contain, Family::Ring];

/// Families that reach `rule` most often.
fn families_for(rule: u8) -> &'static [Family] {
    match rule {
        8 | 13 | 16..=23 => &[Family::Petals],
        9 | 10 => &[Family::Scattered, Family::Contain],
        11 => &[Family::Blocks],
        12 | 14 | 15 => &[Family::Contain],
        24 => &[Family::Ring],
        _ => &FAMILIES,
    }
}

/// A random instance whose `V2` side is a union of stars and triangles and
/// whose `V1` side is independent. `None` if the draw is not a valid
/// instance.
fn structured(rng: &mut ChaCha8Rng, family: Family) -> Option<Instance> {
    let mut b = Builder::default();
    match family {
        Family::Scattered | Family::Blocks => {
            let parts = rng.random_range(2..=5);
            for _ in 0..parts {
                if rng.random_bool(0.15) {
                    b.triangle();
                } else {
                    b.star(rng.random_range(1..=5));
                }
            }
            for _ in 0..rng.random_range(1..=6) {
                let targets = match family {
                    Family::Scattered => {
                        let deg = rng.random_range(1..=3);
                        let mut t: Vec<VertexId> = Vec::new();
                        for _ in 0..deg {
                            let v = *b.comps.choose(rng)?.choose(rng)?;
                            if !t.contains(&v) {
                                t.push(v);
                            }
                        }
                        t
                    }
                    _ => {
                        let touched = rng.random_range(1..=3usize.min(b.comps.len()));
                        let mut t = Vec::new();
                        for comp in b.comps.choose_multiple(rng, touched) {
                            let take = if rng.random_bool(0.3) { comp.len() } else { rng.random_range(1..=comp.len()) };
                            t.extend(comp.choose_multiple(rng, take));
                        }
                        t
                    }
                };
                b.v1_vertex(&targets);
            }
        }
        Family::Contain => {
            for _ in 0..rng.random_range(3..=5) {
                if rng.random_bool(0.35) {
                    b.triangle();
                } else {
                    b.star(rng.random_range(1..=4));
                }
            }
            for _ in 0..rng.random_range(1..=4) {
                let mut picked = b.comps.choose_multiple(rng, 3).cloned();
                let mut targets = picked.next()?;
                if targets.len() > 2 && rng.random_bool(0.7) {
                    targets.truncate(2);
                }
                for comp in picked.take(rng.random_range(1..=2)) {
                    targets.push(*comp.choose(rng)?);
                }
                b.v1_vertex(&targets);
            }
            b.sprinkle_leaves(rng, 0.15);
        }
        Family::Petals => {
            let mut petals = Vec::new();
            for _ in 0..rng.random_range(2..=4) {
                let comp = b.star(rng.random_range(3..=6));
                petals.extend(comp[1..].iter().copied());
            }
            petals.shuffle(rng);
            while petals.len() >= 2 {
                let a = petals.pop()?;
                if rng.random_bool(0.15) {
                    continue;
                }
                let mut targets = vec![a];
                let partners = if rng.random_bool(0.2) { 2 } else { 1 };
                for _ in 0..partners.min(petals.len()) {
                    targets.push(petals.pop()?);
                }
                b.v1_vertex(&targets);
            }
            let density = *[0.2, 0.5, 0.8].choose(rng)?;
            b.sprinkle_leaves(rng, density);
        }
        Family::Ring => {
            for _ in 0..rng.random_range(1..=2) {
                let s = rng.random_range(1..=3);
                let stars: Vec<Vec<VertexId>> = (0..s).map(|_| b.star(3)).collect();
                for i in 0..s {
                    let next = &stars[(i + 1) % s];
                    b.v1_vertex(&[stars[i][2], next[1]]);
                }
            }
            b.sprinkle_leaves(rng, 0.3);
        }
    }
    let v2_count = b.n - b.v1.len();
    if v2_count > MAX_V2 {
        return None;
    }
    let g = Graph::from_edges(b.n, &b.edges).ok()?;
    let k = rng.random_range(0..=v2_count as i64 / 2 + 1);
    Instance::new(g, b.v1, k).ok()
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    comps: Vec<Vec<VertexId>>,
    v1: Vec<VertexId>,
}

impl Builder {
    /// A star on `size` vertices; the center comes first.
    fn star(&mut self, size: usize) -> Vec<VertexId> {
        let comp: Vec<VertexId> = (self.n..self.n + size).collect();
        self.edges.extend(comp[1..].iter().map(|&p| (comp[0], p)));
        self.n += size;
        self.comps.push(comp.clone());
        comp
    }

    fn triangle(&mut self) {
        let c = self.n;
        self.edges.extend([(c, c + 1), (c + 1, c + 2), (c, c + 2)]);
        self.comps.push(vec![c, c + 1, c + 2]);
        self.n += 3;
    }

    fn v1_vertex(&mut self, targets: &[VertexId]) {
        let x = self.n;
        self.n += 1;
        self.v1.push(x);
        self.edges.extend(targets.iter().map(|&t| (x, t)));
    }

    /// Hangs a degree-1 `V1` vertex off each non-center star vertex with
    /// probability `p`.
    fn sprinkle_leaves(&mut self, rng: &mut ChaCha8Rng, p: f64) {
        let ends: Vec<VertexId> = self.comps.iter().flat_map(|c| c[1..].to_vec()).collect();
        for e in ends {
            if rng.random_bool(p) {
                self.v1_vertex(&[e]);
            }
        }
    }
}
