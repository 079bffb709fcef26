//! The prioritized reduction and branching rules for the disjoint problem.
//!
//! Every rule is a matcher over an [`Instance`]; a matcher either declines
//! or produces a [`Fired`] record holding the witness and the action. The
//! engine, [`select_rule`], runs the matchers in priority order and returns
//! the first that fires. Later matchers rely on earlier ones having
//! declined: calling rule `r` directly on an instance where some rule
//! `< r` applies may yield an [`InvariantViolation`].
//!
//! All pattern searches scan vertices and components in ascending id order
//! and the first match wins.

mod cycle;
mod early;
mod split;

use std::fmt;

use crate::error::InvariantViolation;
use crate::graph::{VertexId, VertexSet};
use crate::partition::{Instance, Structure};

pub use cycle::{cycle_of_stars, StarCycle};

pub const RULE_COUNT: usize = 24;

/// A nonempty set of `V2` vertices put into the cover on one branch.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BranchSet(VertexSet);

impl BranchSet {
    pub fn new(set: VertexSet) -> Option<BranchSet> {
        (!set.is_empty()).then_some(BranchSet(set))
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_inner(self) -> VertexSet {
        self.0
    }
}

impl fmt::Display for BranchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReduceNote {
    DropComponent,
    MoveToV1,
    DeleteEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOutcome {
    /// `true` = yes instance.
    Terminal(bool),
    Reduce { next: Instance, note: ReduceNote },
    Branch(Vec<BranchSet>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleMatch {
    pub rule_id: u8,
    /// Vertices that matched the rule's pattern, in a rule-specific order.
    pub witness: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fired {
    pub matched: RuleMatch,
    pub outcome: RuleOutcome,
}

impl Fired {
    pub fn rule_id(&self) -> u8 {
        self.matched.rule_id
    }
}

pub type MatchResult = Result<Option<Fired>, InvariantViolation>;

type Matcher = fn(&Structure<'_>) -> MatchResult;

/// `(id, short name, matcher)` in priority order.
const RULES: [(u8, &str, Matcher); RULE_COUNT] = [
    (1, "budget", early::budget),
    (2, "solved", early::solved),
    (3, "drop_component", early::drop_component),
    (4, "small_component", early::small_component),
    (5, "move_to_v1", early::move_to_v1),
    (6, "forced_vertex", early::forced_vertex),
    (7, "p3_branch", early::p3_branch),
    (8, "v1_edge", early::v1_edge),
    (9, "delete_edge", early::delete_edge),
    (10, "boundary_branch", split::boundary_branch),
    (11, "contained_big", split::contained_big),
    (12, "triangle", split::triangle),
    (13, "split1_leaves", split::split1_leaves),
    (14, "not_independent", split::not_independent),
    (15, "contains_special", split::contains_special),
    (16, "contains", split::contains),
    (17, "split_one", split::split_one),
    (18, "degv_leaf", split::degv_leaf),
    (19, "degv", split::degv),
    (20, "large_intersection", split::large_intersection),
    (21, "split_three", split::split_three),
    (22, "large_far_component", split::large_far_component),
    (23, "large_star", split::large_star),
    (24, "cycle_of_stars", cycle::cycle_rule),
];

pub fn rule_name(id: u8) -> &'static str {
    RULES
        .get((id as usize).wrapping_sub(1))
        .map(|r| r.1)
        .unwrap_or("unknown")
}

/// Runs the first applicable rule.
pub fn select_rule(inst: &Instance) -> Result<Fired, InvariantViolation> {
    let s = Structure::new(inst);
    for (id, _, matcher) in RULES {
        if let Some(fired) = matcher(&s)? {
            debug_assert_eq!(fired.rule_id(), id);
            check_outcome(inst, &fired)?;
            return Ok(fired);
        }
    }
    Err(InvariantViolation::in_rule(24, "no rule applies"))
}

/// Runs a single matcher in isolation.
pub fn match_rule(id: u8, inst: &Instance) -> MatchResult {
    let (_, _, matcher) = RULES
        .get((id as usize).wrapping_sub(1))
        .ok_or_else(|| InvariantViolation::new(None, format!("no rule {id}")))?;
    matcher(&Structure::new(inst))
}

fn check_outcome(inst: &Instance, fired: &Fired) -> Result<(), InvariantViolation> {
    if let RuleOutcome::Branch(branches) = &fired.outcome {
        if branches.is_empty() {
            return Err(InvariantViolation::in_rule(fired.rule_id(), "branch list is empty"));
        }
        for b in branches {
            if let Some(&v) = b.vertices().iter().find(|&&v| inst.is_v1(v) || !inst.graph().contains(v)) {
                return Err(InvariantViolation::in_rule(
                    fired.rule_id(),
                    format!("branch set {b} contains {v}, which is not a live V2 vertex"),
                ));
            }
        }
    }
    Ok(())
}

macro_rules! rule_fns {
    ($($name:ident = $id:literal),* $(,)?) => {
        $(
            #[doc = concat!("Matcher for rule ", stringify!($id), " on its own; see [`match_rule`].")]
            pub fn $name(inst: &Instance) -> MatchResult {
                match_rule($id, inst)
            }
        )*
    };
}

rule_fns! {
    rule01_budget = 1,
    rule02_solved = 2,
    rule03_drop_component = 3,
    rule04_small_component = 4,
    rule05_move_to_v1 = 5,
    rule06_forced_vertex = 6,
    rule07_p3_branch = 7,
    rule08_v1_edge = 8,
    rule09_delete_edge = 9,
    rule10_boundary_branch = 10,
    rule11_contained_big = 11,
    rule12_triangle = 12,
    rule13_split1_leaves = 13,
    rule14_not_independent = 14,
    rule15_contains_special = 15,
    rule16_contains = 16,
    rule17_split_one = 17,
    rule18_degv_leaf = 18,
    rule19_degv = 19,
    rule20_large_intersection = 20,
    rule21_split_three = 21,
    rule22_large_far_component = 22,
    rule23_large_star = 23,
    rule24_cycle_of_stars = 24,
}

pub(crate) fn fired(rule_id: u8, witness: Vec<VertexId>, outcome: RuleOutcome) -> MatchResult {
    Ok(Some(Fired { matched: RuleMatch { rule_id, witness }, outcome }))
}

/// Builds a branch outcome, rejecting empty sets.
pub(crate) fn branch<I>(rule_id: u8, witness: Vec<VertexId>, sets: I) -> MatchResult
where
    I: IntoIterator<Item = VertexSet>,
{
    let mut out = Vec::new();
    for s in sets {
        match BranchSet::new(s) {
            Some(b) => out.push(b),
            None => {
                return Err(InvariantViolation::in_rule(
                    rule_id,
                    format!("empty branch set (witness {witness:?})"),
                ))
            }
        }
    }
    fired(rule_id, witness, RuleOutcome::Branch(out))
}
