//! Rules 1-9: budget and termination checks, component-level reductions,
//! forced vertices on short paths, and the clean-up that leaves `V1` an
//! independent set whose vertices touch `V2` in a controlled way.

use crate::error::InvariantViolation;
use crate::graph::{VertexId, VertexSet};
use crate::combinations::next_combination;
use crate::partition::{to_set, Side, Structure};

use super::{branch, fired, MatchResult, ReduceNote, RuleOutcome};

pub(super) fn budget(s: &Structure<'_>) -> MatchResult {
    let k = s.instance().k();
    if k < 0 {
        return fired(1, Vec::new(), RuleOutcome::Terminal(false));
    }
    if k == 0 {
        if let Some(p) = s.four_path() {
            return fired(1, p.to_vec(), RuleOutcome::Terminal(false));
        }
    }
    Ok(None)
}

pub(super) fn solved(s: &Structure<'_>) -> MatchResult {
    if s.four_path().is_none() {
        return fired(2, Vec::new(), RuleOutcome::Terminal(true));
    }
    Ok(None)
}

pub(super) fn drop_component(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    let g = s.graph();
    for comp in s.components() {
        if !g.component_has_4path(comp) {
            let next = inst.without_vertices(comp);
            return fired(3, comp.clone(), RuleOutcome::Reduce { next, note: ReduceNote::DropComponent });
        }
    }
    Ok(None)
}

/// Lexicographically least minimum `V1`-disjoint cover of `G[comp]`, found
/// by enumerating subsets of `comp ∩ V2` by size.
pub(crate) fn min_cover_of_component(s: &Structure<'_>, comp: &[VertexId]) -> Option<VertexSet> {
    let inst = s.instance();
    let g = s.graph();
    let cands: Vec<VertexId> = comp.iter().copied().filter(|&v| !inst.is_v1(v)).collect();
    let n = cands.len();
    let inside = |v: VertexId| comp.binary_search(&v).is_ok();
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let chosen: Vec<VertexId> = idx.iter().map(|&i| cands[i]).collect();
            if g.find_4path_where(|v| inside(v) && !chosen.contains(&v)).is_none() {
                return Some(to_set(chosen));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    None
}

pub(super) fn small_component(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    for comp in s.components() {
        let in_v2 = comp.iter().filter(|&&v| !inst.is_v1(v)).count();
        if in_v2 > 3 {
            continue;
        }
        let cover = min_cover_of_component(s, comp).ok_or_else(|| {
            InvariantViolation::in_rule(4, format!("component {comp:?} has no V1-disjoint cover"))
        })?;
        return branch(4, comp.clone(), [cover]);
    }
    Ok(None)
}

pub(super) fn move_to_v1(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    for v in inst.v2() {
        let deg2 = inst.deg_i(v, Side::Two);
        let only_leaves = inst.neighbors_on(v, Side::One).all(|x| s.is_leaf(x));
        let pendant = deg2 == 1 && only_leaves;
        let in_triangle = inst.deg_i(v, Side::One) == 0 && {
            let c = s.comp_index(v).expect("V2 vertex without component");
            s.graph().is_triangle_on(s.comp(c))
        };
        if pendant || in_triangle {
            let next = inst.with_v1_vertex(v);
            return fired(5, vec![v], RuleOutcome::Reduce { next, note: ReduceNote::MoveToV1 });
        }
    }
    Ok(None)
}

/// A 4-path through `v` whose other three vertices lie in `V1`.
fn path_with_single_v2(s: &Structure<'_>, v: VertexId) -> Option<[VertexId; 4]> {
    let inst = s.instance();
    let n1 = |u: VertexId| inst.neighbors_on(u, Side::One);
    // v at an end: v, a, b, c
    for a in n1(v) {
        for b in n1(a) {
            if let Some(c) = n1(b).find(|&c| c != a) {
                return Some([v, a, b, c]);
            }
        }
    }
    // v second: a, v, b, c
    for a in n1(v) {
        for b in n1(v).filter(|&b| b != a) {
            if let Some(c) = n1(b).find(|&c| c != a) {
                return Some([a, v, b, c]);
            }
        }
    }
    None
}

pub(super) fn forced_vertex(s: &Structure<'_>) -> MatchResult {
    for v in s.instance().v2() {
        if let Some(p) = path_with_single_v2(s, v) {
            return branch(6, p.to_vec(), [to_set([v])]);
        }
    }
    Ok(None)
}

pub(super) fn p3_branch(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    let outside = |a: VertexId, b: VertexId, v: VertexId| -> VertexSet {
        inst.neighbors_on(a, Side::Two)
            .chain(inst.neighbors_on(b, Side::Two))
            .filter(|&w| w != v)
            .collect()
    };
    for v in inst.v2() {
        let n1: Vec<VertexId> = inst.neighbors_on(v, Side::One).collect();
        // v in the middle: x1, v, x3
        for (i, &x1) in n1.iter().enumerate() {
            for &x3 in &n1[i + 1..] {
                let set = outside(x1, x3, v);
                if set.len() >= 2 {
                    return branch(7, vec![x1, v, x3], [to_set([v]), set]);
                }
            }
        }
        // v at an end: v, x2, x3
        for &x2 in &n1 {
            for x3 in inst.neighbors_on(x2, Side::One) {
                let set = outside(v, x3, v);
                if set.len() >= 2 {
                    return branch(7, vec![v, x2, x3], [to_set([v]), set]);
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn v1_edge(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    let Some(comp) = inst.components_i(Side::One).into_iter().find(|c| c.len() >= 2) else {
        return Ok(None);
    };
    let set = to_set(comp.iter().copied());
    let around = inst.n_i_of_set(&set, Side::Two);
    for v in around {
        let mut n2 = inst.neighbors_on(v, Side::Two);
        if let (Some(u), None) = (n2.next(), n2.next()) {
            let mut witness = comp.clone();
            witness.extend([v, u]);
            return branch(8, witness, [to_set([u])]);
        }
    }
    Err(InvariantViolation::in_rule(
        8,
        format!("1-component {comp:?} has no neighbor with exactly one V2 neighbor"),
    ))
}

pub(super) fn delete_edge(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    for v in inst.v2() {
        let mut conn = inst.neighbors_on(v, Side::One).filter(|&x| s.is_connection(x));
        if let (Some(x1), Some(x2)) = (conn.next(), conn.next()) {
            let next = inst.without_edge(v, x2);
            return fired(9, vec![v, x1, x2], RuleOutcome::Reduce { next, note: ReduceNote::DeleteEdge });
        }
    }
    Ok(None)
}
