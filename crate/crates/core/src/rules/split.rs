//! Rules 10-23: branching around connection vertices and the 2-components
//! they contain or split.
//!
//! From rule 10 on, `V1` is independent and every `V2` vertex touches at
//! most one connection vertex, so every split has a unique boundary vertex.

use crate::error::InvariantViolation;
use crate::graph::{VertexId, VertexSet};
use crate::partition::{to_set, Side, Structure};

use super::{branch, MatchResult};

/// Connection vertices with the components they split, ascending.
fn splitting<'s>(s: &'s Structure<'_>) -> impl Iterator<Item = (VertexId, Vec<usize>)> + 's {
    s.connections().map(move |x| (x, s.split_components(x)))
}

fn star_center(s: &Structure<'_>, rule: u8, c: usize) -> Result<VertexId, InvariantViolation> {
    s.graph()
        .star_center(s.comp(c))
        .ok_or_else(|| InvariantViolation::in_rule(rule, format!("2-component {:?} is not a star", s.comp(c))))
}

fn single_meet(s: &Structure<'_>, rule: u8, x: VertexId, c: usize) -> Result<VertexId, InvariantViolation> {
    match s.meet(x, c)[..] {
        [u] => Ok(u),
        ref m => Err(InvariantViolation::in_rule(
            rule,
            format!("{x} meets {:?} in {m:?}, expected a single vertex", s.comp(c)),
        )),
    }
}

fn nx_adjacent_to_leaf(s: &Structure<'_>, x: VertexId) -> bool {
    s.graph().neighbors(x).iter().any(|&w| s.adjacent_to_leaf(w))
}

pub(super) fn boundary_branch(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    for (x, split) in splitting(s) {
        let nx = s.nbhd(x);
        for c in split {
            for u in s.meet(x, c) {
                let far: VertexSet = inst.neighbors_on(u, Side::Two).filter(|w| !nx.contains(w)).collect();
                if far.len() >= 2 {
                    return branch(10, vec![x, u], [to_set([u]), far]);
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn contained_big(s: &Structure<'_>) -> MatchResult {
    for (ci, comp) in s.comps2().iter().enumerate() {
        if comp.len() < 3 {
            continue;
        }
        let Some(x) = s.connections().find(|&x| s.instance().contains(x, comp)) else {
            continue;
        };
        let g = s.graph();
        let middle = if let Some(center) = g.star_center(comp) {
            center
        } else if g.is_triangle_on(comp) {
            comp[0]
        } else {
            return Err(InvariantViolation::in_rule(
                11,
                format!("2-component {:?} is neither a star nor a triangle", s.comp(ci)),
            ));
        };
        return branch(11, vec![x, middle], [to_set([middle])]);
    }
    Ok(None)
}

pub(super) fn triangle(s: &Structure<'_>) -> MatchResult {
    for (ci, comp) in s.comps2().iter().enumerate() {
        if !s.graph().is_triangle_on(comp) {
            continue;
        }
        let x = s
            .connections()
            .find(|&x| s.instance().splits(x, comp))
            .ok_or_else(|| InvariantViolation::in_rule(12, format!("no connection vertex splits triangle {comp:?}")))?;
        let v = s.boundary_vertex(x, ci).map_err(|e| InvariantViolation::in_rule(12, e.detail))?;
        let rest: VertexSet = comp.iter().copied().filter(|&w| w != v).collect();
        return branch(12, vec![x, v], [to_set([v]), rest]);
    }
    Ok(None)
}

pub(super) fn split1_leaves(s: &Structure<'_>) -> MatchResult {
    for (x, split) in splitting(s) {
        if split.len() != 1 || !nx_adjacent_to_leaf(s, x) {
            continue;
        }
        let v = s.boundary_vertex(x, split[0]).map_err(|e| InvariantViolation::in_rule(13, e.detail))?;
        let u = s
            .graph()
            .neighbors(x)
            .iter()
            .copied()
            .find(|&w| s.graph().has_edge(w, v))
            .ok_or_else(|| InvariantViolation::in_rule(13, format!("no neighbor of {x} touches boundary {v}")))?;
        return branch(13, vec![x, v, u], [to_set([u])]);
    }
    Ok(None)
}

pub(super) fn not_independent(s: &Structure<'_>) -> MatchResult {
    for (x, split) in splitting(s) {
        for c in split {
            let meet = to_set(s.meet(x, c));
            if s.graph().is_independent_set(&meet) {
                continue;
            }
            let u = star_center(s, 14, c)?;
            let v = s.boundary_vertex(x, c).map_err(|e| InvariantViolation::in_rule(14, e.detail))?;
            let comp = s.comp(c);
            let mut second = to_set([v]);
            second.extend(s.graph().neighbors(x).iter().filter(|w| comp.binary_search(w).is_err()));
            return branch(14, vec![x, u, v], [to_set([u]), second]);
        }
    }
    Ok(None)
}

pub(super) fn contains_special(s: &Structure<'_>) -> MatchResult {
    for x in s.connections() {
        let (split, contained) = s.split_and_contained(x);
        let [only] = contained[..] else { continue };
        if s.comp(only).len() != 2 || split.iter().any(|&c| s.meet(x, c).len() != 1) {
            continue;
        }
        let cprime = s.comp(only);
        let u = cprime[0];
        let first: VertexSet = s.nbhd(x).into_iter().filter(|w| !cprime.contains(w)).collect();
        let mut second = s.sb(x).map_err(|e| InvariantViolation::in_rule(15, e.detail))?;
        second.insert(u);
        return branch(15, vec![x, u], [first, second]);
    }
    Ok(None)
}

pub(super) fn contains(s: &Structure<'_>) -> MatchResult {
    for x in s.connections() {
        let (_, contained) = s.split_and_contained(x);
        if contained.is_empty() {
            continue;
        }
        let mut set = s.sb(x).map_err(|e| InvariantViolation::in_rule(16, e.detail))?;
        set.extend(s.sc(x));
        return branch(16, vec![x], [set]);
    }
    Ok(None)
}

pub(super) fn split_one(s: &Structure<'_>) -> MatchResult {
    for (x, split) in splitting(s) {
        if split.len() == 1 {
            let sb = s.sb(x).map_err(|e| InvariantViolation::in_rule(17, e.detail))?;
            return branch(17, vec![x], [sb]);
        }
    }
    Ok(None)
}

pub(super) fn degv_leaf(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    for (x, split) in splitting(s) {
        if !nx_adjacent_to_leaf(s, x) {
            continue;
        }
        for c in split {
            let v = s.boundary_vertex(x, c).map_err(|e| InvariantViolation::in_rule(18, e.detail))?;
            if inst.deg_i(v, Side::One) == 0 {
                continue;
            }
            let u = single_meet(s, 18, x, c)?;
            let mut second = to_set([v]);
            second.extend(s.graph().neighbors(x).iter().filter(|&&w| w != u));
            return branch(18, vec![x, u, v], [to_set([u]), second]);
        }
    }
    Ok(None)
}

pub(super) fn degv(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    for (x, split) in splitting(s) {
        for &c in &split {
            let v = s.boundary_vertex(x, c).map_err(|e| InvariantViolation::in_rule(19, e.detail))?;
            if inst.deg_i(v, Side::One) == 0 {
                continue;
            }
            let u = s.meet(x, c)[0];
            let sb = s.sb(x).map_err(|e| InvariantViolation::in_rule(19, e.detail))?;
            return branch(19, vec![x, u, v], [to_set([u]), sb]);
        }
    }
    Ok(None)
}

pub(super) fn large_intersection(s: &Structure<'_>) -> MatchResult {
    for (x, split) in splitting(s) {
        if split.iter().any(|&c| s.meet(x, c).len() >= 2) {
            let sb = s.sb(x).map_err(|e| InvariantViolation::in_rule(20, e.detail))?;
            return branch(20, vec![x], [sb]);
        }
    }
    Ok(None)
}

pub(super) fn split_three(s: &Structure<'_>) -> MatchResult {
    for (x, split) in splitting(s) {
        if split.len() < 3 {
            continue;
        }
        let nx = s.nbhd(x);
        let sb = s.sb(x).map_err(|e| InvariantViolation::in_rule(21, e.detail))?;
        let mut sets = vec![sb.clone()];
        for &c in &split {
            let comp = s.comp(c);
            let mut si: VertexSet = comp
                .iter()
                .copied()
                .filter(|w| !nx.contains(w) && !sb.contains(w))
                .collect();
            si.extend(nx.iter().filter(|w| comp.binary_search(w).is_err()));
            sets.push(si);
        }
        return branch(21, vec![x], sets);
    }
    Ok(None)
}

pub(super) fn large_far_component(s: &Structure<'_>) -> MatchResult {
    for (x, split) in splitting(s) {
        if nx_adjacent_to_leaf(s, x) {
            continue;
        }
        let Some(&big) = split.iter().find(|&&c| s.comp(c).len() >= 4) else {
            continue;
        };
        let Some(&other) = split.iter().find(|&&c| c != big) else {
            continue;
        };
        if s.comp(other).len() < 3 {
            return Err(InvariantViolation::in_rule(
                22,
                format!("split component {:?} has fewer than 3 vertices", s.comp(other)),
            ));
        }
        let u = single_meet(s, 22, x, other)?;
        let u2 = single_meet(s, 22, x, big)?;
        let v = s.boundary_vertex(x, other).map_err(|e| InvariantViolation::in_rule(22, e.detail))?;
        let v2 = s.boundary_vertex(x, big).map_err(|e| InvariantViolation::in_rule(22, e.detail))?;
        let mut second: VertexSet = s.comp(other).iter().copied().filter(|&w| w != u && w != v).collect();
        second.insert(u2);
        let mut third: VertexSet = s.comp(big).iter().copied().filter(|&w| w != u2 && w != v2).collect();
        third.insert(u);
        return branch(22, vec![x, u, v, u2, v2], [to_set([v, v2]), second, third]);
    }
    Ok(None)
}

pub(super) fn large_star(s: &Structure<'_>) -> MatchResult {
    let inst = s.instance();
    for c in 0..s.comps2().len() {
        if s.comp(c).len() < 4 {
            continue;
        }
        let center = star_center(s, 23, c)?;
        let petals: Vec<VertexId> = s.comp(c).iter().copied().filter(|&v| v != center).collect();
        let mut partners = Vec::with_capacity(petals.len());
        for &vi in &petals {
            let conns: Vec<VertexId> = inst.neighbors_on(vi, Side::One).filter(|&y| s.is_connection(y)).collect();
            let [xi] = conns[..] else {
                return Err(InvariantViolation::in_rule(
                    23,
                    format!("petal {vi} is adjacent to connection vertices {conns:?}, expected exactly one"),
                ));
            };
            let others: Vec<VertexId> = inst.neighbors_on(xi, Side::Two).filter(|&w| w != vi).collect();
            let [ui] = others[..] else {
                return Err(InvariantViolation::in_rule(
                    23,
                    format!("connection vertex {xi} has V2 neighbors {others:?} besides {vi}"),
                ));
            };
            partners.push(ui);
        }
        let mut witness = vec![center];
        witness.extend(&petals);
        let sets = petals.iter().zip(&partners).map(|(&vi, &ui)| {
            let mut si: VertexSet = petals.iter().copied().filter(|&w| w != vi).collect();
            si.insert(ui);
            si
        });
        return branch(23, witness, sets.collect::<Vec<_>>());
    }
    Ok(None)
}
