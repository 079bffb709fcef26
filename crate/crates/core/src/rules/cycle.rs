//! Rule 24: once nothing else applies, every component is a ring of
//! three-vertex stars joined end to end by degree-2 connection vertices,
//! possibly with leaves hanging off the star ends.

use crate::error::InvariantViolation;
use crate::graph::VertexId;
use crate::partition::{to_set, Side, Structure};

use super::{branch, MatchResult};

/// A validated ring `C_1, x_1, C_2, x_2, ..., C_s, x_s` with
/// `C_i = {u_i, v_i, w_i}` (center `v_i`) and `N(x_i) = {w_i, u_{i+1}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCycle {
    pub u: Vec<VertexId>,
    pub v: Vec<VertexId>,
    pub w: Vec<VertexId>,
    pub x: Vec<VertexId>,
    pub leaves: Vec<VertexId>,
}

/// Checks that `comp` (a connected component of the whole graph) has the
/// ring-of-stars shape and returns its labelling.
///
/// The walk starts at the star holding the lowest id, with `u_1` its lower
/// end, so the labelling is deterministic.
pub fn cycle_of_stars(s: &Structure<'_>, comp: &[VertexId]) -> Result<StarCycle, String> {
    let inst = s.instance();
    let g = s.graph();

    let mut stars: Vec<usize> = comp.iter().filter_map(|&v| s.comp_index(v)).collect();
    stars.sort_unstable();
    stars.dedup();
    if stars.is_empty() {
        return Err("component has no V2 vertices".into());
    }
    // (end_a, center, end_b) per star
    let mut shape = Vec::with_capacity(stars.len());
    for &c in &stars {
        let verts = s.comp(c);
        let center = match (verts.len(), g.star_center(verts)) {
            (3, Some(center)) => center,
            _ => return Err(format!("2-component {verts:?} is not a 3-vertex star")),
        };
        if inst.deg_i(center, Side::One) != 0 {
            return Err(format!("star center {center} has a V1 neighbor"));
        }
        let ends: Vec<VertexId> = verts.iter().copied().filter(|&v| v != center).collect();
        shape.push((ends[0], center, ends[1]));
    }

    let mut leaves = Vec::new();
    let mut connections = Vec::new();
    for &y in comp.iter().filter(|&&y| inst.is_v1(y)) {
        if s.is_leaf(y) {
            leaves.push(y);
        } else if s.is_connection(y) && g.degree(y) == 2 {
            connections.push(y);
        } else {
            return Err(format!("V1 vertex {y} is neither a leaf nor a degree-2 connection vertex"));
        }
    }
    let is_end = |v: VertexId| shape.iter().any(|&(a, _, b)| a == v || b == v);
    for &l in &leaves {
        let t = g.neighbors(l)[0];
        if !is_end(t) {
            return Err(format!("leaf {l} hangs off {t}, which is not a star end"));
        }
    }
    let conn_of = |e: VertexId| -> Result<VertexId, String> {
        let cs: Vec<VertexId> = g.neighbors(e).iter().copied().filter(|&y| s.is_connection(y)).collect();
        match cs[..] {
            [y] => Ok(y),
            _ => Err(format!("star end {e} touches connection vertices {cs:?}, expected one")),
        }
    };
    for &(a, _, b) in &shape {
        conn_of(a)?;
        conn_of(b)?;
    }

    let star_of = |e: VertexId| shape.iter().position(|&(a, _, b)| a == e || b == e);
    let mut ring = StarCycle { u: vec![], v: vec![], w: vec![], x: vec![], leaves };
    let mut visited = vec![false; shape.len()];
    let start = shape[0].0;
    let mut u = start;
    loop {
        let i = star_of(u).ok_or_else(|| format!("{u} is not a star end"))?;
        if visited[i] {
            return Err(format!("star {:?} entered twice", shape[i]));
        }
        visited[i] = true;
        let (a, center, b) = shape[i];
        let w = if a == u { b } else { a };
        let x = conn_of(w)?;
        let next = g
            .neighbors(x)
            .iter()
            .copied()
            .find(|&t| t != w)
            .ok_or_else(|| format!("connection vertex {x} has a single neighbor"))?;
        ring.u.push(u);
        ring.v.push(center);
        ring.w.push(w);
        ring.x.push(x);
        if next == start {
            break;
        }
        u = next;
    }
    if visited.iter().any(|&seen| !seen) {
        return Err("stars are not joined into a single ring".into());
    }
    if ring.x.len() != connections.len() {
        return Err(format!(
            "ring uses {} connection vertices but the component has {}",
            ring.x.len(),
            connections.len()
        ));
    }
    Ok(ring)
}

pub(super) fn cycle_rule(s: &Structure<'_>) -> MatchResult {
    let Some(comp) = s.components().first() else {
        return Ok(None);
    };
    let ring = cycle_of_stars(s, comp).map_err(|e| InvariantViolation::in_rule(24, e))?;
    let mut witness = ring.u.clone();
    witness.extend(&ring.x);
    branch(24, witness, [to_set(ring.u)])
}
