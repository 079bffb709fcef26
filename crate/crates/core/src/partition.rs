//! State of the disjoint problem: a graph, a forbidden vertex set `V1` that
//! already covers every 4-path, and a budget for the cover drawn from
//! `V2 = V \ V1`.
//!
//! Besides the plain instance this module computes the vocabulary the rules
//! are phrased in: connection vertices and leaves of `V1`, components of
//! `G[V1]` and `G[V2]`, which 2-components a connection vertex contains or
//! splits, and boundary vertices.

use std::cell::OnceCell;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::error::InvariantViolation;
use crate::graph::{Graph, VertexId, VertexSet};

/// Which side of the `V1`/`V2` bipartition a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    One,
    Two,
}

/// Role of a vertex of `V1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum V1Kind {
    /// No `V1` neighbor and at least two `V2` neighbors.
    Connection,
    /// No `V1` neighbor and exactly one `V2` neighbor.
    Leaf,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("vertex {0} is not a live vertex of the graph")]
    UnknownVertex(VertexId),
    #[error("G[V1] contains the 4-path {0:?}")]
    V1HasFourPath([VertexId; 4]),
    #[error("V1 does not cover every 4-path: G[V2] contains {0:?}")]
    NotACover([VertexId; 4]),
    #[error("vertex {0} is not in V1")]
    NotInV1(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    in_v1: Vec<bool>,
    k: i64,
}

impl Instance {
    /// Validates and builds an instance.
    ///
    /// Rejects `V1` sets that induce a 4-path (such instances are trivially
    /// infeasible) and sets that leave a 4-path in `G[V2]`.
    pub fn new<I>(graph: Graph, v1: I, k: i64) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut in_v1 = vec![false; graph.capacity()];
        for v in v1 {
            if !graph.contains(v) {
                return Err(InstanceError::UnknownVertex(v));
            }
            in_v1[v] = true;
        }
        let inst = Instance { graph, in_v1, k };
        if let Some(p) = inst.graph.find_4path_where(|v| inst.in_v1[v]) {
            return Err(InstanceError::V1HasFourPath(p));
        }
        if let Some(p) = inst.graph.find_4path_where(|v| !inst.in_v1[v]) {
            return Err(InstanceError::NotACover(p));
        }
        Ok(inst)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    #[inline]
    pub fn is_v1(&self, v: VertexId) -> bool {
        self.in_v1[v]
    }

    #[inline]
    pub fn side_of(&self, v: VertexId) -> Side {
        if self.in_v1[v] {
            Side::One
        } else {
            Side::Two
        }
    }

    pub fn v1(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.graph.vertices().filter(|&v| self.in_v1[v])
    }

    pub fn v2(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.graph.vertices().filter(|&v| !self.in_v1[v])
    }

    pub fn v2_count(&self) -> usize {
        self.v2().count()
    }

    /// Neighbors of `v` on `side`, ascending.
    pub fn neighbors_on(&self, v: VertexId, side: Side) -> impl Iterator<Item = VertexId> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.side_of(u) == side)
    }

    /// `N_i(v)`.
    pub fn n_i(&self, v: VertexId, side: Side) -> VertexSet {
        self.neighbors_on(v, side).collect()
    }

    /// `deg_i(v)`.
    pub fn deg_i(&self, v: VertexId, side: Side) -> usize {
        self.neighbors_on(v, side).count()
    }

    /// `N_i(S)`.
    pub fn n_i_of_set(&self, set: &VertexSet, side: Side) -> VertexSet {
        self.graph
            .neighborhood_of_set(set)
            .into_iter()
            .filter(|&u| self.side_of(u) == side)
            .collect()
    }

    pub fn classify_v1_vertex(&self, x: VertexId) -> Result<V1Kind, InstanceError> {
        if !self.graph.contains(x) {
            return Err(InstanceError::UnknownVertex(x));
        }
        if !self.in_v1[x] {
            return Err(InstanceError::NotInV1(x));
        }
        Ok(self.kind_of(x))
    }

    fn kind_of(&self, x: VertexId) -> V1Kind {
        if self.deg_i(x, Side::One) > 0 {
            return V1Kind::Other;
        }
        match self.graph.degree(x) {
            0 => V1Kind::Other,
            1 => V1Kind::Leaf,
            _ => V1Kind::Connection,
        }
    }

    /// Components of `G[V1]` or `G[V2]`, listed by minimum id.
    pub fn components_i(&self, side: Side) -> Vec<Vec<VertexId>> {
        self.graph.components_where(|v| self.side_of(v) == side)
    }

    /// `C ⊆ N(x)`.
    pub fn contains(&self, x: VertexId, comp: &[VertexId]) -> bool {
        comp.iter().all(|&v| self.graph.has_edge(x, v))
    }

    /// `C ∩ N(x) ≠ ∅` and `C ⊄ N(x)`.
    pub fn splits(&self, x: VertexId, comp: &[VertexId]) -> bool {
        let hit = comp.iter().filter(|&&v| self.graph.has_edge(x, v)).count();
        hit > 0 && hit < comp.len()
    }

    pub fn boundary_vertex(&self, x: VertexId, comp: &[VertexId]) -> Result<VertexId, InvariantViolation> {
        boundary_of(&self.graph, x, comp)
    }

    /// Boundary vertices of every 2-component `x` splits.
    pub fn sb(&self, x: VertexId) -> Result<VertexSet, InvariantViolation> {
        Structure::new(self).sb(x)
    }

    /// Lowest-id vertex of every size-2 component contained in `x`.
    pub fn sc(&self, x: VertexId) -> VertexSet {
        Structure::new(self).sc(x)
    }

    pub fn connection_profile(&self, x: VertexId) -> ConnectionProfile {
        Structure::new(self).profile(x)
    }

    /// The child instance after putting `set` into the cover.
    pub fn take(&self, set: &VertexSet) -> Instance {
        debug_assert!(set.iter().all(|&v| !self.in_v1[v]));
        Instance {
            graph: self.graph.delete_vertices(set),
            in_v1: self.in_v1.clone(),
            k: self.k - set.len() as i64,
        }
    }

    pub(crate) fn without_vertices(&self, set: &[VertexId]) -> Instance {
        Instance {
            graph: self.graph.delete_vertices(set),
            in_v1: self.in_v1.clone(),
            k: self.k,
        }
    }

    pub(crate) fn with_v1_vertex(&self, v: VertexId) -> Instance {
        let mut next = self.clone();
        next.in_v1[v] = true;
        next
    }

    pub(crate) fn without_edge(&self, u: VertexId, v: VertexId) -> Instance {
        let mut next = self.clone();
        next.graph.remove_edge(u, v);
        next
    }

    pub fn with_k(&self, k: i64) -> Instance {
        Instance { k, ..self.clone() }
    }

    /// `G[C]` restricted to a vertex subset, keeping the `V1` labels.
    pub fn restrict(&self, set: &VertexSet) -> Instance {
        Instance {
            graph: self.graph.induced_subgraph(set),
            in_v1: self.in_v1.clone(),
            k: self.k,
        }
    }
}

fn boundary_of(g: &Graph, x: VertexId, comp: &[VertexId]) -> Result<VertexId, InvariantViolation> {
    let in_nx = |v: VertexId| g.has_edge(x, v);
    let mut found = None;
    for &v in comp {
        if in_nx(v) {
            continue;
        }
        // comp is a 2-component, so neighbors of v inside comp are its V2 neighbors
        let touches = g
            .neighbors(v)
            .iter()
            .any(|&w| in_nx(w) && comp.binary_search(&w).is_ok());
        if touches {
            if let Some(prev) = found {
                return Err(InvariantViolation::new(
                    None,
                    format!("component {comp:?} split by {x} has two boundary candidates {prev} and {v}"),
                ));
            }
            found = Some(v);
        }
    }
    found.ok_or_else(|| {
        InvariantViolation::new(None, format!("component {comp:?} split by {x} has no boundary vertex"))
    })
}

/// Counts and lists describing how a connection vertex meets the
/// 2-components around it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConnectionProfile {
    /// Contained components of size 1.
    pub s1: usize,
    /// Contained components of size 2.
    pub s2: usize,
    /// Split components meeting `N(x)` in exactly one vertex.
    pub t1: usize,
    /// Split components meeting `N(x)` in two or more vertices.
    pub t2: usize,
    pub split: Vec<Vec<VertexId>>,
    pub contained: Vec<Vec<VertexId>>,
}

/// Per-node cache of the partition vocabulary: 2-components and the kind of
/// every `V1` vertex. Built once per search node and shared by all matchers.
#[derive(Debug)]
pub struct Structure<'a> {
    inst: &'a Instance,
    comps2: Vec<Vec<VertexId>>,
    comp_of: Vec<usize>,
    kinds: Vec<Option<V1Kind>>,
    four_path: OnceCell<Option<[VertexId; 4]>>,
    components: OnceCell<Vec<Vec<VertexId>>>,
}

const NO_COMP: usize = usize::MAX;

impl<'a> Structure<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        let g = inst.graph();
        let comps2 = inst.components_i(Side::Two);
        let mut comp_of = vec![NO_COMP; g.capacity()];
        for (i, c) in comps2.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut kinds = vec![None; g.capacity()];
        for x in inst.v1() {
            kinds[x] = Some(inst.kind_of(x));
        }
        Structure { inst, comps2, comp_of, kinds, four_path: OnceCell::new(), components: OnceCell::new() }
    }

    /// Some 4-path of the whole graph, computed on first use.
    pub fn four_path(&self) -> Option<[VertexId; 4]> {
        *self.four_path.get_or_init(|| self.graph().find_4path())
    }

    /// Connected components of the whole graph by minimum id, computed on
    /// first use.
    pub fn components(&self) -> &[Vec<VertexId>] {
        self.components.get_or_init(|| self.graph().connected_components())
    }

    pub fn instance(&self) -> &'a Instance {
        self.inst
    }

    pub fn graph(&self) -> &'a Graph {
        self.inst.graph()
    }

    /// 2-components in ascending order of minimum id.
    pub fn comps2(&self) -> &[Vec<VertexId>] {
        &self.comps2
    }

    pub fn comp(&self, idx: usize) -> &[VertexId] {
        &self.comps2[idx]
    }

    /// Index of the 2-component holding `v`; `None` for `V1` vertices.
    pub fn comp_index(&self, v: VertexId) -> Option<usize> {
        let c = self.comp_of[v];
        (c != NO_COMP).then_some(c)
    }

    pub fn is_connection(&self, x: VertexId) -> bool {
        self.kinds[x] == Some(V1Kind::Connection)
    }

    pub fn is_leaf(&self, x: VertexId) -> bool {
        self.kinds[x] == Some(V1Kind::Leaf)
    }

    pub fn connections(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.inst.v1().filter(move |&x| self.is_connection(x))
    }

    /// Some `V1` neighbor of `w` is a leaf.
    pub fn adjacent_to_leaf(&self, w: VertexId) -> bool {
        self.graph().neighbors(w).iter().any(|&y| self.is_leaf(y))
    }

    /// Indices of the 2-components `x` splits and contains, each ascending.
    pub fn split_and_contained(&self, x: VertexId) -> (Vec<usize>, Vec<usize>) {
        let mut hits: Vec<(usize, usize)> = Vec::new();
        for &w in self.graph().neighbors(x) {
            if let Some(c) = self.comp_index(w) {
                match hits.iter_mut().find(|(ci, _)| *ci == c) {
                    Some(entry) => entry.1 += 1,
                    None => hits.push((c, 1)),
                }
            }
        }
        hits.sort_unstable();
        let mut split = Vec::new();
        let mut contained = Vec::new();
        for (c, n) in hits {
            if n == self.comps2[c].len() {
                contained.push(c);
            } else {
                split.push(c);
            }
        }
        (split, contained)
    }

    pub fn split_components(&self, x: VertexId) -> Vec<usize> {
        self.split_and_contained(x).0
    }

    /// `C ∩ N(x)` for the component with index `c`, ascending.
    pub fn meet(&self, x: VertexId, c: usize) -> Vec<VertexId> {
        self.comps2[c]
            .iter()
            .copied()
            .filter(|&v| self.graph().has_edge(x, v))
            .collect()
    }

    pub fn boundary_vertex(&self, x: VertexId, c: usize) -> Result<VertexId, InvariantViolation> {
        boundary_of(self.graph(), x, &self.comps2[c])
    }

    pub fn sb(&self, x: VertexId) -> Result<VertexSet, InvariantViolation> {
        self.split_components(x)
            .into_iter()
            .map(|c| self.boundary_vertex(x, c))
            .collect()
    }

    pub fn sc(&self, x: VertexId) -> VertexSet {
        self.split_and_contained(x)
            .1
            .into_iter()
            .filter(|&c| self.comps2[c].len() == 2)
            .map(|c| self.comps2[c][0])
            .collect()
    }

    pub fn profile(&self, x: VertexId) -> ConnectionProfile {
        let (split, contained) = self.split_and_contained(x);
        let mut p = ConnectionProfile::default();
        for &c in &contained {
            match self.comps2[c].len() {
                1 => p.s1 += 1,
                2 => p.s2 += 1,
                _ => {}
            }
            p.contained.push(self.comps2[c].clone());
        }
        for &c in &split {
            if self.meet(x, c).len() == 1 {
                p.t1 += 1;
            } else {
                p.t2 += 1;
            }
            p.split.push(self.comps2[c].clone());
        }
        p
    }

    /// `N(x)` as an ordered set.
    pub fn nbhd(&self, x: VertexId) -> VertexSet {
        self.graph().neighbors(x).iter().copied().collect()
    }
}

pub(crate) fn to_set<I: IntoIterator<Item = VertexId>>(it: I) -> VertexSet {
    it.into_iter().collect::<BTreeSet<_>>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, edges: &[(usize, usize)], v1: &[usize], k: i64) -> Instance {
        Instance::new(Graph::from_edges(n, edges).unwrap(), v1.iter().copied(), k).unwrap()
    }

    #[test]
    fn side_degrees() {
        // x=0 in V1 adjacent to u=1, w=2
        let i = inst(3, &[(0, 1), (0, 2)], &[0], 1);
        assert_eq!(i.deg_i(0, Side::Two), 2);
        assert_eq!(i.deg_i(0, Side::One), 0);
        assert_eq!(i.n_i(0, Side::Two), to_set([1, 2]));
        let leaf = inst(2, &[(0, 1)], &[0], 1);
        assert_eq!(leaf.deg_i(0, Side::Two), 1);
    }

    #[test]
    fn classification() {
        let i = inst(5, &[(0, 1), (0, 2), (3, 1), (4, 0)], &[0, 3, 4], 1);
        assert_eq!(i.classify_v1_vertex(3), Ok(V1Kind::Leaf));
        // 0 has a V1 neighbor (4)
        assert_eq!(i.classify_v1_vertex(0), Ok(V1Kind::Other));
        assert_eq!(i.classify_v1_vertex(1), Err(InstanceError::NotInV1(1)));
        let j = inst(3, &[(0, 1), (0, 2)], &[0], 1);
        assert_eq!(j.classify_v1_vertex(0), Ok(V1Kind::Connection));
    }

    #[test]
    fn constructor_rejects_bad_v1() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(
            Instance::new(p4.clone(), [0, 1, 2, 3], 0),
            Err(InstanceError::V1HasFourPath(_))
        ));
        assert!(matches!(Instance::new(p4.clone(), [], 0), Err(InstanceError::NotACover(_))));
        assert!(matches!(Instance::new(p4, [9], 0), Err(InstanceError::UnknownVertex(9))));
    }

    #[test]
    fn v2_components() {
        // V2 = {1,2,3}, edge 1-2 only; 0 in V1
        let i = inst(4, &[(1, 2), (0, 3)], &[0], 0);
        assert_eq!(i.components_i(Side::Two), vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn contains_and_splits() {
        // x=0; C={1,2} fully adjacent; D={3,4,5} star center 4, x adjacent to 3
        let i = inst(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5)], &[0], 1);
        assert!(i.contains(0, &[1, 2]));
        assert!(!i.splits(0, &[1, 2]));
        assert!(i.splits(0, &[3, 4, 5]));
        assert!(!i.contains(0, &[3, 4, 5]));
        assert_eq!(i.boundary_vertex(0, &[3, 4, 5]), Ok(4));
    }

    #[test]
    fn triangle_boundary_is_the_non_neighbor() {
        // triangle {1,2,3}; x=0 adjacent to 1 and 3
        let i = inst(4, &[(1, 2), (2, 3), (1, 3), (0, 1), (0, 3)], &[0], 1);
        assert_eq!(i.boundary_vertex(0, &[1, 2, 3]), Ok(2));
    }

    #[test]
    fn boundary_must_be_unique() {
        // path-free star centered at 2 with leaves 1,3,4; x adjacent to 2 only:
        // candidates 1,3,4 all touch N(x) -> not unique
        let i = inst(5, &[(2, 1), (2, 3), (2, 4), (0, 2)], &[0], 1);
        assert!(i.boundary_vertex(0, &[1, 2, 3, 4]).is_err());
    }

    #[test]
    fn split_boundary_sets() {
        // x=0 splits two stars {1,2,3} (center 2) and {4,5,6} (center 5) via 1 and 4
        let i = inst(7, &[(1, 2), (2, 3), (4, 5), (5, 6), (0, 1), (0, 4)], &[0], 2);
        assert_eq!(i.sb(0).unwrap(), to_set([2, 5]));
        assert!(i.sc(0).is_empty());
    }

    #[test]
    fn profile_counts() {
        // x=0: contains {1} (size 1); splits {2,3,4} star (center 3) via 2;
        // splits {5,6,7} triangle via 5,6
        let i = inst(
            8,
            &[(0, 1), (0, 2), (2, 3), (3, 4), (5, 6), (6, 7), (5, 7), (0, 5), (0, 6)],
            &[0],
            2,
        );
        let p = i.connection_profile(0);
        assert_eq!((p.s1, p.s2, p.t1, p.t2), (1, 0, 1, 1));
        assert_eq!(p.contained, vec![vec![1]]);
        assert_eq!(p.split, vec![vec![2, 3, 4], vec![5, 6, 7]]);
        let two_pendants = inst(3, &[(0, 1), (0, 2)], &[0], 0).connection_profile(0);
        assert_eq!((two_pendants.s1, two_pendants.s2, two_pendants.t1, two_pendants.t2), (2, 0, 0, 0));
    }

    #[test]
    fn take_reduces_budget() {
        let i = inst(4, &[(0, 1), (1, 2), (2, 3)], &[0, 3], 2);
        let c = i.take(&to_set([1]));
        assert_eq!(c.k(), 1);
        assert!(!c.graph().contains(1));
        assert!(c.is_v1(0));
    }
}
