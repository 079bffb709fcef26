//! Undirected simple graphs over dense vertex ids.
//!
//! Vertices are never renumbered: deleting a vertex tombstones it, so ids
//! handed out by a graph stay meaningful for every graph derived from it.
//! Adjacency lists are kept sorted, which makes every "pick a vertex" step
//! in the solver deterministic.

use std::collections::BTreeSet;

use thiserror::Error;

pub type VertexId = usize;

/// Ordered vertex set used for covers, branch sets and components.
pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not a live vertex of the graph")]
    UnknownVertex(VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    live: usize,
    edges: usize,
}

impl Graph {
    /// Graph with vertices `0..n` and no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            alive: vec![true; n],
            live: n,
            edges: 0,
        }
    }

    /// Builds a graph on `0..n`; duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Size of the id space, including tombstoned ids.
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.live
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    /// Live vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Sorted neighbor list of `v`. Panics if `v` is not live; see
    /// [`Graph::try_neighbors`] for the checked form.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        assert!(self.contains(v), "vertex {v} is not live");
        &self.adj[v]
    }

    pub fn try_neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        if self.contains(v) {
            Ok(&self.adj[v])
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.contains(u) && self.adj[u].binary_search(&v).is_ok()
    }

    /// Adds `u-v`. Returns `Ok(false)` when the edge already existed.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.contains(w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edges += 1;
                Ok(true)
            }
        }
    }

    /// Removes `u-v` if present; returns whether it was present.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("asymmetric adjacency");
                self.adj[v].remove(pos);
                self.edges -= 1;
                true
            }
            Err(_) => false,
        }
    }

    /// Tombstones `v` and drops its incident edges. No-op on dead ids.
    pub fn remove_vertex(&mut self, v: VertexId) {
        if !self.contains(v) {
            return;
        }
        let nbrs = std::mem::take(&mut self.adj[v]);
        for &u in &nbrs {
            let pos = self.adj[u].binary_search(&v).expect("asymmetric adjacency");
            self.adj[u].remove(pos);
        }
        self.edges -= nbrs.len();
        self.alive[v] = false;
        self.live -= 1;
    }

    /// `N(S)`: union of the neighborhoods of `set`, minus `set` itself.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .flat_map(|&v| self.neighbors(v).iter().copied())
            .filter(|u| !set.contains(u))
            .collect()
    }

    /// `G[S]`. Ids outside `set` become tombstones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Graph {
        let mut g = self.clone();
        for v in self.vertices() {
            if !set.contains(&v) {
                g.remove_vertex(v);
            }
        }
        g
    }

    /// `G - S`.
    pub fn delete_vertices<'a, I>(&self, set: I) -> Graph
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let mut g = self.clone();
        for &v in set {
            g.remove_vertex(v);
        }
        g
    }

    /// Connected components, each sorted, listed by minimum id.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        self.components_where(|_| true)
    }

    /// Components of the subgraph induced by the live vertices accepted by
    /// `keep`, listed by minimum id.
    pub fn components_where<F>(&self, keep: F) -> Vec<Vec<VertexId>>
    where
        F: Fn(VertexId) -> bool,
    {
        let mut seen = vec![false; self.capacity()];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in self.vertices() {
            if seen[s] || !keep(s) {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] && keep(u) {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Some 4-path `(a, u, v, b)` of the graph, if one exists.
    ///
    /// Edges are scanned in ascending `(min, max)` order as the middle edge;
    /// the smallest end `a` that admits an end `b` is taken, then the
    /// smallest such `b`.
    pub fn find_4path(&self) -> Option<[VertexId; 4]> {
        self.find_4path_where(|_| true)
    }

    /// [`Graph::find_4path`] restricted to the vertices accepted by `keep`.
    pub fn find_4path_where<F>(&self, keep: F) -> Option<[VertexId; 4]>
    where
        F: Fn(VertexId) -> bool,
    {
        for u in self.vertices() {
            if !keep(u) {
                continue;
            }
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                if !keep(v) {
                    continue;
                }
                if let Some((a, b)) = self.extend_middle_edge(u, v, &keep) {
                    return Some([a, u, v, b]);
                }
            }
        }
        None
    }

    fn extend_middle_edge<F>(&self, u: VertexId, v: VertexId, keep: &F) -> Option<(VertexId, VertexId)>
    where
        F: Fn(VertexId) -> bool,
    {
        for &a in &self.adj[u] {
            if a == v || !keep(a) {
                continue;
            }
            if let Some(&b) = self.adj[v].iter().find(|&&b| b != u && b != a && keep(b)) {
                return Some((a, b));
            }
        }
        None
    }

    /// Whether the component `comp` contains a 4-path. `comp` must be closed
    /// under adjacency, as a connected component is.
    pub fn component_has_4path(&self, comp: &[VertexId]) -> bool {
        comp.iter().any(|&u| {
            self.adj[u]
                .iter()
                .any(|&v| v > u && self.extend_middle_edge(u, v, &|_| true).is_some())
        })
    }

    pub fn has_4path(&self) -> bool {
        self.find_4path().is_some()
    }

    /// Center of the graph if it is a star: at least 3 vertices, one
    /// adjacent to all others, the others pairwise non-adjacent.
    pub fn is_star(&self) -> Option<VertexId> {
        let verts: Vec<_> = self.vertices().collect();
        self.star_center(&verts)
    }

    pub fn is_triangle(&self) -> bool {
        let verts: Vec<_> = self.vertices().collect();
        self.is_triangle_on(&verts)
    }

    /// Star test for `G[set]`; `set` must be sorted.
    pub fn star_center(&self, set: &[VertexId]) -> Option<VertexId> {
        if set.len() < 3 {
            return None;
        }
        let inside = |v: VertexId| set.binary_search(&v).is_ok();
        let inner_deg = |v: VertexId| self.adj[v].iter().filter(|&&u| inside(u)).count();
        let center = set.iter().copied().find(|&v| inner_deg(v) == set.len() - 1)?;
        set.iter()
            .all(|&v| v == center || inner_deg(v) == 1)
            .then_some(center)
    }

    /// Triangle test for `G[set]`.
    pub fn is_triangle_on(&self, set: &[VertexId]) -> bool {
        set.len() == 3
            && self.has_edge(set[0], set[1])
            && self.has_edge(set[1], set[2])
            && self.has_edge(set[0], set[2])
    }

    /// No edge joins two members of `set`.
    pub fn is_independent_set(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&v| self.neighbors(v).iter().all(|u| !set.contains(u)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn set(vs: &[VertexId]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn neighbors_of_path_middle() {
        let g = path(3);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(Graph::new(1).neighbors(0), &[] as &[usize]);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.neighbors(2), &[0, 1, 3]);
    }

    #[test]
    fn unknown_vertex_is_usage_error() {
        let mut g = path(3);
        assert_eq!(g.try_neighbors(7), Err(GraphError::UnknownVertex(7)));
        g.remove_vertex(1);
        assert_eq!(g.try_neighbors(1), Err(GraphError::UnknownVertex(1)));
        assert_eq!(g.add_edge(2, 2), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn set_neighborhood() {
        let g = path(4);
        assert_eq!(g.neighborhood_of_set(&set(&[1, 2])), set(&[0, 3]));
        assert!(g.neighborhood_of_set(&set(&[0, 1, 2, 3])).is_empty());
    }

    #[test]
    fn deleting_from_c4_leaves_p3() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let g = c4.delete_vertices(&[2]);
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3)]);
        assert_eq!(c4.induced_subgraph(&VertexSet::new()).num_vertices(), 0);
    }

    #[test]
    fn components_of_disjoint_union() {
        // triangle 0,1,2 and P4 3-4-5-6
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5, 6]]);
        assert!(Graph::new(0).connected_components().is_empty());
    }

    #[test]
    fn four_path_detection() {
        assert_eq!(path(4).find_4path(), Some([0, 1, 2, 3]));
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.find_4path(), None);
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(star.find_4path(), None);
        // paw: triangle 0,1,2 with pendant 3 on 0
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let p = paw.find_4path().unwrap();
        for w in p.windows(2) {
            assert!(paw.has_edge(w[0], w[1]));
        }
    }

    #[test]
    fn first_end_without_partner_is_skipped() {
        // middle edge 0-1; N(0)\{1} = {2}, N(1)\{0} = {2, 3}. a=2 works with b=3.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3)]).unwrap();
        assert_eq!(g.find_4path(), Some([2, 0, 1, 3]));
    }

    #[test]
    fn star_and_triangle_classification() {
        let k13 = Graph::from_edges(4, &[(2, 0), (2, 1), (2, 3)]).unwrap();
        assert_eq!(k13.is_star(), Some(2));
        assert!(!k13.is_triangle());
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.is_star(), None);
        assert!(tri.is_triangle());
        assert_eq!(path(2).is_star(), None);
    }

    #[test]
    fn independent_sets() {
        let g = path(4);
        assert!(g.is_independent_set(&VertexSet::new()));
        assert!(g.is_independent_set(&set(&[2])));
        assert!(g.is_independent_set(&set(&[0, 2])));
        assert!(!g.is_independent_set(&set(&[1, 2])));
    }

    #[test]
    fn edge_mutations_keep_counts() {
        let mut g = path(4);
        assert_eq!(g.add_edge(0, 1), Ok(false));
        assert_eq!(g.num_edges(), 3);
        assert!(g.remove_edge(1, 2));
        assert!(!g.remove_edge(1, 2));
        assert_eq!(g.num_edges(), 2);
        g.remove_vertex(0);
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![1, 2, 3]);
    }
}
