//! Brute-force ground truth.
//!
//! Nothing here shares code with the solver's 4-path search: paths are
//! found by walking every sequence of four adjacent vertices, and covers
//! by trying candidate subsets in order of size.

use thiserror::Error;

use crate::combinations::next_combination;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::partition::Instance;

pub const MAX_ORACLE_VERTICES: usize = 20;
pub const MAX_LABELED_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{have} candidate vertices exceed the oracle limit of {limit}")]
    TooLarge { have: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnswer {
    pub min_size: usize,
    pub witness: VertexSet,
}

/// Whether some four distinct vertices `a, b, c, d` outside `removed`
/// form a path `a-b-c-d`.
pub fn has_4path_brute(g: &Graph, removed: &VertexSet) -> bool {
    let ok = |v: VertexId| !removed.contains(&v);
    for a in g.vertices().filter(|&v| ok(v)) {
        for &b in g.neighbors(a).iter().filter(|&&v| ok(v)) {
            for &c in g.neighbors(b).iter().filter(|&&v| ok(v) && v != a) {
                if g.neighbors(c).iter().any(|&d| ok(d) && d != a && d != b) {
                    return true;
                }
            }
        }
    }
    false
}

/// First subset of `cands` (by size, then lexicographically) whose removal
/// leaves no 4-path.
fn first_cover(g: &Graph, cands: &[VertexId]) -> Option<OracleAnswer> {
    let n = cands.len();
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let set: VertexSet = idx.iter().map(|&i| cands[i]).collect();
            if !has_4path_brute(g, &set) {
                return Some(OracleAnswer { min_size: size, witness: set });
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    None
}

/// Minimum 4-path vertex cover of `g` by exhaustive search.
pub fn brute_min_pvc4(g: &Graph) -> Result<OracleAnswer, OracleError> {
    let cands: Vec<VertexId> = g.vertices().collect();
    if cands.len() > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge { have: cands.len(), limit: MAX_ORACLE_VERTICES });
    }
    Ok(first_cover(g, &cands).expect("the full vertex set is always a cover"))
}

/// Minimum `V1`-disjoint cover, ignoring the budget of `inst`.
///
/// `None` only when even `V2` fails, which cannot happen for a validated
/// instance.
pub fn brute_min_disjoint(inst: &Instance) -> Result<Option<OracleAnswer>, OracleError> {
    let cands: Vec<VertexId> = inst.v2().collect();
    if cands.len() > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge { have: cands.len(), limit: MAX_ORACLE_VERTICES });
    }
    Ok(first_cover(inst.graph(), &cands))
}

/// Every labeled simple graph on `0..n`. Graph number `m` has edge `j`
/// (in lexicographic pair order) iff bit `j` of `m` is set.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    if n > MAX_LABELED_N {
        return Err(OracleError::TooLarge { have: n, limit: MAX_LABELED_N });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut g = Graph::new(n);
        for (j, &(u, v)) in pairs.iter().enumerate() {
            if mask >> j & 1 == 1 {
                g.add_edge(u, v).expect("pair is a valid edge");
            }
        }
        g
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn known_minimums() {
        assert_eq!(brute_min_pvc4(&path(7)).unwrap().min_size, 1);
        let mut k4 = Graph::new(4);
        for u in 0..4 {
            for v in u + 1..4 {
                k4.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(brute_min_pvc4(&k4).unwrap().min_size, 1);
        let star = Graph::from_edges(10, &(1..10).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        assert_eq!(brute_min_pvc4(&star).unwrap().min_size, 0);
    }

    #[test]
    fn disjoint_minimum_on_guarded_path() {
        let inst = Instance::new(path(4), [0, 3], 5).unwrap();
        let ans = brute_min_disjoint(&inst).unwrap().unwrap();
        assert_eq!(ans.min_size, 1);
        assert_eq!(ans.witness, [1].into_iter().collect());
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert!(enumerate_labeled_graphs(7).is_err());
    }

    #[test]
    fn size_guard() {
        assert!(matches!(brute_min_pvc4(&Graph::new(21)), Err(OracleError::TooLarge { .. })));
    }
}
