//! Text format for graphs and disjoint instances.
//!
//! ```text
//! c optional comment lines
//! p pvc4 <n> <m>
//! e <u> <v>        one line per edge, ids in 1..=n
//! v1 <u>           optional, marks u as forbidden
//! ```
//!
//! Ids are 1-based in files and 0-based in memory.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::partition::{Instance, InstanceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing \"p pvc4 <n> <m>\" header")]
    MissingHeader,
    #[error("malformed header, expected \"p pvc4 <n> <m>\"")]
    MalformedHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("{0} line before the header")]
    BeforeHeader(&'static str),
    #[error("malformed {0} line")]
    MalformedLine(&'static str),
    #[error("unknown line type {0:?}")]
    UnknownLine(String),
    #[error("vertex id {id} out of range 1..={n}")]
    IdOutOfRange { id: u64, n: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed in V1 twice")]
    DuplicateV1(usize),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Parsed contents of a graph file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphFile {
    pub comments: Vec<String>,
    pub graph: Graph,
    /// Forbidden vertices; empty for a plain graph.
    pub v1: VertexSet,
}

impl GraphFile {
    pub fn from_graph(graph: Graph) -> Self {
        GraphFile { comments: Vec::new(), graph, v1: VertexSet::new() }
    }

    /// Relabels live vertices to `0..n` in ascending order, so that graphs
    /// with deleted vertices can be written.
    pub fn from_instance(inst: &Instance) -> Self {
        let (graph, map) = compact(inst.graph());
        let v1 = inst.v1().map(|v| map[v].expect("live vertex")).collect();
        GraphFile { comments: Vec::new(), graph, v1 }
    }

    pub fn into_instance(self, k: i64) -> Result<Instance, InstanceError> {
        Instance::new(self.graph, self.v1, k)
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.comments.push(comment.into());
        self
    }
}

fn compact(g: &Graph) -> (Graph, Vec<Option<VertexId>>) {
    let mut map = vec![None; g.capacity()];
    for (i, v) in g.vertices().enumerate() {
        map[v] = Some(i);
    }
    let edges: Vec<_> = g
        .edges()
        .map(|(u, v)| (map[u].expect("live"), map[v].expect("live")))
        .collect();
    (Graph::from_edges(g.num_vertices(), &edges).expect("relabelled edges are valid"), map)
}

pub fn parse(text: &str) -> Result<GraphFile, ParseError> {
    let mut file = GraphFile::default();
    let mut header: Option<(usize, usize, usize)> = None;
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |kind| ParseError { line, kind };
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let tag = parts.next().expect("non-empty line");
        let fields: Vec<&str> = parts.collect();
        match tag {
            "c" => {
                let rest = &raw.trim_start()[1..];
                let body = rest.strip_prefix(' ').unwrap_or(rest);
                file.comments.push(body.to_string());
            }
            "p" => {
                if header.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let [kind, n, m] = fields[..] else {
                    return Err(err(ParseErrorKind::MalformedHeader));
                };
                let (Ok(n), Ok(m)) = (n.parse::<usize>(), m.parse::<usize>()) else {
                    return Err(err(ParseErrorKind::MalformedHeader));
                };
                if kind != "pvc4" {
                    return Err(err(ParseErrorKind::MalformedHeader));
                }
                file.graph = Graph::new(n);
                header = Some((line, n, m));
            }
            "e" => {
                let (_, n, _) = header.ok_or_else(|| err(ParseErrorKind::BeforeHeader("edge")))?;
                let [u, v] = fields[..] else {
                    return Err(err(ParseErrorKind::MalformedLine("edge")));
                };
                let u = vertex_id(u, n).map_err(err)?;
                let v = vertex_id(v, n).map_err(err)?;
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop(u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(ParseErrorKind::DuplicateEdge { u: u + 1, v: v + 1 }));
                }
                file.graph.add_edge(u, v).expect("checked ids");
            }
            "v1" => {
                let (_, n, _) = header.ok_or_else(|| err(ParseErrorKind::BeforeHeader("v1")))?;
                let [u] = fields[..] else {
                    return Err(err(ParseErrorKind::MalformedLine("v1")));
                };
                let u = vertex_id(u, n).map_err(err)?;
                if !file.v1.insert(u) {
                    return Err(err(ParseErrorKind::DuplicateV1(u + 1)));
                }
            }
            other => return Err(err(ParseErrorKind::UnknownLine(other.to_string()))),
        }
    }
    let (line, _, m) = header.ok_or(ParseError { line: 1, kind: ParseErrorKind::MissingHeader })?;
    if seen.len() != m {
        return Err(ParseError { line, kind: ParseErrorKind::EdgeCountMismatch { declared: m, found: seen.len() } });
    }
    Ok(file)
}

fn vertex_id(field: &str, n: usize) -> Result<VertexId, ParseErrorKind> {
    let id: u64 = field.parse().map_err(|_| ParseErrorKind::MalformedLine("vertex id"))?;
    if id == 0 || id > n as u64 {
        return Err(ParseErrorKind::IdOutOfRange { id, n });
    }
    Ok(id as usize - 1)
}

/// Canonical text: comments, header, edges sorted, then `V1` sorted.
///
/// Panics if the graph has deleted vertices; use
/// [`GraphFile::from_instance`] to relabel first.
pub fn render(file: &GraphFile) -> String {
    let g = &file.graph;
    assert_eq!(g.capacity(), g.num_vertices(), "graph has deleted vertices");
    let mut out = String::new();
    for c in &file.comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            writeln!(out, "c {c}").unwrap();
        }
    }
    writeln!(out, "p pvc4 {} {}", g.num_vertices(), g.num_edges()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    for v in &file.v1 {
        writeln!(out, "v1 {}", v + 1).unwrap();
    }
    out
}

/// Parses a comma-separated list of 1-based ids such as `"1,4,7"`.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet, ParseErrorKind> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| vertex_id(s, n))
        .collect()
}

/// Formats a set as 1-based ids separated by spaces.
pub fn format_vertex_list(set: &VertexSet) -> String {
    let ids: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    ids.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn single_edge() {
        let f = parse("p pvc4 2 1\ne 1 2\n").unwrap();
        assert_eq!(f.graph.num_vertices(), 2);
        assert!(f.graph.has_edge(0, 1));
        assert!(f.v1.is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(kind("p pvc4 3 2\ne 1 2\ne 2 1\n"), (3, ParseErrorKind::DuplicateEdge { u: 2, v: 1 }));
        assert_eq!(kind("c hi\np pvc4 3 1\ne 2 2\n"), (3, ParseErrorKind::SelfLoop(2)));
        assert_eq!(kind("p pvc4 3 1\ne 1 4\n"), (2, ParseErrorKind::IdOutOfRange { id: 4, n: 3 }));
        assert_eq!(kind("p pvc4 3 1\ne 1 0\n"), (2, ParseErrorKind::IdOutOfRange { id: 0, n: 3 }));
        assert_eq!(kind("p pvc 3 1\n"), (1, ParseErrorKind::MalformedHeader));
        assert_eq!(kind("p pvc4 3\n"), (1, ParseErrorKind::MalformedHeader));
        assert_eq!(kind("e 1 2\n"), (1, ParseErrorKind::BeforeHeader("edge")));
        assert_eq!(kind("c only\n"), (1, ParseErrorKind::MissingHeader));
        assert_eq!(kind("p pvc4 3 2\ne 1 2\n"), (1, ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 }));
        assert_eq!(kind("p pvc4 3 0\nv1 2\nv1 2\n"), (3, ParseErrorKind::DuplicateV1(2)));
        assert_eq!(kind("p pvc4 3 0\nx 1\n"), (2, ParseErrorKind::UnknownLine("x".into())));
    }

    #[test]
    fn instance_round_trip() {
        let text = "c made by hand\np pvc4 4 3\ne 1 2\ne 2 3\ne 3 4\nv1 1\nv1 4\n";
        let f = parse(text).unwrap();
        assert_eq!(render(&f), text);
        let inst = f.into_instance(1).unwrap();
        assert!(inst.is_v1(0) && inst.is_v1(3));
    }

    #[test]
    fn render_sorts_edges() {
        let f = parse("p pvc4 3 2\ne 3 2\ne 2 1\n").unwrap();
        assert_eq!(render(&f), "p pvc4 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn compacts_deleted_vertices() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let inst = Instance::new(g, [0, 4], 2).unwrap();
        let smaller = inst.take(&[2].into_iter().collect());
        let f = GraphFile::from_instance(&smaller);
        assert_eq!(render(&f), "p pvc4 4 2\ne 1 2\ne 3 4\nv1 1\nv1 4\n");
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("1,4, 7", 7).unwrap(), [0, 3, 6].into_iter().collect());
        assert_eq!(parse_vertex_list("", 3).unwrap(), VertexSet::new());
        assert!(parse_vertex_list("8", 7).is_err());
        assert_eq!(format_vertex_list(&[0, 3].into_iter().collect()), "1 4");
    }
}
