//! Immutable simple undirected graphs with bitset adjacency rows.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::bitset::Bitset;

/// Errors raised while constructing or parsing a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge list is missing the \"n m\" header line")]
    MissingHeader,
    #[error("malformed header line {line:?} (expected \"n m\")")]
    InvalidHeader { line: String },
    #[error("malformed edge on line {line_no}: {text:?}")]
    InvalidEdgeLine { line_no: usize, text: String },
    #[error("header promises {expected} edges but {found} edge lines follow")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Self {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// A finite simple undirected graph.
///
/// Vertices are `0..n`. The adjacency relation is kept symmetric and
/// irreflexive by construction, one bit row per vertex, with the edge
/// count cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<Bitset>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            rows: (0..n).map(|_| Bitset::new(n)).collect(),
            edge_count: 0,
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Loops, out-of-range endpoints, and duplicate pairs (in either
    /// order) are rejected rather than silently dropped.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut graph = Self::empty(n);
        let mut seen = HashSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
            graph.add_edge(u, v);
        }
        Ok(graph)
    }

    /// Adds an edge that is known to be valid and absent.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.vertex_count() && v < self.vertex_count());
        debug_assert!(!self.rows[u].contains(v));
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.edge_count += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    /// Open neighborhood of `v` as a bit row. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    /// Checked variant of [`Graph::neighbors`].
    pub fn neighborhood(&self, v: usize) -> Result<&Bitset, GraphError> {
        self.rows.get(v).ok_or(GraphError::VertexOutOfRange {
            v,
            n: self.vertex_count(),
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    /// True iff some vertex has no neighbors. Vacuously false for `n = 0`.
    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.iter().any(|row| row.is_empty())
    }

    /// The graph obtained by deleting `v` and its incident edges.
    ///
    /// Remaining vertices are relabeled to `0..n-1`, preserving order.
    pub fn remove_vertex(&self, v: usize) -> Result<Self, GraphError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let mut out = Self::empty(n - 1);
        for e in self.edges() {
            if e.u != v && e.v != v {
                out.add_edge(relabel(e.u), relabel(e.v));
            }
        }
        Ok(out)
    }

    /// Parses the edge-list text format: a header line `n m` followed by
    /// `m` lines `u v` with 0-based vertex ids.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        Self::parse_edge_list_base(text, 0)
    }

    /// Same format with 1-based vertex ids (labels 1..=n).
    pub fn parse_edge_list_one_based(text: &str) -> Result<Self, GraphError> {
        Self::parse_edge_list_base(text, 1)
    }

    fn parse_edge_list_base(text: &str, base: usize) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(GraphError::MissingHeader)?;
        let mut parts = header.split_whitespace();
        let (n, m) = match (parts.next(), parts.next(), parts.next()) {
            (Some(n), Some(m), None) => match (n.parse::<usize>(), m.parse::<usize>()) {
                (Ok(n), Ok(m)) => (n, m),
                _ => {
                    return Err(GraphError::InvalidHeader {
                        line: header.to_string(),
                    })
                }
            },
            _ => {
                return Err(GraphError::InvalidHeader {
                    line: header.to_string(),
                })
            }
        };

        let mut edges = Vec::with_capacity(m);
        let mut found = 0usize;
        for (idx, line) in lines {
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                    (Ok(a), Ok(b)) => {
                        let low = a.min(b);
                        if low < base {
                            return Err(GraphError::VertexOutOfRange { v: low, n });
                        }
                        edges.push((a - base, b - base));
                    }
                    _ => {
                        return Err(GraphError::InvalidEdgeLine {
                            line_no: idx + 1,
                            text: line.to_string(),
                        })
                    }
                },
                _ => {
                    return Err(GraphError::InvalidEdgeLine {
                        line_no: idx + 1,
                        text: line.to_string(),
                    })
                }
            }
            found += 1;
        }
        if found != m {
            return Err(GraphError::EdgeCountMismatch { expected: m, found });
        }
        Self::from_edge_list(n, edges)
    }

    /// Serializes to the edge-list text format, edges in lexicographic order.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges().map(|e| (e.u, e.v)).collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The four-vertex example graph: a triangle with a pendant edge.
    pub(crate) fn g1() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn g1_has_four_edges() {
        let g = g1();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3));
        assert!(!g.has_edge(0, 3));
    }

    #[test]
    fn single_vertex_graph() {
        let g = Graph::from_edge_list(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn loops_are_rejected() {
        let err = Graph::from_edge_list(3, [(0, 0)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { v: 0 });
    }

    #[test]
    fn out_of_range_is_rejected() {
        let err = Graph::from_edge_list(3, [(0, 3)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { v: 3, n: 3 });
    }

    #[test]
    fn duplicates_are_rejected_in_either_order() {
        let err = Graph::from_edge_list(3, [(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { u: 1, v: 0 });
    }

    #[test]
    fn one_based_parsing_shifts_labels() {
        let g = Graph::parse_edge_list_one_based("3 2\n1 2\n2 3\n").unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        let err = Graph::parse_edge_list_one_based("3 1\n0 1\n").unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { v: 0, n: 3 });
    }

    #[test]
    fn neighborhood_of_g1_vertex() {
        // Vertex 2 sits in the triangle and carries the pendant edge, so it
        // sees everyone else.
        let g = g1();
        let nb = g.neighborhood(2).unwrap();
        assert_eq!(nb.iter().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(g.degree(2), 3);
        assert!(g.neighborhood(4).is_err());
    }

    #[test]
    fn isolated_vertex_has_empty_neighborhood() {
        let g = Graph::from_edge_list(3, [(0, 1)]).unwrap();
        assert!(g.neighbors(2).is_empty());
        assert!(g.has_isolated_vertex());
        assert!(!g1().has_isolated_vertex());
    }

    #[test]
    fn complete_graph_neighborhoods() {
        let g = crate::generators::complete(5);
        for v in 0..5 {
            assert_eq!(g.degree(v), 4);
            assert!(!g.neighbors(v).contains(v));
        }
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for g in [g1(), crate::generators::complete(6), Graph::empty(4)] {
            let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn remove_vertex_relabels() {
        let g = g1();
        let h = g.remove_vertex(2).unwrap();
        // Deleting the triangle vertex adjacent to everything leaves one edge
        // (0, 1) and the former vertex 3 relabeled to 2, now isolated.
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 1);
        assert!(h.has_edge(0, 1));
        assert!(h.neighbors(2).is_empty());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = g1();
        let text = g.to_edge_list_string();
        assert_eq!(text, "4 4\n0 1\n0 2\n1 2\n2 3\n");
        let back = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert_eq!(Graph::parse_edge_list(""), Err(GraphError::MissingHeader));
        assert!(matches!(
            Graph::parse_edge_list("4\n"),
            Err(GraphError::InvalidHeader { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n"),
            Err(GraphError::InvalidEdgeLine { line_no: 2, .. })
        ));
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeCountMismatch {
                expected: 2,
                found: 1
            })
        );
    }
}
