//! Simple undirected graphs on up to 64 vertices with bit-vector adjacency,
//! plus the canonical edge-list text format.

use crate::bitset::{VertexSet, MAX_VERTICES};
use std::fmt;
use thiserror::Error;

/// Immutable simple undirected graph. `adj[v]` is the open neighborhood N(v).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// Errors from [`Graph::parse_edge_list`], each carrying the 1-based line number.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: header missing")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed edge, expected \"u v\" with u < v")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex id {v} out of range (n = {n})")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: loop edge at vertex {v}")]
    LoopEdge { line: usize, v: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: expected {expected} edges, found more")]
    TooManyEdges { line: usize, expected: usize },
    #[error("expected {expected} edges, found {found}")]
    TooFewEdges { expected: usize, found: usize },
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The set `V = {0, .., n-1}`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree exactly `r`.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.n)
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = VertexSet::singleton(0);
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == self.vertex_set()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// BFS distance from `u` to `v`, or `None` if unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = VertexSet::singleton(u);
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next.union(self.adj[w]);
            }
            if next.contains(v) {
                return Some(d);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        None
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Parses the canonical edge-list format: '#' comment lines, a header
    /// `n m`, then exactly `m` lines `u v` with `0 <= u < v < n`.
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut graph: Option<Graph> = None;
        let mut edges_seen = 0usize;
        let mut last_line = 0usize;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            match header {
                None => {
                    let mut it = content.split_whitespace();
                    let n: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(ParseError::MalformedHeader { line })?;
                    let m: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(ParseError::MalformedHeader { line })?;
                    if it.next().is_some() {
                        return Err(ParseError::MalformedHeader { line });
                    }
                    if n > MAX_VERTICES {
                        return Err(ParseError::TooManyVertices(n));
                    }
                    header = Some((n, m));
                    graph = Some(Graph::empty(n).expect("size checked"));
                }
                Some((n, m)) => {
                    if edges_seen == m {
                        return Err(ParseError::TooManyEdges { line, expected: m });
                    }
                    let mut it = content.split_whitespace();
                    let u: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(ParseError::MalformedEdge { line })?;
                    let v: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or(ParseError::MalformedEdge { line })?;
                    if it.next().is_some() {
                        return Err(ParseError::MalformedEdge { line });
                    }
                    if u == v {
                        return Err(ParseError::LoopEdge { line, v: u });
                    }
                    if u > v {
                        return Err(ParseError::MalformedEdge { line });
                    }
                    if v >= n {
                        return Err(ParseError::VertexOutOfRange { line, v, n });
                    }
                    let g = graph.as_mut().expect("set with header");
                    if g.has_edge(u, v) {
                        return Err(ParseError::DuplicateEdge { line, u, v });
                    }
                    g.add_edge_checked(u, v).expect("validated above");
                    edges_seen += 1;
                }
            }
        }

        match header {
            None => Err(ParseError::MissingHeader {
                line: last_line + 1,
            }),
            Some((_, m)) if edges_seen < m => Err(ParseError::TooFewEdges {
                expected: m,
                found: edges_seen,
            }),
            Some(_) => Ok(graph.expect("set with header")),
        }
    }

    /// Canonical edge-list text: header then edges sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// One-line `u-v,...` rendering used in verification reports.
    pub fn compact_edge_list(&self) -> String {
        let body = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(",");
        format!("n={};{}", self.n, body)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.compact_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_p3() {
        let g = Graph::parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn parse_k1() {
        let g = Graph::parse_edge_list("1 0\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            Graph::parse_edge_list("2 1\n0 0\n"),
            Err(ParseError::LoopEdge { line: 2, v: 0 })
        );
        assert_eq!(
            Graph::parse_edge_list("x y\n"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n0 1\n"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            Graph::parse_edge_list("2 1\n0 5\n"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                v: 5,
                n: 2
            })
        );
        assert_eq!(
            Graph::parse_edge_list("2 1\n1 0\n"),
            Err(ParseError::MalformedEdge { line: 2 })
        );
        assert_eq!(
            Graph::parse_edge_list("2 2\n0 1\n"),
            Err(ParseError::TooFewEdges {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g =
            Graph::parse_edge_list("# path on three vertices\n\n3 2\n# edges\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let again = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn complement_of_path() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2)]);
    }

    #[test]
    fn connectivity_and_distance() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.is_connected());
        assert!(path.is_tree());
        assert_eq!(path.distance(0, 3), Some(3));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert_eq!(split.distance(0, 2), None);
    }

    #[test]
    fn relabel_preserves_degrees() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }
}
