//! Exhaustive desk-scale corpora: every labeled tree on up to 9 vertices
//! (via Prüfer sequences) and every labeled simple graph on up to 7 vertices.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{what} enumeration supports 1 <= n <= {max}, got {n}")]
pub struct EnumerationError {
    pub what: &'static str,
    pub n: usize,
    pub max: usize,
}

pub const MAX_TREE_N: usize = 9;
pub const MAX_GRAPH_N: usize = 7;

/// Decodes a Prüfer sequence into the labeled tree it encodes: repeatedly
/// join the smallest remaining leaf to the next sequence element.
fn decode_pruefer(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let mut last = (0..n).filter(|&u| degree[u] == 1);
    let a = last.next().expect("two vertices remain");
    let b = last.next().expect("two vertices remain");
    edges.push((a.min(b), a.max(b)));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a simple graph")
}

/// Yields every labeled tree on `n` vertices exactly once; `n^(n-2)` trees
/// for `n >= 2`.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    if !(1..=MAX_TREE_N).contains(&n) {
        return Err(EnumerationError {
            what: "labeled tree",
            n,
            max: MAX_TREE_N,
        });
    }
    let count = if n <= 2 {
        1u64
    } else {
        (n as u64).pow(n as u32 - 2)
    };
    let iter = (0..count).map(move |code| {
        if n == 1 {
            return Graph::empty(1).expect("tiny");
        }
        if n == 2 {
            return Graph::from_edges(2, &[(0, 1)]).expect("tiny");
        }
        let mut seq = vec![0usize; n - 2];
        let mut c = code;
        for slot in seq.iter_mut() {
            *slot = (c % n as u64) as usize;
            c /= n as u64;
        }
        decode_pruefer(n, &seq)
    });
    Ok(iter)
}

/// Number of labeled simple graphs on `n` vertices: `2^(n(n-1)/2)`.
pub fn graph_mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Decodes one edge-set bitmask into a graph; edge slots are ordered
/// lexicographically, `(0,1), (0,2), .., (n-2,n-1)`.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut slot = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> slot & 1 == 1 {
                edges.push((u, v));
            }
            slot += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("edge slots are valid")
}

/// Yields all `2^(n(n-1)/2)` labeled simple graphs on `n` vertices in
/// bitmask order of the edge set (edge slots ordered lexicographically).
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    if !(1..=MAX_GRAPH_N).contains(&n) {
        return Err(EnumerationError {
            what: "labeled graph",
            n,
            max: MAX_GRAPH_N,
        });
    }
    Ok((0..graph_mask_count(n)).map(move |mask| graph_from_edge_mask(n, mask)))
}
