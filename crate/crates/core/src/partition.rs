//! Ordered vertex partitions and their text format (one block per line,
//! space-separated ids, '#' comments), shared by the domatic and coalition
//! modules.

use crate::bitset::VertexSet;
use std::fmt;
use thiserror::Error;

/// A partition of `{0, .., n-1}` into nonempty blocks, kept in canonical
/// order: blocks sorted by their minimum element.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    blocks: Vec<VertexSet>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("vertex {v} appears in more than one block")]
    Overlap { v: usize },
    #[error("vertex {v} is not covered by any block")]
    Gap { v: usize },
    #[error("vertex {v} out of range for n = {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("line {line}: cannot parse vertex id {token:?}")]
    BadToken { line: usize, token: String },
}

impl Partition {
    /// Validates and canonicalizes a list of blocks.
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Partition, PartitionError> {
        let universe = VertexSet::full(n);
        let mut seen = VertexSet::EMPTY;
        for (index, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock { index });
            }
            if let Some(v) = b.difference(universe).min_elem() {
                return Err(PartitionError::OutOfRange { v, n });
            }
            if let Some(v) = b.intersection(seen).min_elem() {
                return Err(PartitionError::Overlap { v });
            }
            seen = seen.union(*b);
        }
        if let Some(v) = universe.difference(seen).min_elem() {
            return Err(PartitionError::Gap { v });
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| b.min_elem().expect("blocks are nonempty"));
        Ok(Partition { n, blocks })
    }

    /// The partition of `{0, .., n-1}` into singletons.
    pub fn singletons(n: usize) -> Partition {
        Partition {
            n,
            blocks: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    /// The one-block partition `{V}`; `n >= 1`.
    pub fn whole(n: usize) -> Partition {
        assert!(n >= 1);
        Partition {
            n,
            blocks: vec![VertexSet::full(n)],
        }
    }

    /// Builds a partition from per-vertex block labels (restricted-growth
    /// strings produce canonical order directly).
    pub fn from_labels(labels: &[usize]) -> Partition {
        let n = labels.len();
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![VertexSet::EMPTY; count];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].insert(v);
        }
        Partition::new(n, blocks).expect("labels cover every vertex exactly once")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> VertexSet {
        self.blocks[i]
    }

    /// Parses the partition file format against a universe of size `n`.
    pub fn parse(text: &str, n: usize) -> Result<Partition, PartitionError> {
        let mut blocks = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut block = VertexSet::EMPTY;
            for token in content.split_whitespace() {
                let v: usize = token.parse().map_err(|_| PartitionError::BadToken {
                    line,
                    token: token.to_string(),
                })?;
                if v >= n {
                    return Err(PartitionError::OutOfRange { v, n });
                }
                block.insert(v);
            }
            blocks.push(block);
        }
        Partition::new(n, blocks)
    }
}

impl fmt::Display for Partition {
    /// Canonical file format: one block per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}
