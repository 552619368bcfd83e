//! Exact computation of k-coalition numbers and their supporting
//! invariants (k-domination number γ_k, k-domatic number d_k) on small
//! graphs, together with a theorem-by-theorem verification harness that
//! replays every claim on exhaustive desk-scale corpora.
//!
//! A k-dominating set gives every outside vertex at least k neighbors
//! inside. Two disjoint sets form a k-coalition when neither k-dominates
//! but their union does. A k-coalition partition justifies every block
//! either as a k-dominating set with exactly k members or through a
//! coalition partner, and C_k(G) is the maximum block count over all such
//! partitions (undefined when no partition validates).

#![forbid(unsafe_code)]

pub mod bitset;
pub mod coalition;
pub mod domatic;
pub mod domination;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod partition;
pub mod verify;

pub use bitset::VertexSet;
pub use graph::Graph;
pub use partition::Partition;
