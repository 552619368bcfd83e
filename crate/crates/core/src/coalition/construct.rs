//! Refines a maximum k-domatic partition into a k-coalition partition:
//! minimalize every block but the last (surplus flows to the last block),
//! split each minimal block into a singleton and the rest, and resolve the
//! last block's remainder by coalition test or by merging it into an
//! existing part.

use super::{validate_partition, CoalitionCertificate};
use crate::bitset::VertexSet;
use crate::domatic::find_max_domatic_partition;
use crate::domination::{is_k_dominating, minimalize};
use crate::graph::Graph;
use crate::partition::Partition;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("construction requires min degree >= k, got δ = {delta}, k = {k}")]
    MinDegreeTooSmall { delta: usize, k: usize },
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

/// Splits a minimal k-dominating block into its lowest element and the
/// rest; singleton blocks (k = 1 only) are kept whole. Returns the index
/// of the "rest" part when a split happened.
fn push_split(theta: &mut Vec<VertexSet>, block: VertexSet, k: usize) -> Option<usize> {
    if block.len() == 1 {
        debug_assert_eq!(k, 1, "singleton k-dominating sets exist only for k = 1");
        theta.push(block);
        return None;
    }
    let low = block.min_elem().expect("block is nonempty");
    theta.push(VertexSet::singleton(low));
    theta.push(block.without(low));
    Some(theta.len() - 1)
}

/// Builds a k-coalition partition for any graph with δ(G) >= k by
/// refining a maximum k-domatic partition, together with its certificate.
pub fn construct_from_domatic(
    g: &Graph,
    k: usize,
) -> Result<(Partition, CoalitionCertificate), ConstructError> {
    assert!(k >= 1, "k must be positive");
    if g.n() == 0 {
        return Err(ConstructError::EmptyGraph);
    }
    let delta = g.min_degree();
    if delta < k {
        return Err(ConstructError::MinDegreeTooSmall { delta, k });
    }

    let phi = find_max_domatic_partition(g, k);
    let s = phi.len();
    let mut blocks: Vec<VertexSet> = phi.blocks().to_vec();

    // Replace each block but the last by a minimal core, moving surplus
    // vertices into the last block.
    for i in 0..s - 1 {
        let core = minimalize(g, blocks[i], k).expect("domatic blocks are k-dominating");
        let surplus = blocks[i].difference(core);
        blocks[i] = core;
        blocks[s - 1] = blocks[s - 1].union(surplus);
    }

    let mut theta: Vec<VertexSet> = Vec::new();
    for &block in blocks.iter().take(s - 1) {
        push_split(&mut theta, block, k);
    }

    let last = blocks[s - 1];
    let core = minimalize(g, last, k).expect("the last block is k-dominating");
    let rest = last.difference(core);
    let second = push_split(&mut theta, core, k);
    if !rest.is_empty() {
        // `rest` cannot be k-dominating (that would contradict maximality
        // of the domatic partition), so it either coalitions with a part
        // already in theta or merges into one.
        let pairs_up = theta
            .iter()
            .any(|&w| !is_k_dominating(g, w, k) && is_k_dominating(g, w.union(rest), k));
        if pairs_up {
            theta.push(rest);
        } else {
            let target = second.or_else(|| theta.iter().position(|&w| !is_k_dominating(g, w, k)));
            match target {
                Some(t) => theta[t] = theta[t].union(rest),
                None => {
                    return Err(ConstructError::Internal(
                        "no part can absorb the last block's remainder",
                    ))
                }
            }
        }
    }

    let partition = Partition::new(g.n(), theta)
        .map_err(|_| ConstructError::Internal("construction produced a non-partition"))?;
    let certificate = validate_partition(g, &partition, k)
        .map_err(|_| ConstructError::Internal("constructed partition does not validate"))?;
    Ok((partition, certificate))
}
