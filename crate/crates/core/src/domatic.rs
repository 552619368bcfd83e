//! Exact k-domatic number d_k(G) and extraction of a maximum k-domatic
//! partition.

use crate::bitset::VertexSet;
use crate::domination::is_k_dominating;
use crate::graph::Graph;
use crate::partition::Partition;

/// True iff every block of the partition is a k-dominating set.
pub fn is_k_domatic(g: &Graph, p: &Partition, k: usize) -> bool {
    p.blocks().iter().all(|&b| is_k_dominating(g, b, k))
}

/// Maximum number of blocks over all k-domatic partitions; at least 1
/// since `{V}` always qualifies.
pub fn domatic_number(g: &Graph, k: usize) -> usize {
    find_max_domatic_partition(g, k).len()
}

/// A maximum k-domatic partition; the lexicographically smallest optimum
/// in restricted-growth order (which coincides with canonical block order).
///
/// Every vertex lies outside all blocks but one and needs k neighbors in
/// each of those, so d blocks require deg(v) >= k(d-1); the search starts
/// at the resulting bound `⌊δ/k⌋ + 1` and works downward, returning the
/// first width that admits a partition.
pub fn find_max_domatic_partition(g: &Graph, k: usize) -> Partition {
    assert!(k >= 1, "k must be positive");
    assert!(g.n() >= 1, "domatic partitions need at least one vertex");
    let ub = (g.min_degree() / k + 1).min(g.n());
    for d in (2..=ub).rev() {
        let mut labels = vec![0usize; g.n()];
        if assign(g, k, d, 1, &mut labels, 1) {
            return Partition::from_labels(&labels);
        }
    }
    Partition::whole(g.n())
}

/// DFS over restricted-growth strings for a partition into exactly `d`
/// k-dominating blocks. Vertices are assigned in index order; vertex `idx`
/// may join an existing block or open block `used` (first-occurrence
/// symmetry breaking).
fn assign(g: &Graph, k: usize, d: usize, idx: usize, labels: &mut [usize], used: usize) -> bool {
    let n = g.n();
    if idx == n {
        return used == d && blocks_all_dominating(g, k, d, labels);
    }
    // Remaining vertices must suffice to open the missing blocks.
    if n - idx < d - used {
        return false;
    }
    let limit = (used + 1).min(d);
    for b in 0..limit {
        labels[idx] = b;
        let next_used = used.max(b + 1);
        if feasible(g, k, d, idx, labels, next_used) && assign(g, k, d, idx + 1, labels, next_used)
        {
            return true;
        }
    }
    false
}

fn blocks_all_dominating(g: &Graph, k: usize, d: usize, labels: &[usize]) -> bool {
    let mut blocks = vec![VertexSet::EMPTY; d];
    for (v, &b) in labels.iter().enumerate() {
        blocks[b].insert(v);
    }
    blocks.iter().all(|&b| is_k_dominating(g, b, k))
}

/// Prune: an assigned vertex outside block `b` must still be able to reach
/// k neighbors in `b`, counting unassigned vertices as potential members.
fn feasible(g: &Graph, k: usize, d: usize, idx: usize, labels: &[usize], used: usize) -> bool {
    let n = g.n();
    let mut blocks = vec![VertexSet::EMPTY; d];
    for (v, &label) in labels.iter().enumerate().take(idx + 1) {
        blocks[label].insert(v);
    }
    let unassigned: VertexSet = (idx + 1..n).collect();
    for (v, &home) in labels.iter().enumerate().take(idx + 1) {
        let nbrs = g.neighbors(v);
        let spare = nbrs.intersection(unassigned).len();
        for (b, &members) in blocks.iter().enumerate().take(used) {
            if home != b && nbrs.intersection(members).len() + spare < k {
                return false;
            }
        }
    }
    true
}
