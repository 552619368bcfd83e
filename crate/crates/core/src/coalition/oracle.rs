//! Brute-force C_k solver: enumerates every set partition of V via
//! restricted-growth strings and validates each one. Independent of the
//! branch-and-bound path; this is the ground truth the fast solver is
//! checked against.

use super::solver::{SolveError, SolveResult};
use super::{partition_from_masks, validate_partition};
use crate::graph::Graph;
use std::time::Instant;

/// Hard envelope for full enumeration; Bell(11) = 678570 partitions.
pub const ORACLE_MAX_N: usize = 11;

/// Exact C_k(G) by exhaustive partition enumeration. `value` is `None`
/// iff no partition of any size validates.
pub fn coalition_number_oracle(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    assert!(k >= 1, "k must be positive");
    let n = g.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > ORACLE_MAX_N {
        return Err(SolveError::TooLarge {
            n,
            max: ORACLE_MAX_N,
        });
    }

    let start = Instant::now();
    let mut labels = vec![0usize; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut explored = 0u64;
    loop {
        explored += 1;
        let used = labels.iter().copied().max().expect("n >= 1") + 1;
        if best.as_ref().is_none_or(|(b, _)| used > *b) {
            let mut masks = vec![0u64; used];
            for (v, &b) in labels.iter().enumerate() {
                masks[b] |= 1 << v;
            }
            let p = partition_from_masks(n, &masks);
            if validate_partition(g, &p, k).is_ok() {
                best = Some((used, labels.clone()));
            }
        }
        if !next_rgs(&mut labels) {
            break;
        }
    }

    let (value, witness) = match best {
        None => (None, None),
        Some((count, labels)) => {
            let mut masks = vec![0u64; count];
            for (v, &b) in labels.iter().enumerate() {
                masks[b] |= 1 << v;
            }
            let p = partition_from_masks(n, &masks);
            let cert = validate_partition(g, &p, k).expect("revalidates");
            (Some(count), Some((p, cert)))
        }
    };
    Ok(SolveResult {
        value,
        witness,
        nodes_explored: explored,
        elapsed: start.elapsed(),
    })
}

/// Advances `labels` to the next restricted-growth string; false when the
/// enumeration is exhausted. Strings are visited in lexicographic order,
/// starting from all zeros.
fn next_rgs(labels: &mut [usize]) -> bool {
    let n = labels.len();
    let mut i = n;
    while i > 1 {
        i -= 1;
        let prefix_max = labels[..i].iter().copied().max().expect("i >= 1");
        if labels[i] <= prefix_max {
            labels[i] += 1;
            for l in labels.iter_mut().skip(i + 1) {
                *l = 0;
            }
            return true;
        }
        labels[i] = 0;
    }
    false
}
