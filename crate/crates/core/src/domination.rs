//! k-domination predicates, minimality, and the exact k-domination number.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    #[error("set is not a {k}-dominating set, precondition violated")]
    NotDominating { k: usize },
    #[error("set contains vertex {v} >= n = {n}")]
    OutOfRange { v: usize, n: usize },
}

fn check_in_range(g: &Graph, s: VertexSet) -> Result<(), DominationError> {
    let stray = s.difference(g.vertex_set());
    match stray.min_elem() {
        Some(v) => Err(DominationError::OutOfRange { v, n: g.n() }),
        None => Ok(()),
    }
}

/// True iff every vertex outside `s` has at least `k` neighbors in `s`.
///
/// `s` must be a subset of `V(g)` and `k >= 1`; both are debug-asserted,
/// the checked entry point is [`is_k_dominating_checked`].
pub fn is_k_dominating(g: &Graph, s: VertexSet, k: usize) -> bool {
    debug_assert!(k >= 1);
    debug_assert!(s.is_subset(g.vertex_set()));
    g.vertex_set()
        .difference(s)
        .iter()
        .all(|v| g.neighbors(v).intersection(s).len() >= k)
}

pub fn is_k_dominating_checked(g: &Graph, s: VertexSet, k: usize) -> Result<bool, DominationError> {
    check_in_range(g, s)?;
    Ok(is_k_dominating(g, s, k))
}

/// True iff `s` is k-dominating and no single-vertex removal keeps it so.
/// Single removal suffices: k-domination is monotone under supersets, so
/// subset-minimality equals single-removal minimality.
pub fn is_minimal_k_dominating(g: &Graph, s: VertexSet, k: usize) -> Result<bool, DominationError> {
    check_in_range(g, s)?;
    if !is_k_dominating(g, s, k) {
        return Err(DominationError::NotDominating { k });
    }
    Ok(s.iter().all(|v| !is_k_dominating(g, s.without(v), k)))
}

/// Shrinks a k-dominating set to a minimal one by repeatedly removing the
/// largest-index removable vertex.
pub fn minimalize(g: &Graph, s: VertexSet, k: usize) -> Result<VertexSet, DominationError> {
    check_in_range(g, s)?;
    if !is_k_dominating(g, s, k) {
        return Err(DominationError::NotDominating { k });
    }
    let mut cur = s;
    loop {
        let removable = cur
            .iter()
            .filter(|&v| is_k_dominating(g, cur.without(v), k))
            .max();
        match removable {
            Some(v) => cur.remove(v),
            None => return Ok(cur),
        }
    }
}

/// Vertices that belong to every k-dominating set: a vertex of degree < k
/// outside a set can never see k neighbors inside it.
fn forced_vertices(g: &Graph, k: usize) -> VertexSet {
    (0..g.n()).filter(|&v| g.degree(v) < k).collect()
}

/// The k-domination number γ_k: minimum cardinality of a k-dominating set.
pub fn gamma_k(g: &Graph, k: usize) -> usize {
    gamma_k_with_witness(g, k).1
}

/// γ_k together with the lexicographically smallest optimal set.
pub fn gamma_k_with_witness(g: &Graph, k: usize) -> (VertexSet, usize) {
    assert!(k >= 1, "k must be positive");
    let forced = forced_vertices(g, k);
    let free: Vec<usize> = g.vertex_set().difference(forced).iter().collect();

    // Branch and bound for the optimum size.
    let mut best = g.n();
    fn descend(
        g: &Graph,
        k: usize,
        free: &[usize],
        idx: usize,
        current: VertexSet,
        best: &mut usize,
    ) {
        if current.len() >= *best {
            return;
        }
        if is_k_dominating(g, current, k) {
            *best = current.len();
            return;
        }
        if idx == free.len() {
            return;
        }
        descend(g, k, free, idx + 1, current.with(free[idx]), best);
        descend(g, k, free, idx + 1, current, best);
    }
    descend(g, k, &free, 0, forced, &mut best);

    // Second pass: lexicographically smallest set of the optimum size. The
    // include-first DFS over sorted free vertices visits candidate sets in
    // lexicographic order of their sorted element lists.
    let extra = best - forced.len();
    fn first_lex(
        g: &Graph,
        k: usize,
        free: &[usize],
        idx: usize,
        current: VertexSet,
        remaining: usize,
    ) -> Option<VertexSet> {
        if remaining == 0 {
            return is_k_dominating(g, current, k).then_some(current);
        }
        if free.len() - idx < remaining {
            return None;
        }
        first_lex(g, k, free, idx + 1, current.with(free[idx]), remaining - 1)
            .or_else(|| first_lex(g, k, free, idx + 1, current, remaining))
    }
    let witness = first_lex(g, k, &free, 0, forced, extra)
        .expect("a set of the optimum size exists by construction");
    (witness, best)
}
