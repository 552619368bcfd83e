//! Deterministic instance corpora shared by the theorem checks.

use crate::enumerate::{all_graphs, labeled_trees};
use crate::family::FamilySpec;
use crate::graph::Graph;

/// A corpus instance, named by its family DSL string or enumeration index.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

fn push(corpus: &mut Vec<CorpusGraph>, spec: FamilySpec) {
    let graph = spec.generate().expect("corpus specs are valid");
    corpus.push(CorpusGraph {
        name: spec.to_string(),
        graph,
    });
}

/// Every family instance on at most `max_n` vertices: paths, cycles,
/// complete graphs, stars, spiders, cocktail-party graphs, bicliques,
/// empty graphs, and a fixed set of small coronas.
pub fn family_corpus(max_n: usize) -> Vec<CorpusGraph> {
    let mut corpus = Vec::new();
    for n in 1..=max_n {
        push(&mut corpus, FamilySpec::Path(n));
    }
    for n in 3..=max_n {
        push(&mut corpus, FamilySpec::Cycle(n));
    }
    for n in 1..=max_n {
        push(&mut corpus, FamilySpec::Complete(n));
    }
    for k in 1..max_n {
        push(&mut corpus, FamilySpec::Star(k));
    }
    for k in 1.. {
        if 3 * k + 1 > max_n {
            break;
        }
        push(&mut corpus, FamilySpec::Spider(k));
    }
    for n in (2..=max_n).step_by(2) {
        push(&mut corpus, FamilySpec::Cocktail(n));
    }
    for s in 1..=max_n {
        for t in s..=max_n {
            if s + t <= max_n {
                push(&mut corpus, FamilySpec::Biclique(s, t));
            }
        }
    }
    for n in 1..=max_n {
        push(&mut corpus, FamilySpec::Empty(n));
    }
    let outers = [
        FamilySpec::Path(2),
        FamilySpec::Path(3),
        FamilySpec::Path(4),
        FamilySpec::Cycle(3),
        FamilySpec::Cycle(4),
    ];
    let inners = [
        FamilySpec::Empty(1),
        FamilySpec::Empty(2),
        FamilySpec::Complete(2),
    ];
    for outer in &outers {
        for inner in &inners {
            let spec = FamilySpec::Corona(Box::new(outer.clone()), Box::new(inner.clone()));
            if spec.vertex_count() <= max_n {
                push(&mut corpus, spec);
            }
        }
    }
    corpus
}

/// All labeled trees on 2..=`max_n` vertices (plus K_1 for n = 1).
pub fn tree_corpus(max_n: usize) -> Vec<CorpusGraph> {
    let mut corpus = Vec::new();
    for n in 1..=max_n {
        for (i, t) in labeled_trees(n).expect("max_n within range").enumerate() {
            corpus.push(CorpusGraph {
                name: format!("tree:{n}#{i}"),
                graph: t,
            });
        }
    }
    corpus
}

/// All labeled simple graphs on 1..=`max_n` vertices.
pub fn graph_corpus(max_n: usize) -> Vec<CorpusGraph> {
    let mut corpus = Vec::new();
    for n in 1..=max_n {
        for (i, g) in all_graphs(n).expect("max_n within range").enumerate() {
            corpus.push(CorpusGraph {
                name: format!("graph:{n}#{i}"),
                graph: g,
            });
        }
    }
    corpus
}

/// Runs `f` inside a rayon pool of the requested width (or the global one).
pub(crate) fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_corpus_is_deterministic_and_bounded() {
        let a = family_corpus(9);
        let b = family_corpus(9);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.graph, y.graph);
        }
        assert!(a.iter().all(|c| c.graph.n() <= 9));
        assert!(a.iter().any(|c| c.name == "cocktail:8"));
        assert!(a.iter().any(|c| c.name == "corona:(cycle:3),(empty:2)"));
    }

    #[test]
    fn tree_corpus_counts() {
        // 1 + 1 + 3 + 16 + 125 labeled trees on n <= 5 vertices.
        assert_eq!(tree_corpus(5).len(), 146);
    }

    #[test]
    fn graph_corpus_counts() {
        assert_eq!(graph_corpus(3).len(), 1 + 2 + 8);
    }
}
