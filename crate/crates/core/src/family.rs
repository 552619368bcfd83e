//! Graph family generators with deterministic canonical labelings, the
//! corona product, and the family DSL used on the command line.
//!
//! DSL grammar:
//! `path:<n> | cycle:<n> | complete:<n> | biclique:<s>,<t> | star:<k> |
//!  spider:<k> | cocktail:<n> | empty:<n> | corona:(<spec>),(<spec>)`

use crate::graph::{Graph, GraphError};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n >= 1` vertices, edges `{i, i+1}`.
    Path(usize),
    /// Cycle on `n >= 3` vertices, path edges plus `{n-1, 0}`.
    Cycle(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Complete bipartite graph, part A = `0..s`, part B = `s..s+t`.
    Biclique(usize, usize),
    /// Star with center 0 and leaves `1..=k`, `k >= 1`.
    Star(usize),
    /// Star(k) plus two pendant vertices attached to each leaf; `n = 3k+1`.
    Spider(usize),
    /// Cocktail-party graph: all pairs except `{2i, 2i+1}`; `n` even, `>= 2`.
    Cocktail(usize),
    /// `n >= 1` isolated vertices.
    Empty(usize),
    /// Corona product of the two specs.
    Corona(Box<FamilySpec>, Box<FamilySpec>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid {family} parameter: {detail}")]
    InvalidParameter {
        family: &'static str,
        detail: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse family spec {input:?}: {detail}")]
pub struct FamilyParseError {
    pub input: String,
    pub detail: String,
}

impl FamilySpec {
    /// Number of vertices the generated graph will have.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Cocktail(n)
            | FamilySpec::Empty(n) => *n,
            FamilySpec::Biclique(s, t) => s + t,
            FamilySpec::Star(k) => k + 1,
            FamilySpec::Spider(k) => 3 * k + 1,
            FamilySpec::Corona(f, h) => f.vertex_count() * (1 + h.vertex_count()),
        }
    }

    fn check(&self) -> Result<(), FamilyError> {
        let bad = |family: &'static str, detail: String| {
            Err(FamilyError::InvalidParameter { family, detail })
        };
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) if *n < 1 => {
                bad("path/complete/empty", format!("n = {n}, need n >= 1"))
            }
            FamilySpec::Cycle(n) if *n < 3 => bad("cycle", format!("n = {n}, need n >= 3")),
            FamilySpec::Biclique(s, t) if *s < 1 || *t < 1 => {
                bad("biclique", format!("s = {s}, t = {t}, need s, t >= 1"))
            }
            FamilySpec::Star(k) | FamilySpec::Spider(k) if *k < 1 => {
                bad("star/spider", format!("k = {k}, need k >= 1"))
            }
            FamilySpec::Cocktail(n) if *n < 2 || *n % 2 != 0 => {
                bad("cocktail", format!("n = {n}, need even n >= 2"))
            }
            FamilySpec::Corona(f, h) => {
                f.check()?;
                h.check()
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.check()?;
        let g = match self {
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                Graph::from_edges(*n, &edges)?
            }
            FamilySpec::Cycle(n) => {
                let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, *n - 1));
                Graph::from_edges(*n, &edges)?
            }
            FamilySpec::Complete(n) => {
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(*n, &edges)?
            }
            FamilySpec::Biclique(s, t) => {
                let mut edges = Vec::new();
                for u in 0..*s {
                    for v in *s..*s + *t {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(s + t, &edges)?
            }
            FamilySpec::Star(k) => {
                let edges: Vec<_> = (1..=*k).map(|i| (0, i)).collect();
                Graph::from_edges(k + 1, &edges)?
            }
            FamilySpec::Spider(k) => {
                let mut edges: Vec<_> = (1..=*k).map(|i| (0, i)).collect();
                for i in 1..=*k {
                    edges.push((i, k + 2 * i - 1));
                    edges.push((i, k + 2 * i));
                }
                Graph::from_edges(3 * k + 1, &edges)?
            }
            FamilySpec::Cocktail(n) => {
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        if !(u / 2 == v / 2) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(*n, &edges)?
            }
            FamilySpec::Empty(n) => Graph::empty(*n)?,
            FamilySpec::Corona(f, h) => corona(&f.generate()?, &h.generate()?)?,
        };
        Ok(g)
    }
}

/// Corona product `outer ∘ inner`: one copy of `outer` on vertices
/// `0..|F|`, then the i-th copy of `inner` on a contiguous block, with
/// vertex `i` of `outer` adjacent to every vertex of its copy.
pub fn corona(outer: &Graph, inner: &Graph) -> Result<Graph, FamilyError> {
    if outer.n() == 0 || inner.n() == 0 {
        return Err(FamilyError::InvalidParameter {
            family: "corona",
            detail: "both factors must be nonempty".into(),
        });
    }
    let fn_ = outer.n();
    let hn = inner.n();
    let n = fn_ * (1 + hn);
    let mut edges = outer.edges();
    for i in 0..fn_ {
        let base = fn_ + i * hn;
        for (u, v) in inner.edges() {
            edges.push((base + u, base + v));
        }
        for u in 0..hn {
            edges.push((i, base + u));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Biclique(s, t) => write!(f, "biclique:{s},{t}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Spider(k) => write!(f, "spider:{k}"),
            FamilySpec::Cocktail(n) => write!(f, "cocktail:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Corona(a, b) => write!(f, "corona:({a}),({b})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyParseError;

    fn from_str(s: &str) -> Result<Self, FamilyParseError> {
        let fail = |detail: &str| FamilyParseError {
            input: s.to_string(),
            detail: detail.to_string(),
        };
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| fail("expected <family>:<args>"))?;
        let parse_num = |tok: &str| -> Result<usize, FamilyParseError> {
            tok.trim()
                .parse()
                .map_err(|_| fail(&format!("not a number: {tok:?}")))
        };
        match name.trim() {
            "path" => Ok(FamilySpec::Path(parse_num(rest)?)),
            "cycle" => Ok(FamilySpec::Cycle(parse_num(rest)?)),
            "complete" => Ok(FamilySpec::Complete(parse_num(rest)?)),
            "star" => Ok(FamilySpec::Star(parse_num(rest)?)),
            "spider" => Ok(FamilySpec::Spider(parse_num(rest)?)),
            "cocktail" => Ok(FamilySpec::Cocktail(parse_num(rest)?)),
            "empty" => Ok(FamilySpec::Empty(parse_num(rest)?)),
            "biclique" => {
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| fail("biclique needs <s>,<t>"))?;
                Ok(FamilySpec::Biclique(parse_num(a)?, parse_num(b)?))
            }
            "corona" => {
                let (first, second) = split_corona_args(rest).ok_or_else(|| {
                    fail("corona needs (<spec>),(<spec>) with balanced parentheses")
                })?;
                Ok(FamilySpec::Corona(
                    Box::new(first.parse()?),
                    Box::new(second.parse()?),
                ))
            }
            other => Err(fail(&format!("unknown family {other:?}"))),
        }
    }
}

/// Splits `(<a>),(<b>)` into the two parenthesized bodies, honoring nesting.
fn split_corona_args(rest: &str) -> Option<(&str, &str)> {
    let rest = rest.trim();
    if !rest.starts_with('(') {
        return None;
    }
    let mut depth = 0usize;
    let mut close = None;
    for (i, c) in rest.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    close = Some(i);
                    break;
                }
            }
            _ => {}
        }
    }
    let close = close?;
    let first = &rest[1..close];
    let tail = rest[close + 1..].trim_start();
    let tail = tail.strip_prefix(',')?.trim_start();
    let second = tail.strip_prefix('(')?.strip_suffix(')')?;
    Some((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle4() {
        let g = FamilySpec::Cycle(4).generate().unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn cocktail6_nonedges() {
        let g = FamilySpec::Cocktail(6).generate().unwrap();
        assert_eq!(g.regularity(), Some(4));
        let comp = g.complement();
        assert_eq!(comp.edges(), vec![(0, 1), (2, 3), (4, 5)]);
    }

    #[test]
    fn cocktail_regularity_sweep() {
        for n in (2..=12).step_by(2) {
            let g = FamilySpec::Cocktail(n).generate().unwrap();
            assert_eq!(g.regularity(), Some(n - 2), "cocktail({n})");
        }
    }

    #[test]
    fn corona_c3_empty1_is_leaves_on_triangle() {
        let g = FamilySpec::Corona(
            Box::new(FamilySpec::Cycle(3)),
            Box::new(FamilySpec::Empty(1)),
        )
        .generate()
        .unwrap();
        assert_eq!(g.n(), 6);
        for (outer, leaf) in [(0, 3), (1, 4), (2, 5)] {
            assert!(g.has_edge(outer, leaf));
            assert_eq!(g.degree(leaf), 1);
        }
    }

    #[test]
    fn corona_p2_k1() {
        let p2 = FamilySpec::Path(2).generate().unwrap();
        let k1 = FamilySpec::Complete(1).generate().unwrap();
        let g = corona(&p2, &k1).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn corona_degree_and_count_formulas() {
        let c3 = FamilySpec::Cycle(3).generate().unwrap();
        let e2 = FamilySpec::Empty(2).generate().unwrap();
        let g = corona(&c3, &e2).unwrap();
        assert_eq!(g.n(), 9);
        for v in 0..3 {
            assert_eq!(g.degree(v), 4);
        }
        for v in 3..9 {
            assert_eq!(g.degree(v), 1);
        }

        let c4 = FamilySpec::Cycle(4).generate().unwrap();
        let k1 = FamilySpec::Complete(1).generate().unwrap();
        let h = corona(&c4, &k1).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(h.max_degree(), 3);
        assert_eq!(h.min_degree(), 1);

        // |E(F∘H)| = |E(F)| + |V(F)|·(|E(H)| + |V(H)|)
        let k3 = FamilySpec::Complete(3).generate().unwrap();
        let g2 = corona(&c4, &k3).unwrap();
        assert_eq!(g2.n(), 4 * (1 + 3));
        assert_eq!(g2.edge_count(), 4 + 4 * (3 + 3));
    }

    #[test]
    fn spider_shape() {
        let g = FamilySpec::Spider(3).generate().unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree(0), 3);
        for leaf in 1..=3 {
            assert_eq!(g.degree(leaf), 3);
            assert!(g.has_edge(leaf, 3 + 2 * leaf - 1));
            assert!(g.has_edge(leaf, 3 + 2 * leaf));
        }
        for p in 4..10 {
            assert_eq!(g.degree(p), 1);
        }
        assert!(g.is_tree());
    }

    #[test]
    fn dsl_round_trip() {
        for text in [
            "path:5",
            "cycle:8",
            "complete:4",
            "biclique:2,3",
            "star:6",
            "spider:3",
            "cocktail:6",
            "empty:2",
            "corona:(cycle:4),(complete:1)",
            "corona:(corona:(path:2),(empty:1)),(complete:2)",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.generate().unwrap();
        }
    }

    #[test]
    fn dsl_rejects_garbage() {
        assert!("pathology:3".parse::<FamilySpec>().is_err());
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("biclique:3".parse::<FamilySpec>().is_err());
        assert!("corona:(path:2),".parse::<FamilySpec>().is_err());
        assert!("corona:(path:2),(cycle:2)"
            .parse::<FamilySpec>()
            .unwrap()
            .generate()
            .is_err());
    }

    #[test]
    fn invalid_parameters() {
        assert!(FamilySpec::Cycle(2).generate().is_err());
        assert!(FamilySpec::Cocktail(5).generate().is_err());
        assert!(FamilySpec::Path(0).generate().is_err());
        assert!(FamilySpec::Star(0).generate().is_err());
    }
}
