//! The claim registry: one [`TheoremCheck`] implementation per theorem,
//! lemma, corollary, or conjecture, each replayed over an exhaustive or
//! family corpus.

use super::corpora::{family_corpus, graph_corpus, tree_corpus, with_pool, CorpusGraph};
use super::discrepancy as disc;
use super::{finish_report, Severity, TheoremCheck, VerificationReport, VerifyConfig, Violation};
use crate::bitset::VertexSet;
use crate::coalition::{
    coalition_graph, coalition_number_with, construct_from_domatic, BoundMode, SolverConfig,
};
use crate::domatic::domatic_number;
use crate::domination::is_k_dominating;
use crate::enumerate::{graph_from_edge_mask, graph_mask_count, MAX_GRAPH_N};
use crate::family::FamilySpec;
use crate::graph::Graph;
use rayon::prelude::*;
use std::ops::RangeInclusive;
use std::time::Instant;

/// Every registered check, in suite order.
pub const REGISTRY: &[&dyn TheoremCheck] = &[
    &TExist,
    &T2dk,
    &CHalfk,
    &LPartners,
    &TUb1,
    &TUb2,
    &CReg,
    &TKn,
    &TKstLb,
    &CTreeUb,
    &TPath,
    &LCycleHalf,
    &TCycle,
    &CCoronaK1,
    &TCoronaCycle,
    &TCoronaPath,
    &TDeg,
    &LCocktail,
    &CRegCocktail,
    &CParity,
    &TTreeHalf,
    &CTreeN,
    &TTreeDist,
    &ConjKst,
];

/// All verifier solves use only the trivial bound so that measured
/// values stay independent of the claims under test.
fn solver_cfg() -> SolverConfig {
    SolverConfig {
        bound_mode: BoundMode::TrivialOnly,
        ..SolverConfig::default()
    }
}

/// Largest family instance any check will generate; the solver refuses
/// beyond its own budget and such rows are recorded, not fatal.
const MAX_FAMILY_N: usize = 14;

/// Exact C_k or a printable failure; over-budget instances are recorded
/// as `budget:` rows, which map to the usage/budget exit code.
fn solve_value(g: &Graph, k: usize) -> Result<Option<usize>, String> {
    coalition_number_with(g, k, &solver_cfg())
        .map(|r| r.value)
        .map_err(|e| format!("budget: {e}"))
}

fn show(v: Option<usize>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "undefined".to_string(),
    }
}

fn instance_label(cg: &CorpusGraph) -> String {
    format!("{} ({})", cg.name, cg.graph.compact_edge_list())
}

/// The mixed corpus for bound and existence checks: family instances up to
/// `max_n`, all labeled trees up to min(max_n, 7), all labeled graphs up
/// to min(max_n, 6).
fn mixed_corpus(max_n: usize) -> Vec<CorpusGraph> {
    let mut corpus = family_corpus(max_n);
    corpus.extend(tree_corpus(max_n.min(7)));
    corpus.extend(graph_corpus(max_n.min(6)));
    corpus
}

/// Runs `row` over `(instance, k)` pairs in parallel and assembles the
/// report with deterministic ordering.
fn run_rows<R>(
    check: &dyn TheoremCheck,
    cfg: &VerifyConfig,
    rows: Vec<R>,
    eval: impl Fn(&R) -> Option<Violation> + Sync,
) -> VerificationReport
where
    R: Send + Sync,
{
    let started = Instant::now();
    let violations: Vec<Violation> =
        with_pool(cfg.jobs, || rows.par_iter().filter_map(&eval).collect());
    finish_report(check, started, rows.len() as u64, violations)
}

// ---------------------------------------------------------------------
// Existence and bounds over the mixed corpus
// ---------------------------------------------------------------------

struct TExist;
impl TheoremCheck for TExist {
    fn id(&self) -> &'static str {
        "T-EXIST"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "every graph with min degree >= k admits a k-coalition partition, \
         built constructively from a maximum k-domatic partition"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let ks = cfg.effective_k_range(1..=3);
        let rows: Vec<(CorpusGraph, usize)> =
            mixed_corpus(cfg.effective_max_n(9).min(MAX_FAMILY_N))
                .into_iter()
                .flat_map(|cg| ks.clone().map(move |k| (cg.clone(), k)))
                .filter(|(cg, k)| cg.graph.min_degree() >= *k)
                .collect();
        run_rows(self, cfg, rows, |(cg, k)| {
            match construct_from_domatic(&cg.graph, *k) {
                Ok(_) => None,
                Err(e) => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: "a validating k-coalition partition".into(),
                    got: e.to_string(),
                    documented: false,
                }),
            }
        })
    }
}

struct T2dk;
impl TheoremCheck for T2dk {
    fn id(&self) -> &'static str {
        "T-2DK"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_k(G) >= 2 d_k(G) for connected graphs (known false at k = 1)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let ks = cfg.effective_k_range(1..=3);
        let rows: Vec<(CorpusGraph, usize)> =
            mixed_corpus(cfg.effective_max_n(9).min(MAX_FAMILY_N))
                .into_iter()
                .filter(|cg| cg.graph.is_connected())
                .flat_map(|cg| ks.clone().map(move |k| (cg.clone(), k)))
                .collect();
        run_rows(self, cfg, rows, |(cg, k)| {
            let bound = 2 * domatic_number(&cg.graph, *k);
            match solve_value(&cg.graph, *k) {
                Ok(Some(c)) if c < bound => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k >= {bound}"),
                    got: c.to_string(),
                    documented: disc::t2dk_is_documented(*k),
                }),
                Ok(_) => None,
                Err(e) => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k >= {bound}"),
                    got: e,
                    documented: false,
                }),
            }
        })
    }
}

struct CHalfk;
impl TheoremCheck for CHalfk {
    fn id(&self) -> &'static str {
        "C-HALFK"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_k(G) >= d_{k/2}(G) for even k"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let ks = cfg.effective_k_range(1..=3);
        let rows: Vec<(CorpusGraph, usize)> =
            mixed_corpus(cfg.effective_max_n(9).min(MAX_FAMILY_N))
                .into_iter()
                .flat_map(|cg| {
                    ks.clone()
                        .filter(|k| k % 2 == 0)
                        .map(move |k| (cg.clone(), k))
                })
                .collect();
        run_rows(self, cfg, rows, |(cg, k)| {
            let bound = domatic_number(&cg.graph, k / 2);
            match solve_value(&cg.graph, *k) {
                Ok(Some(c)) if c < bound => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k >= d_(k/2) = {bound}"),
                    got: c.to_string(),
                    documented: false,
                }),
                Ok(_) => None,
                Err(e) => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k >= d_(k/2) = {bound}"),
                    got: e,
                    documented: false,
                }),
            }
        })
    }
}

struct LPartners;
impl TheoremCheck for LPartners {
    fn id(&self) -> &'static str {
        "L-PARTNERS"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "in an optimal witness partition, every block forms a k-coalition \
         with at most Δ-k+2 blocks (coalition-graph degree bound)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let ks = cfg.effective_k_range(1..=3);
        let rows: Vec<(CorpusGraph, usize)> =
            mixed_corpus(cfg.effective_max_n(9).min(MAX_FAMILY_N))
                .into_iter()
                .flat_map(|cg| ks.clone().map(move |k| (cg.clone(), k)))
                .collect();
        run_rows(self, cfg, rows, |(cg, k)| {
            let result = match coalition_number_with(&cg.graph, *k, &solver_cfg()) {
                Ok(r) => r,
                Err(e) => {
                    return Some(Violation {
                        graph: instance_label(cg),
                        k: *k,
                        expected: "a solved instance".into(),
                        got: e.to_string(),
                        documented: false,
                    })
                }
            };
            let (partition, _) = result.witness?;
            let kcg = coalition_graph(&cg.graph, &partition, *k).ok()?;
            let bound = cg.graph.max_degree() as isize - *k as isize + 2;
            let worst = (0..kcg.n()).map(|b| kcg.degree(b)).max().unwrap_or(0);
            (worst as isize > bound).then(|| Violation {
                graph: instance_label(cg),
                k: *k,
                expected: format!("coalition-graph degree <= {bound}"),
                got: worst.to_string(),
                documented: disc::large_k_is_documented(cg.graph.max_degree(), *k),
            })
        })
    }
}

struct TUb1;
impl TheoremCheck for TUb1 {
    fn id(&self) -> &'static str {
        "T-UB1"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_k(G) <= Δ-k+3 when k > δ (known false for k >= Δ+2)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let ks = cfg.effective_k_range(1..=3);
        let rows: Vec<(CorpusGraph, usize)> =
            mixed_corpus(cfg.effective_max_n(9).min(MAX_FAMILY_N))
                .into_iter()
                .flat_map(|cg| ks.clone().map(move |k| (cg.clone(), k)))
                .filter(|(cg, k)| *k > cg.graph.min_degree())
                .collect();
        run_rows(self, cfg, rows, |(cg, k)| {
            let bound = cg.graph.max_degree() as isize - *k as isize + 3;
            match solve_value(&cg.graph, *k) {
                Ok(Some(c)) if c as isize > bound => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k <= {bound}"),
                    got: c.to_string(),
                    documented: disc::large_k_is_documented(cg.graph.max_degree(), *k)
                        && cg.graph.n() >= 2,
                }),
                Ok(_) => None,
                Err(e) => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k <= {bound}"),
                    got: e,
                    documented: false,
                }),
            }
        })
    }
}

struct TUb2;
impl TheoremCheck for TUb2 {
    fn id(&self) -> &'static str {
        "T-UB2"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "C_δ(G) <= 2Δ-2δ+4 when Δ >= δ+1 (informally proved; report only)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let ks = cfg.effective_k_range(1..=3);
        let rows: Vec<(CorpusGraph, usize)> =
            mixed_corpus(cfg.effective_max_n(9).min(MAX_FAMILY_N))
                .into_iter()
                .flat_map(|cg| ks.clone().map(move |k| (cg.clone(), k)))
                .filter(|(cg, k)| {
                    *k == cg.graph.min_degree() && cg.graph.max_degree() > cg.graph.min_degree()
                })
                .collect();
        run_rows(self, cfg, rows, |(cg, k)| {
            let bound = 2 * cg.graph.max_degree() - 2 * cg.graph.min_degree() + 4;
            match solve_value(&cg.graph, *k) {
                Ok(Some(c)) if c > bound => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k <= {bound}"),
                    got: c.to_string(),
                    documented: false,
                }),
                Ok(_) => None,
                Err(e) => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: format!("C_k <= {bound}"),
                    got: e,
                    documented: false,
                }),
            }
        })
    }
}

struct CReg;
impl TheoremCheck for CReg {
    fn id(&self) -> &'static str {
        "C-REG"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "3 <= C_k(G) <= 4 for k-regular graphs (known false for K_2 at k = 1)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let ks = cfg.effective_k_range(1..=3);
        let rows: Vec<(CorpusGraph, usize)> =
            mixed_corpus(cfg.effective_max_n(9).min(MAX_FAMILY_N))
                .into_iter()
                .flat_map(|cg| ks.clone().map(move |k| (cg.clone(), k)))
                .filter(|(cg, k)| cg.graph.regularity() == Some(*k))
                .collect();
        run_rows(self, cfg, rows, |(cg, k)| {
            match solve_value(&cg.graph, *k) {
                Ok(Some(c)) if (3..=4).contains(&c) => None,
                Ok(v) => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: "3 <= C_k <= 4".into(),
                    got: show(v),
                    documented: disc::reg_is_documented(cg.graph.n()),
                }),
                Err(e) => Some(Violation {
                    graph: instance_label(cg),
                    k: *k,
                    expected: "3 <= C_k <= 4".into(),
                    got: e,
                    documented: false,
                }),
            }
        })
    }
}

// ---------------------------------------------------------------------
// Closed forms on families
// ---------------------------------------------------------------------

struct TKn;
impl TheoremCheck for TKn {
    fn id(&self) -> &'static str {
        "T-KN"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_k(K_n) = n-k+2 for 2 <= k <= n-1"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let max_n = cfg.effective_max_n(9).min(MAX_FAMILY_N);
        let ks = cfg.effective_k_range(2..=8);
        let mut rows = Vec::new();
        for n in 3..=max_n {
            for k in ks.clone() {
                if (2..=n - 1).contains(&k) {
                    rows.push((n, k));
                }
            }
        }
        run_rows(self, cfg, rows, |&(n, k)| {
            let g = FamilySpec::Complete(n).generate().expect("valid spec");
            let expected = n - k + 2;
            match solve_value(&g, k) {
                Ok(Some(c)) if c == expected => None,
                other => Some(Violation {
                    graph: format!("complete:{n}"),
                    k,
                    expected: expected.to_string(),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: false,
                }),
            }
        })
    }
}

struct TKstLb;
impl TheoremCheck for TKstLb {
    fn id(&self) -> &'static str {
        "T-KST-LB"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_k(K_{s,t}) >= t-k+2 for s <= t (known false for s < k < t)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let max_t = cfg.effective_max_n(6).min(7);
        let ks = cfg.effective_k_range(1..=3);
        let mut rows = Vec::new();
        for s in 1..=max_t {
            for t in s..=max_t {
                for k in ks.clone() {
                    if t + 2 >= k {
                        rows.push((s, t, k));
                    }
                }
            }
        }
        run_rows(self, cfg, rows, |&(s, t, k)| {
            let g = FamilySpec::Biclique(s, t).generate().expect("valid spec");
            let bound = (t + 2).saturating_sub(k);
            match solve_value(&g, k) {
                Ok(Some(c)) if c >= bound => None,
                other => Some(Violation {
                    graph: format!("biclique:{s},{t}"),
                    k,
                    expected: format!("C_k >= {bound}"),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: disc::kst_lb_is_documented(s, t, k),
                }),
            }
        })
    }
}

struct TPath;
impl TheoremCheck for TPath {
    fn id(&self) -> &'static str {
        "T-PATH"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_2(P_n) piecewise: undefined for n=1, stated 1 for n=2 (actual 2), \
         2 for n=3, 3 for n >= 4"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows: Vec<usize> = (1..=cfg.effective_max_n(12).min(MAX_FAMILY_N)).collect();
        run_rows(self, cfg, rows, |&n| {
            let g = FamilySpec::Path(n).generate().expect("valid spec");
            let got = match solve_value(&g, 2) {
                Ok(v) => v,
                Err(e) => {
                    return Some(Violation {
                        graph: format!("path:{n}"),
                        k: 2,
                        expected: "a solved instance".into(),
                        got: e,
                        documented: false,
                    })
                }
            };
            let expected: (Option<usize>, &str) = match n {
                1 => (None, "undefined (stated value 1)"),
                2 => (Some(1), "1 (stated; actual value 2, vacuous-union case)"),
                3 => (Some(2), "2"),
                _ => (Some(3), "3"),
            };
            (got != expected.0).then(|| Violation {
                graph: format!("path:{n}"),
                k: 2,
                expected: expected.1.to_string(),
                got: show(got),
                documented: disc::path_is_documented(n),
            })
        })
    }
}

struct LCycleHalf;
impl TheoremCheck for LCycleHalf {
    fn id(&self) -> &'static str {
        "L-CYCLE-HALF"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "every 2-dominating set of C_n has at least n/2 vertices \
         (exhaustive subset scan)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows: Vec<usize> = (3..=cfg.effective_max_n(14).min(24)).collect();
        run_rows(self, cfg, rows, |&n| {
            let g = FamilySpec::Cycle(n).generate().expect("valid spec");
            for mask in 0..1u64 << n {
                let s = VertexSet::from_bits(mask);
                if is_k_dominating(&g, s, 2) && 2 * s.len() < n {
                    return Some(Violation {
                        graph: format!("cycle:{n}"),
                        k: 2,
                        expected: format!("|S| >= {n}/2"),
                        got: format!("2-dominating set of size {}", s.len()),
                        documented: false,
                    });
                }
            }
            None
        })
    }
}

struct TCycle;
impl TheoremCheck for TCycle {
    fn id(&self) -> &'static str {
        "T-CYCLE"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_2(C_n) = 4 for even n, 3 for odd n"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows: Vec<usize> = (3..=cfg.effective_max_n(12).min(MAX_FAMILY_N)).collect();
        run_rows(self, cfg, rows, |&n| {
            let g = FamilySpec::Cycle(n).generate().expect("valid spec");
            let expected = if n % 2 == 0 { 4 } else { 3 };
            match solve_value(&g, 2) {
                Ok(Some(c)) if c == expected => None,
                other => Some(Violation {
                    graph: format!("cycle:{n}"),
                    k: 2,
                    expected: expected.to_string(),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: false,
                }),
            }
        })
    }
}

struct CCoronaK1;
impl TheoremCheck for CCoronaK1 {
    fn id(&self) -> &'static str {
        "C-CORONA-K1"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_2(C_n ∘ K_1) = C_2(P_n ∘ K_1) = 4 for n >= 3 \
         (known false for paths with n <= 4)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let max_n = cfg.effective_max_n(6).min(MAX_FAMILY_N / 2);
        let mut rows = Vec::new();
        for n in 3..=max_n {
            rows.push((FamilySpec::Cycle(n), false, n));
            rows.push((FamilySpec::Path(n), true, n));
        }
        run_rows(self, cfg, rows, |(outer, is_path, n)| {
            let spec =
                FamilySpec::Corona(Box::new(outer.clone()), Box::new(FamilySpec::Complete(1)));
            let g = spec.generate().expect("valid spec");
            match solve_value(&g, 2) {
                Ok(Some(4)) => None,
                other => Some(Violation {
                    graph: spec.to_string(),
                    k: 2,
                    expected: "4".into(),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: *is_path && disc::corona_path_is_documented(*n, 1, 2),
                }),
            }
        })
    }
}

/// Expected value of C_k(C_n ∘ K̄_l) per the four-case display.
fn corona_cycle_expected(l: usize, k: usize) -> usize {
    if l + 3 <= k {
        2
    } else if l + 2 == k {
        3
    } else if l + 1 == k {
        4
    } else {
        2
    }
}

/// Expected value of C_k(P_n ∘ K̄_l): same display, except the l = k-2 row
/// splits on the path length.
fn corona_path_expected(n: usize, l: usize, k: usize) -> usize {
    if l + 2 == k {
        if n <= 3 {
            2
        } else {
            3
        }
    } else {
        corona_cycle_expected(l, k)
    }
}

fn corona_rows(
    cfg: &VerifyConfig,
    outer_default: RangeInclusive<usize>,
) -> Vec<(usize, usize, usize)> {
    let max_outer = cfg.effective_max_n(*outer_default.end());
    let ks = cfg.effective_k_range(2..=5);
    let mut rows = Vec::new();
    for n in *outer_default.start()..=max_outer {
        for l in 1..=4 {
            if n * (1 + l) > 14 {
                continue;
            }
            for k in ks.clone() {
                rows.push((n, l, k));
            }
        }
    }
    rows
}

struct TCoronaCycle;
impl TheoremCheck for TCoronaCycle {
    fn id(&self) -> &'static str {
        "T-CORONA-CYCLE"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_k(C_n ∘ K̄_l) matches the four-case display {2, 3, 4, 2}"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows = corona_rows(cfg, 3..=4);
        run_rows(self, cfg, rows, |&(n, l, k)| {
            let spec = FamilySpec::Corona(
                Box::new(FamilySpec::Cycle(n)),
                Box::new(FamilySpec::Empty(l)),
            );
            let g = spec.generate().expect("valid spec");
            let expected = corona_cycle_expected(l, k);
            match solve_value(&g, k) {
                Ok(Some(c)) if c == expected => None,
                other => Some(Violation {
                    graph: spec.to_string(),
                    k,
                    expected: expected.to_string(),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: false,
                }),
            }
        })
    }
}

struct TCoronaPath;
impl TheoremCheck for TCoronaPath {
    fn id(&self) -> &'static str {
        "T-CORONA-PATH"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "C_k(P_n ∘ K̄_l) matches the five-case display (l = k-2 splits on n)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows = corona_rows(cfg, 3..=4);
        run_rows(self, cfg, rows, |&(n, l, k)| {
            let spec = FamilySpec::Corona(
                Box::new(FamilySpec::Path(n)),
                Box::new(FamilySpec::Empty(l)),
            );
            let g = spec.generate().expect("valid spec");
            let expected = corona_path_expected(n, l, k);
            match solve_value(&g, k) {
                Ok(Some(c)) if c == expected => None,
                other => Some(Violation {
                    graph: spec.to_string(),
                    k,
                    expected: expected.to_string(),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: disc::corona_path_is_documented(n, l, k),
                }),
            }
        })
    }
}

struct LCocktail;
impl TheoremCheck for LCocktail {
    fn id(&self) -> &'static str {
        "L-COCKTAIL"
    }
    fn severity(&self) -> Severity {
        Severity::Assert
    }
    fn description(&self) -> &'static str {
        "the cocktail-party graph is (n-2)-regular with C_2 = n"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows: Vec<usize> = (4..=cfg.effective_max_n(10).min(MAX_FAMILY_N))
            .step_by(2)
            .collect();
        run_rows(self, cfg, rows, |&n| {
            let g = FamilySpec::Cocktail(n).generate().expect("valid spec");
            if g.regularity() != Some(n - 2) {
                return Some(Violation {
                    graph: format!("cocktail:{n}"),
                    k: 2,
                    expected: format!("({}-2)-regular", n),
                    got: format!(
                        "degrees {:?}",
                        (0..n).map(|v| g.degree(v)).collect::<Vec<_>>()
                    ),
                    documented: false,
                });
            }
            match solve_value(&g, 2) {
                Ok(Some(c)) if c == n => None,
                other => Some(Violation {
                    graph: format!("cocktail:{n}"),
                    k: 2,
                    expected: n.to_string(),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: false,
                }),
            }
        })
    }
}

// ---------------------------------------------------------------------
// Exhaustive n <= 7 checks on graphs with C_2(G) = n
// ---------------------------------------------------------------------

/// C_2(G) = n iff the all-singleton partition validates: an n-block
/// partition of n vertices is the singleton partition, singletons are
/// never 2-dominating for n >= 2, so validity reduces to every vertex
/// having a partner u with {u, v} 2-dominating.
fn c2_equals_n(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 {
        return false;
    }
    (0..n).all(|v| (0..n).any(|u| u != v && is_k_dominating(g, VertexSet::singleton(u).with(v), 2)))
}

/// Work items for the exhaustive scans: (n, mask range) chunks.
fn mask_chunks(max_n: usize) -> Vec<(usize, u64, u64)> {
    let mut chunks = Vec::new();
    let step = 1u64 << 15;
    for n in 1..=max_n.min(MAX_GRAPH_N) {
        let total = graph_mask_count(n);
        let mut lo = 0;
        while lo < total {
            let hi = (lo + step).min(total);
            chunks.push((n, lo, hi));
            lo = hi;
        }
    }
    chunks
}

struct TDeg;
impl TheoremCheck for TDeg {
    fn id(&self) -> &'static str {
        "T-DEG"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "every graph with C_2(G) = n has a vertex of degree >= n-2 \
         (exhaustive over all labeled graphs)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let started = Instant::now();
        let chunks = mask_chunks(cfg.effective_max_n(7));
        let (checked, violations) = scan_chunks(cfg, &chunks, |g| {
            if c2_equals_n(g) && g.max_degree() + 2 < g.n() {
                Some(Violation {
                    graph: g.compact_edge_list(),
                    k: 2,
                    expected: format!("max degree >= {}", g.n() as isize - 2),
                    got: g.max_degree().to_string(),
                    documented: false,
                })
            } else {
                None
            }
        });
        finish_report(self, started, checked, violations)
    }
}

struct CRegCocktail;
impl TheoremCheck for CRegCocktail {
    fn id(&self) -> &'static str {
        "C-REG-COCKTAIL"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "every (n-2)-regular graph with C_2(G) = n has even n and is a \
         complement of a perfect matching"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let started = Instant::now();
        let chunks = mask_chunks(cfg.effective_max_n(7));
        let (checked, violations) = scan_chunks(cfg, &chunks, |g| {
            let n = g.n();
            if n < 2 || g.regularity() != Some(n - 2) || !c2_equals_n(g) {
                return None;
            }
            let matching = g.complement().regularity() == Some(1);
            if n % 2 == 0 && matching {
                None
            } else {
                Some(Violation {
                    graph: g.compact_edge_list(),
                    k: 2,
                    expected: "even n, complement a perfect matching".into(),
                    got: format!("n = {n}, complement 1-regular: {matching}"),
                    documented: false,
                })
            }
        });
        finish_report(self, started, checked, violations)
    }
}

struct CParity;
impl TheoremCheck for CParity {
    fn id(&self) -> &'static str {
        "C-PARITY"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "for odd n with C_2(G) = n, the number of full-degree vertices is odd"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let started = Instant::now();
        let chunks = mask_chunks(cfg.effective_max_n(7));
        let (checked, violations) = scan_chunks(cfg, &chunks, |g| {
            let n = g.n();
            if n % 2 == 0 || !c2_equals_n(g) {
                return None;
            }
            let full = (0..n).filter(|&v| g.degree(v) == n - 1).count();
            if full % 2 == 1 {
                None
            } else {
                Some(Violation {
                    graph: g.compact_edge_list(),
                    k: 2,
                    expected: "an odd number of full vertices".into(),
                    got: full.to_string(),
                    documented: false,
                })
            }
        });
        finish_report(self, started, checked, violations)
    }
}

fn scan_chunks(
    cfg: &VerifyConfig,
    chunks: &[(usize, u64, u64)],
    test: impl Fn(&Graph) -> Option<Violation> + Sync + Send,
) -> (u64, Vec<Violation>) {
    let checked: u64 = chunks.iter().map(|&(_, lo, hi)| hi - lo).sum();
    let test = &test;
    let violations = with_pool(cfg.jobs, || {
        chunks
            .par_iter()
            .flat_map_iter(|&(n, lo, hi)| {
                (lo..hi).filter_map(move |mask| test(&graph_from_edge_mask(n, mask)))
            })
            .collect()
    });
    (checked, violations)
}

// ---------------------------------------------------------------------
// Tree suite
// ---------------------------------------------------------------------

struct CTreeUb;
impl TheoremCheck for CTreeUb {
    fn id(&self) -> &'static str {
        "C-TREE-UB"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "C_2(T) <= Δ+1 on all labeled trees, with the spider attaining \
         C_2 = k+1 at maximum degree k"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let started = Instant::now();
        let max_n = cfg.effective_max_n(8);
        let trees = tree_corpus(max_n.min(8));
        let mut violations: Vec<Violation> = with_pool(cfg.jobs, || {
            trees
                .par_iter()
                .filter_map(|cg| {
                    let c = solve_value(&cg.graph, 2).ok()??;
                    let bound = cg.graph.max_degree() + 1;
                    (c > bound).then(|| Violation {
                        graph: instance_label(cg),
                        k: 2,
                        expected: format!("C_2 <= {bound}"),
                        got: c.to_string(),
                        documented: false,
                    })
                })
                .collect()
        });
        let mut checked = trees.len() as u64;
        // Spider attainment rows, report severity per the figure ambiguity.
        for k in [3usize, 4] {
            let n = 3 * k + 1;
            if n > max_n.max(10) || (k == 4 && max_n < 13) {
                continue;
            }
            checked += 1;
            let g = FamilySpec::Spider(k).generate().expect("valid spec");
            match solve_value(&g, 2) {
                Ok(Some(c)) if c == k + 1 => {}
                other => violations.push(Violation {
                    graph: format!("spider:{k}"),
                    k: 2,
                    expected: (k + 1).to_string(),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: false,
                }),
            }
        }
        finish_report(self, started, checked, violations)
    }
}

struct TTreeHalf;
impl TheoremCheck for TTreeHalf {
    fn id(&self) -> &'static str {
        "T-TREE-HALF"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "C_2(T) <= n/2 + 1 on all labeled trees (informally proved; report)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows = tree_corpus(cfg.effective_max_n(8).min(8));
        run_rows(self, cfg, rows, |cg| {
            let c = solve_value(&cg.graph, 2).ok()??;
            (2 * c > cg.graph.n() + 2).then(|| Violation {
                graph: instance_label(cg),
                k: 2,
                expected: format!("2*C_2 <= {}", cg.graph.n() + 2),
                got: (2 * c).to_string(),
                documented: false,
            })
        })
    }
}

struct CTreeN;
impl TheoremCheck for CTreeN {
    fn id(&self) -> &'static str {
        "C-TREE-N"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "C_2(T) = n only for P_2 and C_2(T) = n-1 only for P_4 \
         (known to miss P_3)"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows = tree_corpus(cfg.effective_max_n(8).min(8));
        run_rows(self, cfg, rows, |cg| {
            let n = cg.graph.n();
            let c = solve_value(&cg.graph, 2).ok()??;
            if c == n && n != 2 {
                return Some(Violation {
                    graph: instance_label(cg),
                    k: 2,
                    expected: "C_2 = n only for P_2".into(),
                    got: format!("C_2 = {c} on a tree of order {n}"),
                    documented: false,
                });
            }
            if c + 1 == n {
                let is_p4 = n == 4 && cg.graph.max_degree() == 2;
                if !is_p4 {
                    return Some(Violation {
                        graph: instance_label(cg),
                        k: 2,
                        expected: "C_2 = n-1 only for P_4".into(),
                        got: format!("C_2 = {c} on a tree of order {n}"),
                        documented: disc::tree_n_is_documented(n),
                    });
                }
            }
            None
        })
    }
}

struct TTreeDist;
impl TheoremCheck for TTreeDist {
    fn id(&self) -> &'static str {
        "T-TREE-DIST"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "a tree with a vertex at distance >= 2 from every leaf has C_2 >= 3"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let rows = tree_corpus(cfg.effective_max_n(8).min(8));
        run_rows(self, cfg, rows, |cg| {
            let g = &cg.graph;
            let n = g.n();
            let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 1).collect();
            let qualifies = (0..n).any(|x| {
                leaves
                    .iter()
                    .all(|&l| g.distance(x, l).is_none_or(|d| d >= 2))
            });
            if !qualifies {
                return None;
            }
            let c = solve_value(g, 2).ok()?;
            match c {
                Some(c) if c >= 3 => None,
                v => Some(Violation {
                    graph: instance_label(cg),
                    k: 2,
                    expected: "C_2 >= 3".into(),
                    got: show(v),
                    documented: false,
                }),
            }
        })
    }
}

struct ConjKst;
impl TheoremCheck for ConjKst {
    fn id(&self) -> &'static str {
        "CONJ-KST"
    }
    fn severity(&self) -> Severity {
        Severity::Report
    }
    fn description(&self) -> &'static str {
        "conjecture C_k(K_{s,t}) = t-k+2; every deviating instance is \
         flagged in the report"
    }
    fn run(&self, cfg: &VerifyConfig) -> VerificationReport {
        let max_t = cfg.effective_max_n(6).min(7);
        let ks = cfg.effective_k_range(2..=6);
        let mut rows = Vec::new();
        for s in 2..=max_t {
            for t in s..=max_t {
                for k in ks.clone() {
                    if (2..=t).contains(&k) {
                        rows.push((s, t, k));
                    }
                }
            }
        }
        run_rows(self, cfg, rows, |&(s, t, k)| {
            let g = FamilySpec::Biclique(s, t).generate().expect("valid spec");
            let expected = t - k + 2;
            match solve_value(&g, k) {
                Ok(Some(c)) if c == expected => None,
                other => Some(Violation {
                    graph: format!("biclique:{s},{t}"),
                    k,
                    expected: format!("= {expected} (conjectured)"),
                    got: match other {
                        Ok(v) => show(v),
                        Err(e) => e,
                    },
                    documented: false,
                }),
            }
        })
    }
}
