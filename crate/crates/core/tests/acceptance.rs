//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the corpus sizes it covered. Claims the source material states
//! but exhaustive computation falsifies are pinned to their computed
//! values and surfaced as documented discrepancies; those rows are
//! cross-checked against the discrepancy registry so nothing drifts
//! silently in either direction.

use kcoalition::coalition::{
    coalition_number_oracle, coalition_number_with, construct_from_domatic, BoundMode, SolverConfig,
};
use kcoalition::domatic::domatic_number;
use kcoalition::family::FamilySpec;
use kcoalition::graph::Graph;
use kcoalition::verify::{self, VerifyConfig, Violation};
use rayon::prelude::*;

fn solver_cfg() -> SolverConfig {
    SolverConfig {
        bound_mode: BoundMode::TrivialOnly,
        ..SolverConfig::default()
    }
}

fn value(g: &Graph, k: usize) -> Option<usize> {
    coalition_number_with(g, k, &solver_cfg())
        .expect("inside solver envelope")
        .value
}

fn family(spec: FamilySpec) -> Graph {
    spec.generate().expect("valid family spec")
}

fn corona(outer: FamilySpec, inner: FamilySpec) -> Graph {
    family(FamilySpec::Corona(Box::new(outer), Box::new(inner)))
}

fn run_check(id: &str) -> kcoalition::verify::VerificationReport {
    let cfg = VerifyConfig::default();
    verify::find(id)
        .unwrap_or_else(|| panic!("{id} not registered"))
        .run(&cfg)
}

fn assert_all_documented(id: &str, violations: &[Violation]) {
    let undocumented: Vec<_> = violations.iter().filter(|v| !v.documented).collect();
    assert!(
        undocumented.is_empty(),
        "{id}: undocumented violations: {undocumented:?}"
    );
}

#[test]
fn criterion_1_closed_form_tables() {
    // C_k(K_n) = n-k+2 for 3 <= n <= 9, 2 <= k <= n-1.
    let mut rows = 0;
    for n in 3..=9 {
        let g = family(FamilySpec::Complete(n));
        for k in 2..=n - 1 {
            assert_eq!(value(&g, k), Some(n - k + 2), "K_{n} at k={k}");
            rows += 1;
        }
    }

    // C_2(P_n): undefined for n=1 (documented), 2 for n=2 (stated value
    // is 1, documented), 2 for n=3, 3 for 4 <= n <= 12.
    assert_eq!(value(&family(FamilySpec::Path(1)), 2), None);
    assert_eq!(value(&family(FamilySpec::Path(2)), 2), Some(2));
    assert_eq!(value(&family(FamilySpec::Path(3)), 2), Some(2));
    for n in 4..=12 {
        assert_eq!(value(&family(FamilySpec::Path(n)), 2), Some(3), "P_{n}");
        rows += 1;
    }
    // The verifier flags the P_2 row as a documented discrepancy.
    let path_report = run_check("T-PATH");
    assert_eq!(path_report.violations.len(), 1);
    assert!(path_report.violations[0].documented);
    assert!(path_report.violations[0].graph.contains("path:2"));

    // C_2(C_n): 4 for even n, 3 for odd n.
    for n in 3..=12 {
        let expected = if n % 2 == 0 { 4 } else { 3 };
        assert_eq!(
            value(&family(FamilySpec::Cycle(n)), 2),
            Some(expected),
            "C_{n}"
        );
        rows += 1;
    }

    // C_2(C_n ∘ K_1) = 4 for 3 <= n <= 6. For paths the stated value 4
    // fails at n = 3, 4 where exhaustive search gives 3 (documented).
    for n in 3..=6 {
        let g = corona(FamilySpec::Cycle(n), FamilySpec::Complete(1));
        assert_eq!(value(&g, 2), Some(4), "C_{n} corona");
        let p = corona(FamilySpec::Path(n), FamilySpec::Complete(1));
        let expected = if n <= 4 { 3 } else { 4 };
        assert_eq!(value(&p, 2), Some(expected), "P_{n} corona");
        rows += 2;
    }
    let corona_report = run_check("C-CORONA-K1");
    assert_eq!(corona_report.violations.len(), 2);
    assert_all_documented("C-CORONA-K1", &corona_report.violations);

    // C_k(C_n ∘ K̄_l) four-case display over every instance within the
    // 14-vertex budget; the cycle table holds on every cell.
    let cycle_corona = run_check("T-CORONA-CYCLE");
    assert!(
        cycle_corona.violations.is_empty(),
        "{:?}",
        cycle_corona.violations
    );
    // The path variant deviates exactly on the documented l = k-1 cells.
    let path_corona = run_check("T-CORONA-PATH");
    assert_all_documented("T-CORONA-PATH", &path_corona.violations);
    assert_eq!(path_corona.violations.len(), 5);

    // C_2(cocktail(n)) = n for even n in 4..10.
    for n in [4, 6, 8, 10] {
        assert_eq!(
            value(&family(FamilySpec::Cocktail(n)), 2),
            Some(n),
            "cocktail:{n}"
        );
        rows += 1;
    }

    println!(
        "ACCEPTANCE 1 closed-form tables: PASS ({rows} direct rows; \
         documented discrepancies: C_2(P_2) = 2 vs stated 1, \
         C_2(P_3∘K_1) = C_2(P_4∘K_1) = 3 vs stated 4, and the matching \
         l = k-1 path-corona cells)"
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let mut instances: Vec<(String, Graph)> = Vec::new();
    for cg in verify::family_corpus(9) {
        instances.push((cg.name, cg.graph));
    }
    for n in 1..=7 {
        for (i, t) in kcoalition::enumerate::labeled_trees(n).unwrap().enumerate() {
            instances.push((format!("tree:{n}#{i}"), t));
        }
    }
    for n in 1..=6 {
        for (i, g) in kcoalition::enumerate::all_graphs(n).unwrap().enumerate() {
            instances.push((format!("graph:{n}#{i}"), g));
        }
    }

    let default_cfg = SolverConfig::default();
    let trusting_cfg = SolverConfig {
        bound_mode: BoundMode::TrustPaper,
        ..SolverConfig::default()
    };
    let mismatches: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|(name, g)| {
            let default_cfg = &default_cfg;
            let trusting_cfg = &trusting_cfg;
            (1..=3usize).filter_map(move |k| {
                let slow = coalition_number_oracle(g, k).expect("n <= 11").value;
                let fast = coalition_number_with(g, k, default_cfg)
                    .expect("within budget")
                    .value;
                let trusting = coalition_number_with(g, k, trusting_cfg)
                    .expect("within budget")
                    .value;
                if fast != slow || trusting != slow {
                    Some(format!(
                        "{name} k={k}: oracle {slow:?}, solver {fast:?}, trusting {trusting:?}"
                    ))
                } else {
                    None
                }
            })
        })
        .collect();
    assert!(mismatches.is_empty(), "mismatches: {mismatches:#?}");
    println!(
        "ACCEPTANCE 2 oracle equivalence: PASS ({} instances x k in 1..=3, \
         solver with proven bounds and with opt-in trusted bounds both \
         match the exhaustive oracle)",
        instances.len()
    );
}

#[test]
fn criterion_3_bound_suite() {
    // Every bound whose hypotheses genuinely hold has zero violations;
    // instance classes where exhaustive computation falsifies the stated
    // claim are confined to the documented discrepancy registry.
    let mut documented_total = 0;
    for id in [
        "T-2DK",
        "C-HALFK",
        "T-UB1",
        "C-REG",
        "T-KST-LB",
        "L-PARTNERS",
    ] {
        let report = run_check(id);
        assert_all_documented(id, &report.violations);
        documented_total += report.violations.len();
        match id {
            // These claims hold everywhere on the corpus.
            "C-HALFK" => assert!(report.violations.is_empty(), "{id}"),
            // These have known falsified zones; the zones must actually
            // show up, otherwise the registry is stale.
            _ => assert!(
                !report.violations.is_empty(),
                "{id}: expected documented discrepancies were not detected"
            ),
        }
    }
    println!(
        "ACCEPTANCE 3 bound suite: PASS (zero violations under verified \
         hypotheses; {documented_total} oracle-confirmed claim \
         discrepancies documented: 2d_k at k=1, Δ-k+3 and the partner \
         bound at k >= Δ+2, K_{{s,t}} lower bound at s < k < t, s = k = 1 \
         with t >= 3, and s = k >= 2 with t >= k+3, 3 <= C_k for K_2)"
    );
}

#[test]
fn criterion_4_construction_soundness() {
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for cg in verify::family_corpus(9) {
        corpus.push((cg.name, cg.graph));
    }
    for n in 1..=7 {
        for (i, t) in kcoalition::enumerate::labeled_trees(n).unwrap().enumerate() {
            corpus.push((format!("tree:{n}#{i}"), t));
        }
    }
    for n in 1..=6 {
        for (i, g) in kcoalition::enumerate::all_graphs(n).unwrap().enumerate() {
            corpus.push((format!("graph:{n}#{i}"), g));
        }
    }

    let results: Vec<(u64, u64, Vec<String>, Vec<String>)> = corpus
        .par_iter()
        .map(|(name, g)| {
            let mut ran = 0;
            let mut reached = 0;
            let mut failures = Vec::new();
            let mut k1_shortfalls = Vec::new();
            for k in 1..=3usize {
                if g.min_degree() < k {
                    continue;
                }
                ran += 1;
                match construct_from_domatic(g, k) {
                    Err(e) => failures.push(format!("{name} k={k}: {e}")),
                    Ok((p, cert)) => {
                        assert_eq!(cert.justify.len(), p.len());
                        if g.is_connected() {
                            let target = 2 * domatic_number(g, k);
                            if p.len() >= target {
                                reached += 1;
                            } else if k == 1 {
                                // Documented: the 2 d_k block count is not
                                // attainable at k = 1 when maximum domatic
                                // partitions use dominating singletons.
                                k1_shortfalls
                                    .push(format!("{name}: {} blocks < {target}", p.len()));
                            } else {
                                failures
                                    .push(format!("{name} k={k}: {} blocks < {target}", p.len()));
                            }
                        } else {
                            reached += 1;
                        }
                    }
                }
            }
            (ran, reached, failures, k1_shortfalls)
        })
        .collect();

    let ran: u64 = results.iter().map(|r| r.0).sum();
    let reached: u64 = results.iter().map(|r| r.1).sum();
    let failures: Vec<_> = results.iter().flat_map(|r| r.2.clone()).collect();
    let shortfalls: usize = results.iter().map(|r| r.3.len()).sum();
    assert!(failures.is_empty(), "construction failures: {failures:#?}");
    assert!(
        shortfalls > 0,
        "the documented k = 1 shortfall class is stale"
    );
    println!(
        "ACCEPTANCE 4 construction soundness: PASS ({ran} instances with \
         δ >= k all validate; {reached} reach 2·d_k blocks; {shortfalls} \
         documented k = 1 shortfalls where the stated 2·d_k count is \
         unattainable)"
    );
}

#[test]
fn criterion_5_exhaustive_degree_checks() {
    for id in ["T-DEG", "C-PARITY", "C-REG-COCKTAIL"] {
        let report = run_check(id);
        assert!(
            report.violations.is_empty(),
            "{id}: {:?}",
            report.violations
        );
        assert_eq!(report.checked, 2 + 8 + 64 + 1024 + 32768 + 2097152 + 1);
    }
    println!(
        "ACCEPTANCE 5 exhaustive degree checks: PASS (all 2131019 labeled \
         graphs on n <= 7 vertices: C_2 = n forces a vertex of degree \
         >= n-2, odd full-vertex count for odd n, and (n-2)-regular \
         instances are cocktail-party graphs)"
    );
}

#[test]
fn criterion_6_tree_suite() {
    let ub = run_check("C-TREE-UB");
    assert!(ub.violations.is_empty(), "C-TREE-UB: {:?}", ub.violations);
    let half = run_check("T-TREE-HALF");
    assert!(
        half.violations.is_empty(),
        "T-TREE-HALF: {:?}",
        half.violations
    );
    let dist = run_check("T-TREE-DIST");
    assert!(
        dist.violations.is_empty(),
        "T-TREE-DIST: {:?}",
        dist.violations
    );
    let chr = run_check("C-TREE-N");
    assert_all_documented("C-TREE-N", &chr.violations);
    // Exactly the three labeled paths on three vertices attain n-1
    // outside the stated characterization.
    assert_eq!(chr.violations.len(), 3);
    // Spider attainment ran inside C-TREE-UB (zero violations implies
    // C_2(spider:3) = 4); pin the value directly as well.
    assert_eq!(value(&family(FamilySpec::Spider(3)), 2), Some(4));
    println!(
        "ACCEPTANCE 6 tree suite: PASS (all labeled trees n <= 8: \
         C_2 <= Δ+1, C_2 <= n/2+1, distance-2 trees have C_2 >= 3, \
         spider(3) attains 4; documented: P_3 also attains C_2 = n-1, \
         contrary to the stated P_4-only characterization)"
    );
}

#[test]
fn criterion_7_conjecture_sweep() {
    let report = run_check("CONJ-KST");
    assert_eq!(report.checked, 55, "2 <= s <= t <= 6, 2 <= k <= t");
    let exceeds: Vec<_> = report
        .violations
        .iter()
        .filter(|v| v.got.parse::<usize>().ok() > parse_conjectured(&v.expected))
        .collect();
    let undershoots = report.violations.len() - exceeds.len();
    // The conjecture is falsified in both directions; known witnesses.
    assert!(report
        .violations
        .iter()
        .any(|v| v.graph == "biclique:2,3" && v.k == 2 && v.got == "4"));
    assert!(report
        .violations
        .iter()
        .any(|v| v.graph == "biclique:2,4" && v.k == 3 && v.got == "2"));
    println!(
        "ACCEPTANCE 7 conjecture sweep: PASS (55 instances computed \
         exactly; {} exceed the conjectured t-k+2, {} fall below; the \
         conjecture as stated is false in both directions)",
        exceeds.len(),
        undershoots
    );
}

fn parse_conjectured(expected: &str) -> Option<usize> {
    expected
        .trim_start_matches("= ")
        .split_whitespace()
        .next()?
        .parse()
        .ok()
}
