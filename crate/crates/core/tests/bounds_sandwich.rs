//! The combined bound operations bracket the exact value wherever their
//! hypotheses genuinely hold: lower_bound_domatic <= C_k <= upper_bound.
//! Instances inside the documented discrepancy classes (k = 1 for the
//! domatic lower bound, k >= Δ+2 for the degree upper bound) are excluded
//! here and covered by the discrepancy regression tests instead.

use kcoalition::coalition::{
    coalition_number_with, lower_bound_domatic, upper_bound, BoundMode, SolverConfig,
};
use kcoalition::enumerate::all_graphs;
use kcoalition::verify::family_corpus;

fn exact(g: &kcoalition::Graph, k: usize) -> Option<usize> {
    let cfg = SolverConfig {
        bound_mode: BoundMode::TrivialOnly,
        ..SolverConfig::default()
    };
    coalition_number_with(g, k, &cfg).unwrap().value
}

#[test]
fn sandwich_holds_on_families_and_small_graphs() {
    let mut instances: Vec<(String, kcoalition::Graph)> = family_corpus(7)
        .into_iter()
        .map(|cg| (cg.name, cg.graph))
        .collect();
    for n in 1..=5 {
        for (i, g) in all_graphs(n).unwrap().enumerate() {
            instances.push((format!("graph:{n}#{i}"), g));
        }
    }

    let mut checked = 0;
    for (name, g) in &instances {
        for k in 1..=3usize {
            let Some(c) = exact(g, k) else { continue };
            if k >= g.max_degree() + 2 {
                // Documented upper-bound failure zone (vacuous unions).
            } else {
                let ub = upper_bound(g, k).expect("nonempty graph");
                assert!(c <= ub, "{name} k={k}: C_k = {c} > upper bound {ub}");
                checked += 1;
            }
            if k >= 2 {
                let lb = lower_bound_domatic(g, k);
                assert!(c >= lb, "{name} k={k}: C_k = {c} < lower bound {lb}");
                checked += 1;
            }
        }
    }
    assert!(checked > 2000, "only {checked} comparisons ran");
}
