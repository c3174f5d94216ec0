//! Acceptance run: every criterion is one named suite over its full default
//! grid, with an optional wall-clock target. Prints one PASS/FAIL line each.

use std::time::Duration;

use qct_core::suites::{run_suite, Mode, SuiteOptions};

const CRITERIA: [(u8, &str, &str, Option<u64>); 12] = [
    (1, "qdyson", "q-Dyson constant term equals its product", Some(60)),
    (2, "qmorris", "q-Morris constant term equals its product", Some(120)),
    (3, "bf-recursion", "block recursion, tie-breaks and b = 0 homogeneity", Some(600)),
    (4, "p1-formula", "two-block product formula", None),
    (5, "roots", "degree and roots of the interpolated polynomial", None),
    (6, "dn0", "recursion at a = b = 0 and its scalar identity", None),
    (7, "splitting", "splitting formula with residue oracle", Some(300)),
    (8, "poch-identities", "Pochhammer transformations", None),
    (9, "qsum", "q-sum identity and q-binomial theorem", None),
    (10, "vanishing", "vanishing coefficients", None),
    (11, "lemma-key", "case classification and path-weight bounds", Some(120)),
    (12, "gx-pipeline", "partial-fraction elimination agrees with interpolation", None),
];

fn main() {
    let mut red = Vec::new();
    for (id, suite, what, target) in CRITERIA {
        let report = run_suite(suite, &SuiteOptions::default()).expect("known suite");
        let elapsed = Duration::from_millis(report.elapsed_ms);
        let in_time = target.is_none_or(|t| elapsed <= Duration::from_secs(t));
        let ok = report.passed() && report.skipped.is_empty() && report.mode == Mode::Exact && in_time;
        println!(
            "{} criterion {id:>2} [{suite}] {what}: {} cases, {:.2?}",
            if ok { "PASS" } else { "FAIL" },
            report.cases.len(),
            elapsed
        );
        if let Some(f) = report.failures().next() {
            println!("     first failure {}: {}", f.params, f.witness.as_deref().unwrap_or(""));
        }
        if !in_time {
            println!("     over the {}s target", target.unwrap_or(0));
        }
        if !ok {
            red.push(id);
        }
    }
    if !red.is_empty() {
        println!("failing criteria: {red:?}");
        std::process::exit(1);
    }
}
