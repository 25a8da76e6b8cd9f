#![allow(dead_code)]

use sgap_core::GapSet;

/// The twelve gap sets of the classification corpus.
pub const CORPUS: [&str; 12] = [
    "delta:0;1",
    "finite:0",
    "finite:0,2",
    "finite:0,3",
    "finite:1,3",
    "finite:2,5",
    "delta:1;2",
    "delta:2;3",
    "delta:1;1",
    "delta:2;1",
    "delta:1;1,2",
    "family:squares,horizon=10000",
];

pub fn g(s: &str) -> GapSet {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn corpus() -> Vec<(&'static str, GapSet)> {
    CORPUS.iter().map(|&s| (s, g(s))).collect()
}

/// Corpus members with a finite or eventually periodic representation.
pub fn sofic_corpus() -> Vec<(&'static str, GapSet)> {
    corpus().into_iter().filter(|(_, set)| !set.is_sampled()).collect()
}

/// Prints one line per criterion and fails the test on a miss.
pub fn report(criterion: &str, failures: &[String], elapsed: std::time::Duration, budget_secs: f64) {
    let over = elapsed.as_secs_f64() > budget_secs;
    let status = if failures.is_empty() && !over { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} ({:.3} s, budget {budget_secs} s)",
        elapsed.as_secs_f64()
    );
    for f in failures {
        println!("  - {f}");
    }
    assert!(failures.is_empty(), "criterion {criterion}: {} failure(s)", failures.len());
    assert!(!over, "criterion {criterion}: over the time budget");
}
