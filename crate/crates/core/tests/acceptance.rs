//! Acceptance criteria 1–8. Each test prints one `criterion N: PASS|FAIL`
//! line; run with `--nocapture` to see them.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::time::Instant;

use common::{corpus, g, report, sofic_corpus};
use sgap_core::cfrac::{
    gapset_of_real, nonmixing_perturbation, real_of_gapset, survey, CFNumber, ExactReal,
    QuadraticSurd,
};
use sgap_core::cover::{
    default_max_delay, delay_bound, fischer_cover, graph_language_check, left_closing_delay,
    period_and_classes, spectral_radius,
};
use sgap_core::entropy::{entropy, entropy_bounds, entropy_truncations, Entropy};
use sgap_core::gapset::{are_conjugate, classify, is_aft, is_mixing, mixing_gcd, Verdict};
use sgap_core::language::{
    count_blocks, periodic_points_bruteforce, verify_exceptional_pair_conjugacy, zeta_series,
};
use sgap_core::{Error, Rational};

const T: Verdict = Verdict::True;
const F: Verdict = Verdict::False;
const U: Verdict = Verdict::Unknown;

#[test]
fn criterion_1_classification_corpus() {
    let start = Instant::now();
    // sft, sofic, aft, proper_pft, mixing, totally_transitive, almost_specified, synchronized
    let table: [(&str, [Verdict; 8]); 12] = [
        ("delta:0;1", [T, T, T, F, T, T, T, T]),
        ("finite:0", [T, T, T, F, T, T, T, T]),
        ("finite:0,2", [T, T, T, F, T, T, T, T]),
        ("finite:0,3", [T, T, T, F, T, T, T, T]),
        ("finite:1,3", [T, T, T, F, F, F, T, T]),
        ("finite:2,5", [T, T, T, F, F, F, T, T]),
        ("delta:1;2", [F, T, T, T, F, F, T, T]),
        ("delta:2;3", [F, T, T, T, F, F, T, T]),
        ("delta:1;1", [T, T, T, F, T, T, T, T]),
        ("delta:2;1", [T, T, T, F, T, T, T, T]),
        ("delta:1;1,2", [F, T, F, F, T, T, T, T]),
        ("family:squares,horizon=10000", [U, U, U, U, T, T, F, T]),
    ];
    let mut failures = Vec::new();
    for (spec, expected) in table {
        let c = classify(&g(spec));
        for ((name, got), want) in c.verdicts().into_iter().zip(expected) {
            if got != want {
                failures.push(format!("{spec}: {name} = {got}, expected {want}"));
            }
        }
        if !c.is_consistent() {
            failures.push(format!("{spec}: inconsistent classification"));
        }
    }
    report("1", &failures, start.elapsed(), 1.0);
}

#[test]
fn criterion_2_entropy_values() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let tol = 1e-12;
    let lam = |s: &str| -> f64 { entropy::<f64>(&g(s), tol).unwrap().lambda };
    let checks = [
        ("delta:0;1", 2.0, tol),
        ("delta:1;1", (1.0 + 5f64.sqrt()) / 2.0, 1e-10),
        ("delta:1;2", 2f64.sqrt(), 1e-10),
    ];
    for (s, want, within) in checks {
        let got = lam(s);
        if (got - want).abs() > within {
            failures.push(format!("{s}: lambda = {got}, expected {want} ± {within}"));
        }
    }
    for (s, set) in sofic_corpus() {
        let e: Entropy<f64> = entropy(&set, tol).unwrap();
        let r: f64 = spectral_radius(&fischer_cover(&set).unwrap(), 1e-14).unwrap();
        if (e.lambda - r).abs() >= 1e-6 {
            failures.push(format!("{s}: gap equation {} vs spectral radius {r}", e.lambda));
        }
    }
    report("2 (entropy values)", &failures, start.elapsed(), 1.0);
}

#[test]
fn criterion_2_block_count_estimate() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let n = 20;
    for (s, set) in corpus() {
        let h = if set.is_sampled() {
            // squares: the bracket from 30 elements pins h far below 0.05
            let b = entropy_bounds::<f64>(&set, 30, 1e-12).unwrap();
            (b.lo + b.hi) / 2.0
        } else {
            entropy::<f64>(&set, 1e-12).unwrap().h
        };
        let est = (count_blocks(&set, n).unwrap() as f64).ln() / n as f64;
        if (est - h).abs() > 0.05 {
            failures.push(format!("{s}: (1/{n}) log |B_{n}| = {est:.4}, h = {h:.4}, gap {:.4}", est - h));
        }
    }
    report("2 (block-count estimate)", &failures, start.elapsed(), 1.0);
}

#[test]
fn criterion_3_zeta_and_periodic_points() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (s, set) in sofic_corpus() {
        let z = zeta_series(&set, 14).unwrap();
        for n in 1..=14 {
            let brute = periodic_points_bruteforce(&set, n).unwrap() as i128;
            if z.p[n - 1] != brute {
                failures.push(format!("{s}: p_{n} closed form {} vs enumeration {brute}", z.p[n - 1]));
            }
        }
    }
    for n in 1..=4 {
        let a = zeta_series(&g(&format!("finite:0,{n}")), 20).unwrap();
        let b = zeta_series(&g(&format!("delta:{n};1")), 20).unwrap();
        if a.p != b.p {
            failures.push(format!("pair n = {n}: p-vectors differ"));
        }
    }
    let members = sofic_corpus();
    for (i, (sa, a)) in members.iter().enumerate() {
        for (sb, b) in &members[i + 1..] {
            if are_conjugate(a, b).unwrap().is_conjugate() {
                continue;
            }
            let (qa, qb) = (zeta_series(a, 10).unwrap().q, zeta_series(b, 10).unwrap().q);
            if qa == qb {
                failures.push(format!("{sa} and {sb}: q_1..q_10 agree"));
            }
        }
    }
    report("3", &failures, start.elapsed(), 30.0);
}

#[test]
fn criterion_4_conjugacy_and_code() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=3 {
        let r = verify_exceptional_pair_conjugacy(n, 10).unwrap();
        if !r.passed {
            failures.push(format!("code n = {n}: {:?}", r.counterexample));
        }
    }
    let members = sofic_corpus();
    for (sa, a) in &members {
        for (sb, b) in &members {
            let conj = are_conjugate(a, b).unwrap().is_conjugate();
            let same_zeta = zeta_series(a, 20).unwrap().p == zeta_series(b, 20).unwrap().p;
            if conj != same_zeta {
                failures.push(format!("{sa} vs {sb}: conjugate {conj}, equal zeta {same_zeta}"));
            }
        }
    }
    report("4", &failures, start.elapsed(), 10.0);
}

#[test]
fn criterion_5_cover_correctness() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (s, want) in [("delta:1;2", 2), ("finite:0,2", 3), ("delta:2;1", 3)] {
        let got = fischer_cover(&g(s)).unwrap().states;
        if got != want {
            failures.push(format!("{s}: {got} states, expected {want}"));
        }
    }
    for (s, set) in sofic_corpus() {
        let cover = fischer_cover(&set).unwrap();
        if !graph_language_check(&cover, &set, 12).unwrap() {
            failures.push(format!("{s}: path labels differ from the language at length 12"));
        }
        let (p, _) = period_and_classes(&cover).unwrap();
        if (p == 1) != is_mixing(&set).is_true() {
            failures.push(format!("{s}: period {p} but mixing is {}", is_mixing(&set)));
        }
        let meta = cover.meta.unwrap();
        let delay = left_closing_delay(&cover, default_max_delay(&meta));
        let aft = is_aft(&set).is_true();
        match delay {
            Some(d) if !aft => failures.push(format!("{s}: delay {d} for a non-AFT set")),
            None if aft => failures.push(format!("{s}: AFT but no delay found")),
            Some(d) if d > delay_bound(&meta) => {
                failures.push(format!("{s}: delay {d} above bound {}", delay_bound(&meta)))
            }
            _ => {}
        }
    }
    report("5", &failures, start.elapsed(), 10.0);
}

#[test]
fn criterion_6_real_line_bijection() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for q in 1i128..=1000 {
        for p in 0..=10 * q {
            if num_integer::Integer::gcd(&p, &q) != 1 {
                continue;
            }
            if p == 1 {
                continue; // 1/n, checked below
            }
            let exact = ExactReal::Rational(Rational::new(p, q));
            checked += 1;
            let back = gapset_of_real(&exact).and_then(|set| real_of_gapset(&set)).map(|(_, v)| v);
            if back != Ok(Some(exact.clone())) {
                failures.push(format!("{p}/{q}: round trip gave {back:?}"));
                if failures.len() > 10 {
                    break;
                }
            }
        }
    }
    for n in 1..=10u64 {
        let e = gapset_of_real(&ExactReal::Rational(Rational::new(1, n as i128)));
        let want = Error::ExcludedPoint { n, hint: format!("delta:{n};1") };
        if e.as_ref().err() != Some(&want) {
            failures.push(format!("1/{n}: got {e:?}"));
        }
    }
    let quadratic = [
        QuadraticSurd::new(1, 1, 2, 5).unwrap(),
        QuadraticSurd::new(3, 1, 2, 5).unwrap(),
        QuadraticSurd::new(0, 1, 1, 2).unwrap(),
        QuadraticSurd::new(0, 1, 1, 3).unwrap(),
        QuadraticSurd::new(0, 1, 1, 7).unwrap(),
        QuadraticSurd::new(-1, 1, 2, 5).unwrap(),
    ];
    for s in quadratic {
        let x = ExactReal::QuadraticSurd(s);
        let back = gapset_of_real(&x).and_then(|set| real_of_gapset(&set)).map(|(_, v)| v);
        if back != Ok(Some(x.clone())) {
            failures.push(format!("{}: round trip gave {back:?}", s.pretty()));
        }
    }
    for (s, set) in sofic_corpus() {
        if !set.is_infinite() {
            continue;
        }
        let (_, value) = real_of_gapset(&set).unwrap();
        if gapset_of_real(&value.unwrap()).as_ref() != Ok(&set) {
            failures.push(format!("{s}: quadratic round trip failed"));
        }
    }
    println!("  {checked} rationals checked");
    report("6", &failures, start.elapsed(), 5.0);
}

#[test]
fn criterion_7_density_and_perturbation() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let stats = survey(10_000, 64, 42).unwrap();
    println!("  mixing frequency {:.4} over {} admitted samples", stats.mixing_frequency, stats.admitted);
    if stats.mixing_frequency < 0.99 {
        failures.push(format!("mixing frequency {} < 0.99", stats.mixing_frequency));
    }
    if survey(10_000, 64, 42).unwrap() != stats {
        failures.push("survey not deterministic".into());
    }
    let odds: CFNumber = "[1;(2)]".parse().unwrap();
    let x = odds.value().unwrap().to_f64();
    let mut seen = std::collections::HashSet::new();
    let mut last_distance = f64::INFINITY;
    for n in 1..=20 {
        let y = match nonmixing_perturbation(&odds, n) {
            Ok(y) => y,
            Err(e) => {
                failures.push(format!("N = {n}: {e}"));
                continue;
            }
        };
        let set = sgap_core::cfrac::gapset_of_cf(&y).unwrap();
        if mixing_gcd(&set).gcd == 1 {
            failures.push(format!("N = {n}: {y} is mixing"));
        }
        if (0..n).any(|i| y.digit(i) != odds.digit(i)) {
            failures.push(format!("N = {n}: {y} differs before digit {n}"));
        }
        let distance = (y.value().unwrap().to_f64() - x).abs();
        if !(distance < last_distance) {
            failures.push(format!("N = {n}: distance {distance:e} did not shrink"));
        }
        last_distance = distance;
        seen.insert(y);
    }
    if seen.len() != 20 {
        failures.push(format!("{} distinct neighbours, expected 20", seen.len()));
    }
    report("7", &failures, start.elapsed(), 60.0);
}

#[test]
fn criterion_8_monotone_bounds() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let sq = g("family:squares,horizon=10000");
    let ks: Vec<usize> = (2..=10).collect();
    let hs: Vec<f64> = entropy_truncations(&sq, &ks, 1e-12).unwrap();
    if hs.windows(2).any(|w| w[1] < w[0]) {
        failures.push(format!("truncations not nondecreasing: {hs:?}"));
    }
    let bounds: Vec<_> = ks.iter().map(|&k| entropy_bounds::<f64>(&sq, k, 1e-12).unwrap()).collect();
    for w in bounds.windows(2) {
        if w[1].lo < w[0].lo || w[1].hi > w[0].hi {
            failures.push(format!("k = {}: [{}, {}] not inside [{}, {}]", w[1].k, w[1].lo, w[1].hi, w[0].lo, w[0].hi));
        }
    }
    let (w3, w10) = (bounds[1].width(), bounds[8].width());
    if !(w10 < w3) {
        failures.push(format!("width at k=10 ({w10}) not below width at k=3 ({w3})"));
    }
    report("8", &failures, start.elapsed(), 5.0);
}
