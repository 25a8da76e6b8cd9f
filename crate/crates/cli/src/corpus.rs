//! Manifest runner: classification, entropy and zeta cross-checks per item.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sgap_core::cover::{fischer_cover, spectral_radius};
use sgap_core::entropy::{entropy, entropy_bounds};
use sgap_core::gapset::classify;
use sgap_core::language::{periodic_points_bruteforce, zeta_series};
use sgap_core::GapSet;

use crate::Failure;

/// The twelve-member corpus shipped with the binary.
pub const BUNDLED_MANIFEST: &str = include_str!("../corpus/corpus.json");

const TOL: f64 = 1e-12;
/// Agreement required between the gap equation and the cover.
const CROSS_TOL: f64 = 1e-6;
/// Agreement required with an expected entropy from the manifest.
const EXPECT_TOL: f64 = 1e-9;
const ZETA_ORDER: usize = 10;
/// Prefix size for the entropy bracket of sampled sets.
const BRACKET_K: usize = 20;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    items: Vec<Item>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Item {
    set: String,
    #[serde(default)]
    expect: BTreeMap<String, String>,
    /// Expected topological entropy, natural log.
    #[serde(default)]
    h: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ItemReport {
    pub set: String,
    pub pass: bool,
    pub diff: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub items: Vec<ItemReport>,
}

/// Runs every item of a JSON manifest, in manifest order.
pub(crate) fn run_manifest(text: &str) -> Result<CorpusReport, Failure> {
    let manifest: Manifest = serde_json::from_str(text)
        .map_err(|e| Failure::io("Manifest", format!("manifest parse error: {e}")))?;
    let items: Vec<ItemReport> = manifest.items.iter().map(check_item).collect();
    let passed = items.iter().filter(|r| r.pass).count();
    Ok(CorpusReport { total: items.len(), passed, failed: items.len() - passed, items })
}

fn check_item(item: &Item) -> ItemReport {
    let diff = match item.set.parse::<GapSet>() {
        Ok(g) => cross_checks(&g, item),
        Err(e) => vec![format!("parse: {e}")],
    };
    ItemReport { set: item.set.clone(), pass: diff.is_empty(), diff }
}

fn cross_checks(g: &GapSet, item: &Item) -> Vec<String> {
    let mut diff = Vec::new();
    let c = classify(g);
    for (name, want) in &item.expect {
        match c.get(name) {
            Some(got) if got.as_str() == want => {}
            Some(got) => diff.push(format!("{name}: expected {want}, got {got}")),
            None => diff.push(format!("{name}: not a classification field")),
        }
    }
    if !c.is_consistent() {
        diff.push("classification violates its implications".into());
    }
    let h = if g.is_sampled() {
        sampled_checks(g, &mut diff)
    } else {
        sofic_checks(g, &mut diff)
    };
    if let (Some(want), Some(got)) = (item.h, h) {
        if (want - got).abs() > EXPECT_TOL {
            diff.push(format!("h: expected {want}, got {got}"));
        }
    }
    diff
}

fn sofic_checks(g: &GapSet, diff: &mut Vec<String>) -> Option<f64> {
    let e = match entropy::<f64>(g, TOL) {
        Ok(e) => e,
        Err(err) => {
            diff.push(format!("entropy: {err}"));
            return None;
        }
    };
    match fischer_cover(g).and_then(|cover| spectral_radius::<f64>(&cover, 1e-14)) {
        Ok(r) if (r - e.lambda).abs() <= CROSS_TOL => {}
        Ok(r) => diff.push(format!("entropy: gap equation {} vs spectral radius {r}", e.lambda)),
        Err(err) => diff.push(format!("cover: {err}")),
    }
    match zeta_series(g, ZETA_ORDER) {
        Ok(z) => {
            for n in 1..=ZETA_ORDER {
                match periodic_points_bruteforce(g, n) {
                    Ok(b) if b as i128 == z.p[n - 1] => {}
                    Ok(b) => diff.push(format!("zeta: p_{n} closed form {} vs enumeration {b}", z.p[n - 1])),
                    Err(err) => diff.push(format!("zeta: {err}")),
                }
            }
        }
        Err(err) => diff.push(format!("zeta: {err}")),
    }
    Some(e.h)
}

fn sampled_checks(g: &GapSet, diff: &mut Vec<String>) -> Option<f64> {
    let available = g.len().unwrap_or(BRACKET_K).min(BRACKET_K);
    match entropy_bounds::<f64>(g, available, TOL) {
        Ok(b) if b.lo <= b.hi => {}
        Ok(b) => diff.push(format!("entropy bracket inverted: [{}, {}]", b.lo, b.hi)),
        Err(err) => diff.push(format!("entropy bracket: {err}")),
    }
    None
}
