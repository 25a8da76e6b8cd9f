//! Dynamical properties that can be read directly off a gap set.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{gcd_all, DeltaBound, GapSet};
use crate::language::Word;
use crate::{Error, Gap, Result};

/// Three-valued verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        }
    }

    pub fn decided(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "true" => Ok(Verdict::True),
            "false" => Ok(Verdict::False),
            "unknown" => Ok(Verdict::Unknown),
            _ => Err(Error::syntax(s, "expected true, false or unknown")),
        }
    }
}

/// Verdicts for every property together with human-readable certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub sft: Verdict,
    pub sofic: Verdict,
    pub aft: Verdict,
    pub proper_pft: Verdict,
    pub mixing: Verdict,
    pub totally_transitive: Verdict,
    pub almost_specified: Verdict,
    pub synchronized: Verdict,
    pub witnesses: BTreeMap<String, String>,
}

impl Classification {
    /// Field names in serialization order, paired with their verdicts.
    pub fn verdicts(&self) -> [(&'static str, Verdict); 8] {
        [
            ("sft", self.sft),
            ("sofic", self.sofic),
            ("aft", self.aft),
            ("proper_pft", self.proper_pft),
            ("mixing", self.mixing),
            ("totally_transitive", self.totally_transitive),
            ("almost_specified", self.almost_specified),
            ("synchronized", self.synchronized),
        ]
    }

    pub fn get(&self, name: &str) -> Option<Verdict> {
        self.verdicts()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    /// Checks the cross-implications between properties.
    pub fn is_consistent(&self) -> bool {
        let implies = |a: Verdict, b: Verdict| a != Verdict::True || b == Verdict::True;
        implies(self.sft, self.sofic)
            && implies(self.aft, self.sofic)
            && (self.proper_pft != Verdict::True
                || (self.aft == Verdict::True
                    && self.mixing == Verdict::False
                    && self.sft == Verdict::False))
            && self.totally_transitive == self.mixing
            && self.synchronized == Verdict::True
    }
}

/// `gcd{s + 1 : s ∈ S}`; `exact` is false when only a prefix was inspected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixingGcd {
    pub gcd: Gap,
    pub exact: bool,
}

pub fn mixing_gcd(g: &GapSet) -> MixingGcd {
    match g {
        GapSet::Finite(s) => MixingGcd {
            gcd: gcd_all(s.iter().map(|x| x + 1)),
            exact: true,
        },
        GapSet::EventuallyPeriodic { pre, period } => {
            let head = g.iter().take(pre.len() + period.len()).map(|x| x + 1);
            let p: Gap = period.iter().sum();
            MixingGcd {
                gcd: gcd_all(head.chain(std::iter::once(p))),
                exact: true,
            }
        }
        GapSet::Sampled { prefix, .. } => MixingGcd {
            gcd: gcd_all(prefix.iter().map(|x| x + 1)),
            exact: false,
        },
    }
}

/// Finite type iff `S` is finite or cofinite.
pub fn is_sft(g: &GapSet) -> Verdict {
    match g {
        GapSet::Finite(_) => Verdict::True,
        GapSet::EventuallyPeriodic { period, .. } => Verdict::from(is_unit_period(period)),
        GapSet::Sampled { .. } => Verdict::Unknown,
    }
}

/// Sofic iff `Δ(S)` is eventually periodic.
pub fn is_sofic(g: &GapSet) -> Verdict {
    if g.is_sampled() {
        Verdict::Unknown
    } else {
        Verdict::True
    }
}

/// Almost finite type iff `Δ(S)` is eventually constant.
pub fn is_aft(g: &GapSet) -> Verdict {
    match g {
        GapSet::Finite(_) => Verdict::True,
        GapSet::EventuallyPeriodic { period, .. } => Verdict::from(period.len() == 1),
        GapSet::Sampled { .. } => Verdict::Unknown,
    }
}

/// Mixing iff `gcd{s + 1 : s ∈ S} = 1`.
pub fn is_mixing(g: &GapSet) -> Verdict {
    let m = mixing_gcd(g);
    match (m.gcd == 1, m.exact) {
        (true, _) => Verdict::True,
        (false, true) => Verdict::False,
        (false, false) => Verdict::Unknown,
    }
}

/// Coincides with mixing for S-gap shifts.
pub fn is_totally_transitive(g: &GapSet) -> Verdict {
    is_mixing(g)
}

/// Proper periodic finite type iff not SFT, AFT and not mixing.
pub fn is_proper_pft(g: &GapSet) -> Verdict {
    match (
        is_sft(g).decided(),
        is_aft(g).decided(),
        is_mixing(g).decided(),
    ) {
        (Some(sft), Some(aft), Some(mixing)) => Verdict::from(!sft && aft && !mixing),
        _ => Verdict::Unknown,
    }
}

/// Almost specified iff `Δ(S)` is bounded.
///
/// Finite sets count as almost specified: any gap of length up to `max S`
/// can be bridged by a word of length at most `max S + 1`.
pub fn is_almost_specified(g: &GapSet) -> Verdict {
    match g {
        GapSet::Finite(_) | GapSet::EventuallyPeriodic { .. } => Verdict::True,
        GapSet::Sampled { tail, .. } => match tail.delta_bounded {
            DeltaBound::Yes(_) => Verdict::True,
            DeltaBound::No => Verdict::False,
            DeltaBound::Unknown => Verdict::Unknown,
        },
    }
}

/// Every S-gap shift is synchronized; `1` is an intrinsically synchronizing word.
pub fn is_synchronized(_g: &GapSet) -> (Verdict, Word) {
    (Verdict::True, Word::from_bits(1, 1))
}

fn is_unit_period(period: &[Gap]) -> bool {
    period == [1]
}

fn list(xs: impl IntoIterator<Item = Gap>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Aggregates all predicates, with a witness string per property.
pub fn classify(g: &GapSet) -> Classification {
    let mut witnesses = BTreeMap::new();
    let mut witness = |k: &str, v: String| {
        witnesses.insert(k.to_string(), v);
    };

    let horizon = match g {
        GapSet::Sampled { tail, .. } => Some(tail.horizon),
        _ => None,
    };

    let sft = is_sft(g);
    witness(
        "sft",
        match g {
            GapSet::Finite(s) => format!("finite set, max S = {}", s[s.len() - 1]),
            GapSet::EventuallyPeriodic { period, .. } if is_unit_period(period) => {
                let top = g.last_pre_element().unwrap_or(0);
                let missing: Vec<Gap> = (0..top)
                    .filter(|&x| !g.contains(x).unwrap_or(true))
                    .collect();
                format!("cofinite, complement {{{}}}", list(missing))
            }
            GapSet::EventuallyPeriodic { .. } => "neither finite nor cofinite".to_string(),
            GapSet::Sampled { .. } => "a finite prefix cannot certify finite type".to_string(),
        },
    );

    let sofic = is_sofic(g);
    witness(
        "sofic",
        match g {
            GapSet::Finite(_) => "finite set (finite type)".to_string(),
            GapSet::EventuallyPeriodic { period, .. } => {
                format!("Δ(S) eventually periodic with period ({})", list(period.iter().copied()))
            }
            GapSet::Sampled { .. } => format!(
                "no eventually periodic pattern certified within horizon {}",
                horizon.unwrap_or(0)
            ),
        },
    );

    let aft = is_aft(g);
    witness(
        "aft",
        match g {
            GapSet::Finite(_) => "finite type presentations are bi-closing".to_string(),
            GapSet::EventuallyPeriodic { period, .. } if period.len() == 1 => {
                format!("Δ(S) eventually constant ({})", period[0])
            }
            GapSet::EventuallyPeriodic { period, .. } => {
                format!("Δ(S) has period length {} > 1", period.len())
            }
            GapSet::Sampled { .. } => "eventual constancy cannot be certified from a prefix".to_string(),
        },
    );

    let mixing = is_mixing(g);
    let m = mixing_gcd(g);
    witness(
        "mixing",
        if m.exact {
            format!("gcd{{s+1 : s in S}} = {}", m.gcd)
        } else {
            format!("gcd over sampled prefix = {}", m.gcd)
        },
    );

    let totally_transitive = is_totally_transitive(g);
    witness(
        "totally_transitive",
        "coincides with mixing for S-gap shifts".to_string(),
    );

    let proper_pft = is_proper_pft(g);
    witness(
        "proper_pft",
        match (sft, aft, mixing, proper_pft) {
            (_, _, _, Verdict::True) => "AFT, non-mixing and not finite type".to_string(),
            (Verdict::True, _, _, _) => "finite type".to_string(),
            (_, Verdict::False, _, _) => "not AFT".to_string(),
            (_, _, Verdict::True, Verdict::False) => "mixing".to_string(),
            _ => "requires decided SFT, AFT and mixing verdicts".to_string(),
        },
    );

    let almost_specified = is_almost_specified(g);
    witness(
        "almost_specified",
        match g {
            GapSet::Finite(s) => format!("bridging length at most {}", s[s.len() - 1] + 1),
            GapSet::EventuallyPeriodic { .. } => {
                let bound = g.deltas().skip(1).take(64).max().unwrap_or(0);
                format!("Δ(S) bounded by {bound}")
            }
            GapSet::Sampled { tail, .. } => match tail.delta_bounded {
                DeltaBound::Yes(m) => format!("declared bound {m} on Δ(S)"),
                DeltaBound::No => "Δ(S) declared unbounded".to_string(),
                DeltaBound::Unknown => "no bound declared for Δ(S)".to_string(),
            },
        },
    );

    let (synchronized, word) = is_synchronized(g);
    witness("synchronized", format!("intrinsically synchronizing word {word}"));

    Classification {
        sft,
        sofic,
        aft,
        proper_pft,
        mixing,
        totally_transitive,
        almost_specified,
        synchronized,
        witnesses,
    }
}

/// Minimal forbidden words of length at most `max_len`.
///
/// For finite and cofinite sets the complete (finite) list is returned
/// regardless of `max_len`. Sampled sets are only expanded up to their horizon.
pub fn forbidden_words(g: &GapSet, max_len: usize) -> Vec<Word> {
    let gap_word = |n: Gap| {
        let mut w = vec![1u8];
        w.extend(std::iter::repeat_n(0, n as usize));
        w.push(1);
        Word::from_symbols(w)
    };
    let mut out: Vec<Word> = match g {
        GapSet::Finite(s) => {
            let top = s[s.len() - 1];
            let mut v: Vec<Word> = (0..=top)
                .filter(|x| s.binary_search(x).is_err())
                .map(gap_word)
                .collect();
            v.push(Word::zeros(top as usize + 1));
            v
        }
        GapSet::EventuallyPeriodic { period, .. } if is_unit_period(period) => {
            let top = g.last_pre_element().unwrap_or(0);
            (0..top)
                .filter(|&x| !g.contains(x).unwrap_or(true))
                .map(gap_word)
                .collect()
        }
        GapSet::EventuallyPeriodic { .. } => (0..max_len.saturating_sub(1) as Gap)
            .filter(|&x| x + 2 <= max_len as Gap && !g.contains(x).unwrap_or(true))
            .map(gap_word)
            .collect(),
        GapSet::Sampled { tail, .. } => (0..max_len.saturating_sub(1) as Gap)
            .filter(|&x| x <= tail.horizon && x + 2 <= max_len as Gap)
            .filter(|&x| g.contains(x) == Ok(false))
            .map(gap_word)
            .collect(),
    };
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Outcome of the conjugacy test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjugacy {
    /// The two descriptions denote the same set.
    Identical,
    /// `{0, n}` against `{n, n+1, …}`; the code in
    /// [`crate::language::exceptional_pair_code`] realizes the conjugacy.
    ExceptionalPair { n: Gap },
    NotConjugate,
}

impl Conjugacy {
    pub fn is_conjugate(self) -> bool {
        !matches!(self, Conjugacy::NotConjugate)
    }

    pub fn case(self) -> &'static str {
        match self {
            Conjugacy::Identical => "identical",
            Conjugacy::ExceptionalPair { .. } => "exceptional-pair",
            Conjugacy::NotConjugate => "not-conjugate",
        }
    }
}

/// Distinct gap sets give conjugate shifts only for the pair
/// `{0, n}` / `{n, n+1, …}`.
pub fn are_conjugate(a: &GapSet, b: &GapSet) -> Result<Conjugacy> {
    if a.is_sampled() || b.is_sampled() {
        return Err(Error::Undecidable("conjugacy needs fully represented gap sets"));
    }
    a.validate()?;
    b.validate()?;
    let (a, b) = (a.canonicalize(), b.canonicalize());
    if a == b {
        return Ok(Conjugacy::Identical);
    }
    let pair = |x: &GapSet, y: &GapSet| match (x, y) {
        (GapSet::Finite(s), GapSet::EventuallyPeriodic { pre, period })
            if s.len() == 2 && s[0] == 0 && s[1] >= 1 =>
        {
            (pre.as_slice() == [s[1]] && is_unit_period(period)).then_some(s[1])
        }
        _ => None,
    };
    Ok(match pair(&a, &b).or_else(|| pair(&b, &a)) {
        Some(n) => Conjugacy::ExceptionalPair { n },
        None => Conjugacy::NotConjugate,
    })
}
