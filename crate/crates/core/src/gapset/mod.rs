//! Finite descriptions of gap sets `S ⊆ ℕ₀` and their difference sequences.
//!
//! A gap set is stored in one of three forms:
//!
//! - [`GapSet::Finite`]: the elements themselves.
//! - [`GapSet::EventuallyPeriodic`]: the difference sequence `Δ(S)`, with
//!   `d₀ = s₀` and `dₙ = sₙ − sₙ₋₁`, written as a pre-period followed by a
//!   repeating block.
//! - [`GapSet::Sampled`]: a finite prefix of an infinite set generated by a
//!   known family, with advisory tail metadata.
//!
//! Finite and eventually periodic sets have a canonical form (see
//! [`GapSet::canonicalize`]) under which structural equality coincides with
//! equality of the denoted sets.

mod classify;
mod parse;

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::{Error, Gap, Result};

pub use classify::{
    are_conjugate, classify, forbidden_words, is_aft, is_almost_specified, is_mixing,
    is_proper_pft, is_sft, is_sofic, is_synchronized, is_totally_transitive, mixing_gcd,
    Classification, Conjugacy, MixingGcd, Verdict,
};
pub use parse::GRAMMAR;

/// Largest horizon accepted for a generated family.
pub const MAX_FAMILY_HORIZON: Gap = 50_000_000;

/// A finitely represented gap set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GapSet {
    /// A finite, strictly increasing, nonempty list of elements.
    Finite(Vec<Gap>),
    /// `Δ(S) = d₀, …, d_{k−1}, (m₁, …, m_l)^∞`.
    ///
    /// `pre` always holds at least `d₀`; entries after `d₀` and all period
    /// entries are positive.
    EventuallyPeriodic { pre: Vec<Gap>, period: Vec<Gap> },
    /// The elements of an infinite set up to `tail.horizon`.
    Sampled { prefix: Vec<Gap>, tail: TailMeta },
}

/// What is known about a sampled set beyond its prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TailMeta {
    pub delta_bounded: DeltaBound,
    /// Membership of every `n ≤ horizon` is determined by the prefix.
    pub horizon: Gap,
    pub family: Option<Family>,
}

/// Whether the difference sequence of a sampled set is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DeltaBound {
    Yes(Gap),
    No,
    Unknown,
}

/// Generators for the built-in sampled families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `{0, 1, 4, 9, …}`
    Squares,
    /// `{2, 3, 5, 7, …}`
    Primes,
    /// `{1, 2, 4, 8, …}`
    Powers2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Squares => "squares",
            Family::Primes => "primes",
            Family::Powers2 => "powers2",
        }
    }

    /// All members `≤ horizon`, increasing.
    pub fn generate(self, horizon: Gap) -> Vec<Gap> {
        match self {
            Family::Squares => (0..)
                .map(|i: Gap| i * i)
                .take_while(|&s| s <= horizon)
                .collect(),
            Family::Powers2 => (0..64)
                .map(|e| 1u64 << e)
                .take_while(|&s| s <= horizon)
                .collect(),
            Family::Primes => {
                let n = horizon as usize;
                if n < 2 {
                    return Vec::new();
                }
                let mut composite = vec![false; n + 1];
                let mut out = Vec::new();
                for i in 2..=n {
                    if composite[i] {
                        continue;
                    }
                    out.push(i as Gap);
                    let mut j = i * i;
                    while j <= n {
                        composite[j] = true;
                        j += i;
                    }
                }
                out
            }
        }
    }

    /// Gaps of all three families grow without bound.
    pub fn default_bound(self) -> DeltaBound {
        DeltaBound::No
    }
}

impl GapSet {
    /// Validated finite set.
    pub fn finite(elements: Vec<Gap>) -> Result<Self> {
        let g = GapSet::Finite(elements);
        g.validate()?;
        Ok(g)
    }

    /// Validated, canonical eventually periodic set.
    pub fn eventually_periodic(pre: Vec<Gap>, period: Vec<Gap>) -> Result<Self> {
        let g = GapSet::EventuallyPeriodic { pre, period };
        g.validate()?;
        Ok(g.canonicalize())
    }

    /// `ℕ₀`, the gap set of the full 2-shift.
    pub fn naturals() -> Self {
        GapSet::EventuallyPeriodic {
            pre: vec![0],
            period: vec![1],
        }
    }

    /// Prefix of a family up to `horizon`.
    pub fn family(family: Family, horizon: Gap, delta_bounded: Option<DeltaBound>) -> Result<Self> {
        if horizon > MAX_FAMILY_HORIZON {
            return Err(Error::InvalidArgument(format!(
                "family horizon {horizon} exceeds {MAX_FAMILY_HORIZON}"
            )));
        }
        let g = GapSet::Sampled {
            prefix: family.generate(horizon),
            tail: TailMeta {
                delta_bounded: delta_bounded.unwrap_or(family.default_bound()),
                horizon,
                family: Some(family),
            },
        };
        g.validate()?;
        Ok(g)
    }

    /// Finite set with the given difference sequence.
    pub fn from_deltas(deltas: &[Gap]) -> Result<Self> {
        let mut acc: Gap = 0;
        let mut out = Vec::with_capacity(deltas.len());
        for (i, &d) in deltas.iter().enumerate() {
            if i > 0 && d == 0 {
                return Err(Error::NotIncreasing);
            }
            acc = acc.checked_add(d).ok_or(Error::Overflow)?;
            out.push(acc);
        }
        GapSet::finite(out)
    }

    /// Checks the structural invariants of the representation.
    pub fn validate(&self) -> Result<()> {
        match self {
            GapSet::Finite(s) => {
                if s.is_empty() {
                    return Err(Error::EmptySet);
                }
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::NotIncreasing);
                }
            }
            GapSet::EventuallyPeriodic { pre, period } => {
                if pre.is_empty() || period.is_empty() {
                    return Err(Error::EmptySet);
                }
                if pre[1..].contains(&0) || period.contains(&0) {
                    return Err(Error::ZeroPeriodEntry);
                }
                pre.iter()
                    .chain(period)
                    .try_fold(0u64, |acc, &d| acc.checked_add(d))
                    .ok_or(Error::Overflow)?;
            }
            GapSet::Sampled { prefix, tail } => {
                if prefix.is_empty() {
                    return Err(Error::EmptySet);
                }
                if prefix.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::NotIncreasing);
                }
                if prefix.last().is_some_and(|&m| m > tail.horizon) {
                    return Err(Error::InvalidArgument(
                        "sampled prefix extends past its horizon".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Primitive period and minimal pre-period; other forms are returned as is.
    ///
    /// The pre-period never shrinks below one entry, so `d₀` always stays in
    /// `pre`.
    pub fn canonicalize(&self) -> GapSet {
        match self {
            GapSet::EventuallyPeriodic { pre, period } => {
                let mut pre = pre.clone();
                let mut period = primitive_root(period).to_vec();
                while pre.len() > 1 && pre.last() == period.last() {
                    pre.pop();
                    period.rotate_right(1);
                }
                GapSet::EventuallyPeriodic { pre, period }
            }
            other => other.clone(),
        }
    }

    pub fn is_sampled(&self) -> bool {
        matches!(self, GapSet::Sampled { .. })
    }

    /// Eventually periodic and sampled sets denote infinite sets.
    pub fn is_infinite(&self) -> bool {
        !matches!(self, GapSet::Finite(_))
    }

    /// Number of elements of a finite set.
    // gap sets are never empty
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<usize> {
        match self {
            GapSet::Finite(s) => Some(s.len()),
            _ => None,
        }
    }

    /// Largest element of a finite set.
    pub fn max_element(&self) -> Option<Gap> {
        match self {
            GapSet::Finite(s) => s.last().copied(),
            _ => None,
        }
    }

    /// `Δ(S)` as a (possibly infinite) stream.
    pub fn deltas(&self) -> Deltas<'_> {
        Deltas { set: self, index: 0 }
    }

    /// Elements in increasing order (infinite for eventually periodic sets).
    pub fn iter(&self) -> impl Iterator<Item = Gap> + '_ {
        self.deltas().scan(0u64, |acc, d| {
            *acc += d;
            Some(*acc)
        })
    }

    /// The first `n` elements.
    pub fn elements(&self, n: usize) -> Result<Vec<Gap>> {
        let out: Vec<Gap> = self.iter().take(n).collect();
        if out.len() < n {
            return Err(Error::HorizonExceeded {
                requested: n as Gap,
                available: out.len() as Gap,
            });
        }
        Ok(out)
    }

    /// Membership test. Sampled sets only answer up to their horizon.
    pub fn contains(&self, x: Gap) -> Result<bool> {
        match self {
            GapSet::Finite(s) => Ok(s.binary_search(&x).is_ok()),
            GapSet::Sampled { prefix, tail } => {
                if x > tail.horizon {
                    Err(Error::HorizonExceeded {
                        requested: x,
                        available: tail.horizon,
                    })
                } else {
                    Ok(prefix.binary_search(&x).is_ok())
                }
            }
            GapSet::EventuallyPeriodic { pre, period } => {
                let base = pre.iter().sum::<Gap>();
                if x <= base {
                    return Ok(self.iter().take(pre.len()).any(|s| s == x));
                }
                let p: Gap = period.iter().sum();
                let offset = (x - base - 1) % p + 1;
                let mut c = 0;
                for &m in period {
                    c += m;
                    if c == offset {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    /// Whether some element is `≥ r` (always true for infinite sets).
    pub fn has_element_at_least(&self, r: Gap) -> bool {
        match self {
            GapSet::Finite(s) => s.last().is_some_and(|&m| m >= r),
            _ => true,
        }
    }

    /// `s_{k−1}`: the last element generated by the pre-period, or the
    /// maximum of a finite set.
    pub fn last_pre_element(&self) -> Option<Gap> {
        match self {
            GapSet::Finite(s) => s.last().copied(),
            GapSet::EventuallyPeriodic { pre, .. } => Some(pre.iter().sum()),
            GapSet::Sampled { .. } => None,
        }
    }

    /// `P = m₁ + … + m_l`.
    pub fn period_sum(&self) -> Option<Gap> {
        match self {
            GapSet::EventuallyPeriodic { period, .. } => Some(period.iter().sum()),
            _ => None,
        }
    }

    /// Finite set of the first `k` elements.
    pub fn truncate(&self, k: usize) -> Result<GapSet> {
        if k == 0 {
            return Err(Error::EmptySet);
        }
        GapSet::finite(self.elements(k)?)
    }
}

/// Iterator over `Δ(S)`.
#[derive(Debug, Clone)]
pub struct Deltas<'a> {
    set: &'a GapSet,
    index: usize,
}

impl Iterator for Deltas<'_> {
    type Item = Gap;

    fn next(&mut self) -> Option<Gap> {
        let i = self.index;
        self.index += 1;
        match self.set {
            GapSet::Finite(s) | GapSet::Sampled { prefix: s, .. } => {
                let cur = *s.get(i)?;
                Some(if i == 0 { cur } else { cur - s[i - 1] })
            }
            GapSet::EventuallyPeriodic { pre, period } => Some(if i < pre.len() {
                pre[i]
            } else {
                period[(i - pre.len()) % period.len()]
            }),
        }
    }
}

/// Shortest block whose repetition yields `xs`.
pub(crate) fn primitive_root<T: PartialEq>(xs: &[T]) -> &[T] {
    let n = xs.len();
    for q in 1..n {
        if n.is_multiple_of(q) && xs.chunks(q).all(|c| c == &xs[..q]) {
            return &xs[..q];
        }
    }
    xs
}

pub(crate) fn gcd_all(it: impl IntoIterator<Item = Gap>) -> Gap {
    it.into_iter().fold(0, |a, b| a.gcd(&b))
}

fn join(xs: &[Gap]) -> String {
    xs.iter().map(Gap::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapSet::Finite(s) => write!(f, "finite:{}", join(s)),
            GapSet::EventuallyPeriodic { pre, period } => {
                write!(f, "delta:{};{}", join(pre), join(period))
            }
            GapSet::Sampled { prefix, tail } => {
                match tail.family {
                    Some(fam) => write!(f, "family:{},horizon={}", fam.name(), tail.horizon)?,
                    None => write!(f, "sampled:{},horizon={}", join(prefix), tail.horizon)?,
                }
                match tail.delta_bounded {
                    DeltaBound::Yes(m) => write!(f, ",bounded=yes:{m}"),
                    DeltaBound::No => write!(f, ",bounded=no"),
                    DeltaBound::Unknown => Ok(()),
                }
            }
        }
    }
}
