//! Continued fractions and the correspondence `S ↦ x_S = [d₀; d₁, d₂, …]`.
//!
//! Finite gap sets give rationals and eventually periodic ones give
//! quadratic irrationals. The points `1/n` are left out of the image: `[0; n]`
//! would be `{0, n}`, whose shift is conjugate to that of `{n, n+1, …}`.

mod surd;
mod survey;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{CheckedMul, Signed};

use crate::gapset::{classify, mixing_gcd, primitive_root, DeltaBound, TailMeta};
use crate::{Classification, Error, Gap, GapSet, Rational, Result};

pub use surd::QuadraticSurd;
pub use survey::{survey, survey_values, SurveyStats, SURVEY_DENOMINATOR};

use surd::{floor_surd, squarefree_split, SurdField};

/// Step cap for the periodic expansion of a quadratic surd.
const MAX_SURD_STEPS: usize = 100_000;

/// `[a₀; a₁, …, a_k, (m₁, …, m_l)]`, or a known prefix of an infinite
/// expansion when `declared_infinite` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CFNumber {
    pub a0: Gap,
    pub pre: Vec<Gap>,
    pub period: Vec<Gap>,
    pub declared_infinite: Option<DeltaBound>,
}

/// An exactly represented nonnegative real.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactReal {
    Rational(Rational),
    QuadraticSurd(QuadraticSurd),
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactReal::Rational(r) => write!(f, "rat:{}/{}", r.numer(), r.denom()),
            ExactReal::QuadraticSurd(s) => write!(f, "{s}"),
        }
    }
}

impl ExactReal {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactReal::Rational(r) => *r.numer() as f64 / *r.denom() as f64,
            ExactReal::QuadraticSurd(s) => s.to_f64(),
        }
    }
}

impl CFNumber {
    /// A finite or eventually periodic expansion in canonical form.
    pub fn new(a0: Gap, pre: Vec<Gap>, period: Vec<Gap>) -> Result<Self> {
        if pre.iter().chain(&period).any(|&a| a == 0) {
            return Err(Error::InvalidArgument("partial quotients after a0 must be positive".into()));
        }
        Ok(CFNumber { a0, pre, period, declared_infinite: None }.canonical())
    }

    /// A prefix of an infinite expansion whose remaining digits are only
    /// described by `bound`.
    pub fn prefix(a0: Gap, digits: Vec<Gap>, bound: DeltaBound) -> Result<Self> {
        if digits.contains(&0) {
            return Err(Error::InvalidArgument("partial quotients after a0 must be positive".into()));
        }
        Ok(CFNumber { a0, pre: digits, period: Vec::new(), declared_infinite: Some(bound) })
    }

    pub fn is_rational(&self) -> bool {
        self.period.is_empty() && self.declared_infinite.is_none()
    }

    /// Trailing `1` folded into the previous quotient; primitive period and
    /// shortest pre-period.
    fn canonical(mut self) -> Self {
        if self.declared_infinite.is_some() {
            return self;
        }
        if self.period.is_empty() {
            if self.pre.last() == Some(&1) {
                self.pre.pop();
                match self.pre.last_mut() {
                    Some(last) => *last += 1,
                    None => self.a0 += 1,
                }
            }
            return self;
        }
        self.period = primitive_root(&self.period).to_vec();
        while !self.pre.is_empty() && self.pre.last() == self.period.last() {
            self.pre.pop();
            self.period.rotate_right(1);
        }
        self
    }

    /// Partial quotient `a_i` (`a₀` at index 0); `None` past a finite or
    /// declared prefix.
    pub fn digit(&self, i: usize) -> Option<Gap> {
        if i == 0 {
            return Some(self.a0);
        }
        let j = i - 1;
        if j < self.pre.len() {
            return Some(self.pre[j]);
        }
        if self.period.is_empty() {
            return None;
        }
        Some(self.period[(j - self.pre.len()) % self.period.len()])
    }

    /// Number of digits known explicitly (`None` for periodic expansions).
    pub fn known_digits(&self) -> Option<usize> {
        self.period.is_empty().then_some(1 + self.pre.len())
    }

    /// Exact value of a rational or periodic expansion.
    pub fn value(&self) -> Result<ExactReal> {
        if self.declared_infinite.is_some() {
            return Err(Error::Undecidable("only a prefix of the expansion is known"));
        }
        if self.period.is_empty() {
            return rational_of_digits(self.a0, &self.pre).map(ExactReal::Rational);
        }
        surd_of_cf(self).map(ExactReal::QuadraticSurd)
    }

    /// The same tail after replacing the digit at `index`.
    fn with_digit(&self, index: usize, value: Gap) -> Result<CFNumber> {
        if index == 0 {
            let mut out = self.clone();
            out.a0 = value;
            return Ok(out.canonical());
        }
        if self.period.is_empty() {
            let mut out = self.clone();
            out.pre[index - 1] = value;
            return Ok(out.canonical());
        }
        let (k, l) = (self.pre.len() + 1, self.period.len());
        let t = (index + 1).max(k);
        let mut pre: Vec<Gap> = (1..=index).map(|i| self.digit(i).unwrap()).collect();
        pre[index - 1] = value;
        pre.extend_from_slice(&self.pre[index.min(k - 1)..]);
        let period = (0..l).map(|r| self.period[(t - k + r) % l]).collect();
        CFNumber::new(self.a0, pre, period)
    }
}

impl fmt::Display for CFNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Gap]| xs.iter().map(Gap::to_string).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        if !self.pre.is_empty() {
            parts.push(join(&self.pre));
        }
        if !self.period.is_empty() {
            parts.push(format!("({})", join(&self.period)));
        }
        if self.declared_infinite.is_some() {
            parts.push("...".into());
        }
        if parts.is_empty() {
            write!(f, "[{}]", self.a0)
        } else {
            write!(f, "[{};{}]", self.a0, parts.join(","))
        }
    }
}

impl FromStr for CFNumber {
    type Err = Error;

    /// `[a0]`, `[a0;a1,a2]`, `[a0;a1,(m1,m2)]`, or `[a0;a1,a2,...]` for a
    /// prefix of unknown tail.
    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let body = s
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::syntax(input, "expected `[a0;...]`"))?;
        let num = |t: &str| {
            t.trim()
                .parse::<Gap>()
                .map_err(|_| Error::syntax(input, format!("`{}` is not a nonnegative integer", t.trim())))
        };
        let list = |t: &str| -> Result<Vec<Gap>> {
            let t = t.trim().trim_end_matches(',');
            if t.trim().is_empty() {
                Ok(Vec::new())
            } else {
                t.split(',').map(num).collect()
            }
        };
        let (head, rest) = body.split_once(';').unwrap_or((body, ""));
        let a0 = num(head)?;
        let rest = rest.trim();
        if let Some(prefix) = rest.strip_suffix("...") {
            return CFNumber::prefix(a0, list(prefix)?, DeltaBound::Unknown);
        }
        match rest.split_once('(') {
            Some((pre, per)) => {
                let per = per
                    .trim()
                    .strip_suffix(')')
                    .ok_or_else(|| Error::syntax(input, "unclosed period"))?;
                let period = list(per)?;
                if period.is_empty() {
                    return Err(Error::syntax(input, "empty period"));
                }
                CFNumber::new(a0, list(pre)?, period)
            }
            None => CFNumber::new(a0, list(rest)?, Vec::new()),
        }
    }
}

fn rational_of_digits(a0: Gap, digits: &[Gap]) -> Result<Rational> {
    let (mut p, mut p1, mut q, mut q1) = (a0 as i128, 1i128, 1i128, 0i128);
    for &a in digits {
        let a = a as i128;
        let np = a.checked_mul(p).and_then(|x| x.checked_add(p1)).ok_or(Error::Overflow)?;
        let nq = a.checked_mul(q).and_then(|x| x.checked_add(q1)).ok_or(Error::Overflow)?;
        (p1, p, q1, q) = (p, np, q, nq);
    }
    // consecutive convergents are coprime
    Ok(Rational::new_raw(p, q))
}

/// Convergent numerators and denominators `(p_n, p_{n−1}, q_n, q_{n−1})`
/// of `[m₁; m₂, …, m_l]`.
fn convergents(ms: &[Gap]) -> Result<(i128, i128, i128, i128)> {
    let (mut p, mut p1, mut q, mut q1) = (1i128, 0i128, 0i128, 1i128);
    for &m in ms {
        let m = m as i128;
        let np = m.checked_mul(p).and_then(|x| x.checked_add(p1)).ok_or(Error::Overflow)?;
        let nq = m.checked_mul(q).and_then(|x| x.checked_add(q1)).ok_or(Error::Overflow)?;
        (p1, p, q1, q) = (p, np, q, nq);
    }
    Ok((p, p1, q, q1))
}

fn surd_of_cf(cf: &CFNumber) -> Result<QuadraticSurd> {
    // y = [(m₁, …, m_l)] solves q y² + (q₁ − p) y − p₁ = 0
    let (p, p1, q, q1) = convergents(&cf.period)?;
    let b = q1 - p;
    let disc = b
        .checked_mul(b)
        .and_then(|x| x.checked_add(4i128.checked_mul(q)?.checked_mul(p1)?))
        .ok_or(Error::Overflow)?;
    let (f, d) = squarefree_split(disc);
    let mut x = SurdField {
        u: Rational::new(-b, 2 * q),
        v: Rational::new(f, 2 * q),
        d,
    };
    for &a in cf.pre.iter().rev() {
        x = x.recip()?.add_int(a as i128)?;
    }
    x = x.recip()?.add_int(cf.a0 as i128)?;
    x.to_surd()
}

/// Euclidean expansion of `r ≥ 0`, in canonical form.
pub fn cf_of_rational(r: &Rational) -> Result<CFNumber> {
    if r.is_negative() {
        return Err(Error::InvalidArgument(format!("{r} is negative")));
    }
    let (mut n, mut d) = (*r.numer(), *r.denom());
    let a0 = Integer::div_floor(&n, &d);
    (n, d) = (d, n - a0 * d);
    let mut pre = Vec::new();
    while d != 0 {
        let a = Integer::div_floor(&n, &d);
        pre.push(a as Gap);
        (n, d) = (d, n - a * d);
    }
    CFNumber::new(a0 as Gap, pre, Vec::new())
}

/// Periodic expansion of a positive quadratic irrational.
pub fn cf_of_quadratic(s: &QuadraticSurd) -> Result<CFNumber> {
    if s.signum() < 0 {
        return Err(Error::InvalidArgument(format!("{} is negative", s.pretty())));
    }
    let (a, b, c, d) = s.parts();
    // write the value as (P + √D) / Q with Q | D − P²
    let sq = |x: i128| x.checked_mul(x).ok_or(Error::Overflow);
    let (mut pp, mut qq) = if b > 0 { (a, c) } else { (-a, -c) };
    let mut dd = sq(b)?.checked_mul(d).ok_or(Error::Overflow)?;
    if (dd - sq(pp)?) % qq != 0 {
        let m = qq.abs();
        pp = pp.checked_mul(m).ok_or(Error::Overflow)?;
        dd = dd.checked_mul(sq(m)?).ok_or(Error::Overflow)?;
        qq = qq.checked_mul(m).ok_or(Error::Overflow)?;
    }
    let step = |pp: &mut i128, qq: &mut i128| -> Result<Gap> {
        let digit = floor_surd(*pp, dd, *qq);
        let np = digit.checked_mul(*qq).ok_or(Error::Overflow)? - *pp;
        let nq = (dd - sq(np)?) / *qq;
        (*pp, *qq) = (np, nq);
        Ok(digit as Gap)
    };
    let a0 = step(&mut pp, &mut qq)?;
    let mut digits = Vec::new();
    let mut seen: HashMap<(i128, i128), usize> = HashMap::new();
    for _ in 0..MAX_SURD_STEPS {
        if let Some(&start) = seen.get(&(pp, qq)) {
            let period = digits.split_off(start);
            return CFNumber::new(a0, digits, period);
        }
        seen.insert((pp, qq), digits.len());
        digits.push(step(&mut pp, &mut qq)?);
    }
    Err(Error::NoConvergence { iterations: MAX_SURD_STEPS })
}

/// Expansion of an exact real.
pub fn cf_of_real(x: &ExactReal) -> Result<CFNumber> {
    match x {
        ExactReal::Rational(r) => cf_of_rational(r),
        ExactReal::QuadraticSurd(s) => cf_of_quadratic(s),
    }
}

/// `x_S`: the digits are `Δ(S)` verbatim. Sampled sets give a declared
/// prefix and no value.
pub fn real_of_gapset(g: &GapSet) -> Result<(CFNumber, Option<ExactReal>)> {
    g.validate()?;
    let cf = match g {
        GapSet::Finite(_) => {
            let ds: Vec<Gap> = g.deltas().collect();
            CFNumber { a0: ds[0], pre: ds[1..].to_vec(), period: Vec::new(), declared_infinite: None }
        }
        GapSet::EventuallyPeriodic { pre, period } => CFNumber {
            a0: pre[0],
            pre: pre[1..].to_vec(),
            period: period.clone(),
            declared_infinite: None,
        },
        GapSet::Sampled { tail, .. } => {
            let ds: Vec<Gap> = g.deltas().collect();
            if ds.is_empty() {
                return Err(Error::EmptySet);
            }
            let cf = CFNumber::prefix(ds[0], ds[1..].to_vec(), tail.delta_bounded)?;
            return Ok((cf, None));
        }
    };
    let value = cf.value()?;
    Ok((cf, Some(value)))
}

/// `Some(n)` when the expansion is that of `1/n`.
fn excluded_index(cf: &CFNumber) -> Option<Gap> {
    if !cf.is_rational() {
        return None;
    }
    match (cf.a0, cf.pre.as_slice()) {
        (1, []) => Some(1),
        (0, [n]) => Some(*n),
        _ => None,
    }
}

fn excluded(n: Gap) -> Error {
    Error::ExcludedPoint { n, hint: format!("delta:{n};1") }
}

/// Gap set whose difference sequence is the digit sequence, without the
/// exclusion check.
fn gapset_of_digits(cf: &CFNumber) -> Result<GapSet> {
    let mut deltas = vec![cf.a0];
    deltas.extend_from_slice(&cf.pre);
    if let Some(bound) = cf.declared_infinite {
        let prefix: Vec<Gap> = deltas
            .iter()
            .scan(0, |acc, &d| {
                *acc += d;
                Some(*acc)
            })
            .collect();
        let horizon = *prefix.last().unwrap();
        let tail = TailMeta { delta_bounded: bound, horizon, family: None };
        return Ok(GapSet::Sampled { prefix, tail });
    }
    if cf.period.is_empty() {
        GapSet::from_deltas(&deltas)
    } else {
        GapSet::eventually_periodic(deltas, cf.period.clone())
    }
}

/// Inverse of [`real_of_gapset`]; `1/n` is rejected and the error names the
/// conjugate representative `{n, n+1, …}`.
pub fn gapset_of_cf(cf: &CFNumber) -> Result<GapSet> {
    let cf = cf.clone().canonical();
    if let Some(n) = excluded_index(&cf) {
        return Err(excluded(n));
    }
    gapset_of_digits(&cf)
}

pub fn gapset_of_real(x: &ExactReal) -> Result<GapSet> {
    gapset_of_cf(&cf_of_real(x)?)
}

/// Classification of the gap set represented by `x`.
pub fn classify_real(x: &CFNumber) -> Result<Classification> {
    Ok(classify(&gapset_of_cf(x)?))
}

fn nonmixing_gcd(cf: &CFNumber) -> Result<Gap> {
    let g = gapset_of_digits(cf)?;
    let m = mixing_gcd(&g);
    if m.gcd == 1 || !m.exact {
        return Err(Error::Precondition(format!(
            "{cf} is not known to represent a non-mixing shift (gcd {})",
            m.gcd
        )));
    }
    Ok(m.gcd)
}

fn check_depth(cf: &CFNumber, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    match cf.known_digits() {
        Some(k) if n >= k => Err(Error::InvalidArgument(format!(
            "digit {n} is beyond the {k} known digits"
        ))),
        _ => Ok(()),
    }
}

/// A non-mixing neighbour of `x` agreeing with it in every digit except
/// `d_N`, which grows by the gcd `g`. Every element past position `N` moves
/// by `g`, so all `s + 1` stay divisible by `g`.
pub fn nonmixing_perturbation(x: &CFNumber, n: usize) -> Result<CFNumber> {
    check_depth(x, n)?;
    let g = nonmixing_gcd(x)?;
    let d = x.digit(n).expect("depth checked");
    let out = x.with_digit(n, d + g)?;
    if mixing_gcd(&gapset_of_digits(&out)?).gcd == 1 {
        return Err(Error::PerturbationMixing);
    }
    Ok(out)
}

/// `[d₀; …, d_{N−1}, d_{N+1}, …]`: the digit `d_N` removed.
pub fn drop_digit_perturbation(x: &CFNumber, n: usize) -> Result<CFNumber> {
    check_depth(x, n)?;
    nonmixing_gcd(x)?;
    let out = if x.period.is_empty() {
        let mut out = x.clone();
        out.pre.remove(n - 1);
        out.canonical()
    } else {
        // digits after n, continued periodically
        let k = x.pre.len() + 1;
        let l = x.period.len();
        let mut pre: Vec<Gap> = (1..n).map(|i| x.digit(i).unwrap()).collect();
        if n < k {
            pre.extend_from_slice(&x.pre[n..]);
        }
        let t = (n + 1).max(k);
        let period = (0..l).map(|r| x.period[(t - k + r) % l]).collect();
        CFNumber::new(x.a0, pre, period)?
    };
    if mixing_gcd(&gapset_of_digits(&out)?).gcd == 1 {
        return Err(Error::PerturbationMixing);
    }
    Ok(out)
}

/// `10^k`-scaled exact value of a decimal literal, rounded to `prec`
/// fractional digits.
fn parse_decimal(input: &str, lit: &str, prec: u32) -> Result<Rational> {
    let lit = lit.trim();
    let (int, frac) = lit.split_once('.').unwrap_or((lit, ""));
    let bad = || Error::syntax(input, format!("`{lit}` is not a nonnegative decimal"));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if prec > 30 {
        return Err(Error::syntax(input, "prec must be at most 30"));
    }
    let digits = format!("{int}{frac}");
    let num: i128 = if digits.is_empty() { 0 } else { digits.parse().map_err(|_| Error::Overflow)? };
    let den = 10i128.checked_pow(frac.len() as u32).ok_or(Error::Overflow)?;
    let exact = Rational::new(num, den);
    let scale = Rational::from_integer(10i128.pow(prec));
    let scaled = exact.checked_mul(&scale).ok_or(Error::Overflow)?;
    Ok(scaled.round() / scale)
}

/// Reads `rat:p/q`, `quad:a,b,c,d` (for `(a + b√d)/c`), `cf:[…]` or
/// `dec:x,prec=N` into a continued fraction.
pub fn parse_real(input: &str) -> Result<CFNumber> {
    let s = input.trim();
    let (kind, body) = s
        .split_once(':')
        .ok_or_else(|| Error::syntax(input, "expected `<kind>:<value>`"))?;
    match kind {
        "rat" => {
            let (p, q) = body.split_once('/').unwrap_or((body, "1"));
            let p: i128 = p.trim().parse().map_err(|_| Error::syntax(input, "bad numerator"))?;
            let q: i128 = q.trim().parse().map_err(|_| Error::syntax(input, "bad denominator"))?;
            if q == 0 {
                return Err(Error::syntax(input, "zero denominator"));
            }
            cf_of_rational(&Rational::new(p, q))
        }
        "quad" => cf_of_quadratic(&body.parse()?),
        "cf" => body.parse(),
        "dec" => {
            let (lit, prec) = match body.split_once(",prec=") {
                Some((l, p)) => (l, p.trim().parse().map_err(|_| Error::syntax(input, "bad prec"))?),
                None => (body, 12),
            };
            cf_of_rational(&parse_decimal(input, lit, prec)?)
        }
        other => Err(Error::syntax(input, format!("unknown kind `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GapSet {
        s.parse().unwrap()
    }

    fn cf(s: &str) -> CFNumber {
        s.parse().unwrap()
    }

    fn rat(p: i128, q: i128) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn rational_expansions() {
        assert_eq!(cf_of_rational(&rat(7, 3)).unwrap().to_string(), "[2;3]");
        assert_eq!(cf_of_rational(&rat(1, 2)).unwrap().to_string(), "[0;2]");
        assert_eq!(cf_of_rational(&rat(5, 1)).unwrap().to_string(), "[5]");
        assert_eq!(cf("[2;3,1]").to_string(), "[2;4]");
        assert_eq!(cf("[0;1]").to_string(), "[1]");
    }

    #[test]
    fn quadratic_expansions() {
        let phi = QuadraticSurd::new(1, 1, 2, 5).unwrap();
        assert_eq!(cf_of_quadratic(&phi).unwrap().to_string(), "[1;(1)]");
        let phi2 = QuadraticSurd::new(3, 1, 2, 5).unwrap();
        assert_eq!(cf_of_quadratic(&phi2).unwrap().to_string(), "[2;(1)]");
        let r2 = QuadraticSurd::new(0, 1, 1, 2).unwrap();
        assert_eq!(cf_of_quadratic(&r2).unwrap().to_string(), "[1;(2)]");
        let r7 = QuadraticSurd::new(0, 1, 1, 7).unwrap();
        assert_eq!(cf_of_quadratic(&r7).unwrap().to_string(), "[2;(1,1,1,4)]");
        let neg = QuadraticSurd::new(0, -1, 1, 2).unwrap();
        assert!(cf_of_quadratic(&neg).is_err());
        assert_eq!(QuadraticSurd::new(0, 1, 1, 4), Err(Error::NotIrrational));
    }

    #[test]
    fn real_of_gapset_examples() {
        let (c, v) = real_of_gapset(&g("finite:2,5")).unwrap();
        assert_eq!(c.to_string(), "[2;3]");
        assert_eq!(v, Some(ExactReal::Rational(rat(7, 3))));
        let (c, v) = real_of_gapset(&g("delta:2;1")).unwrap();
        assert_eq!(c.to_string(), "[2;(1)]");
        assert_eq!(v, Some(ExactReal::QuadraticSurd(QuadraticSurd::new(3, 1, 2, 5).unwrap())));
        let (c, v) = real_of_gapset(&g("finite:0")).unwrap();
        assert_eq!(c.to_string(), "[0]");
        assert_eq!(v, Some(ExactReal::Rational(rat(0, 1))));
        let (c, v) = real_of_gapset(&g("family:squares,horizon=20")).unwrap();
        assert_eq!(c.to_string(), "[0;1,3,5,7,...]");
        assert!(v.is_none());
    }

    #[test]
    fn gapset_of_real_examples() {
        assert_eq!(gapset_of_real(&ExactReal::Rational(rat(7, 3))).unwrap(), g("finite:2,5"));
        let e = gapset_of_real(&ExactReal::Rational(rat(1, 3))).unwrap_err();
        assert_eq!(e, Error::ExcludedPoint { n: 3, hint: "delta:3;1".into() });
        let x = ExactReal::QuadraticSurd(QuadraticSurd::new(3, 1, 2, 5).unwrap());
        assert_eq!(gapset_of_real(&x).unwrap(), g("delta:2;1"));
        assert_eq!(gapset_of_real(&ExactReal::Rational(rat(1, 1))).unwrap_err().kind(), "ExcludedPoint");
    }

    #[test]
    fn surd_values_of_periodic_expansions() {
        for (s, want) in [("[1;(2)]", (0, 1, 1, 2)), ("[0;(1)]", (-1, 1, 2, 5)), ("[1;(1,2)]", (0, 1, 1, 3))] {
            match cf(s).value().unwrap() {
                ExactReal::QuadraticSurd(q) => assert_eq!(q.parts(), want, "{s}"),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn classify_reals() {
        assert!(classify_real(&cf("[2;3]")).unwrap().sft.is_true());
        let c = classify_real(&cf("[2;(1)]")).unwrap();
        assert!(c.sofic.is_true() && c.aft.is_true());
        let unbounded = CFNumber::prefix(0, vec![1, 3, 5, 7], DeltaBound::No).unwrap();
        assert_eq!(classify_real(&unbounded).unwrap().almost_specified, crate::Verdict::False);
    }

    #[test]
    fn perturbations() {
        let odds = cf("[1;(2)]");
        let p = nonmixing_perturbation(&odds, 2).unwrap();
        assert_eq!(p.to_string(), "[1;2,4,(2)]");
        let alt = cf("[1;(2,4)]");
        let q = nonmixing_perturbation(&alt, 4).unwrap();
        assert_eq!((1..10).filter(|&i| q.digit(i) != alt.digit(i)).count(), 1);
        assert_eq!(nonmixing_perturbation(&cf("[2;(1)]"), 2).unwrap_err().kind(), "Precondition");
        // dropping a digit of a constant tail changes nothing
        assert_eq!(drop_digit_perturbation(&odds, 3).unwrap(), odds);
    }

    #[test]
    fn parses_real_forms() {
        assert_eq!(parse_real("rat:7/3").unwrap().to_string(), "[2;3]");
        assert_eq!(parse_real("quad:3,1,2,5").unwrap().to_string(), "[2;(1)]");
        assert_eq!(parse_real("cf:[2;(1)]").unwrap().to_string(), "[2;(1)]");
        assert_eq!(parse_real("dec:2.618,prec=12").unwrap(), cf_of_rational(&rat(1309, 500)).unwrap());
        assert_eq!(parse_real("dec:0.333333,prec=2").unwrap().to_string(), "[0;3,33]");
        assert!(parse_real("rat:1/0").is_err());
        assert!(parse_real("cf:[1;(2]").is_err());
    }
}
