//! Zeta functions and periodic-point counts.
//!
//! For a gap set `S` put `f(t) = Σ_{s∈S} t^{s+1}`. Points with at least one
//! `1` are cyclic concatenations of blocks `1 0^s`, which gives
//! `ζ(t) = 1 / (1 − f(t))` for finite `S`; for infinite `S` the fixed point
//! `0^∞` contributes an extra factor `1 / (1 − t)`. With an eventually
//! periodic tail `f` is rational and clearing its denominator `1 − t^P`
//! leaves a ratio of integer polynomials.

use std::fmt;

use serde::Serialize;

use super::periodic_points_bruteforce;
use crate::{Error, GapSet, Result};

/// Largest order accepted for closed-form expansion (`p_n ≤ 2ⁿ` must fit in `i128`).
pub const MAX_ZETA_ORDER: usize = 120;

/// Integer polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly(Vec<i128>);

impl Poly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        Poly(coeffs)
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    /// `c · t^d`
    pub fn monomial(c: i128, d: usize) -> Self {
        let mut v = vec![0; d + 1];
        v[d] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> i128 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        let n = self.0.len().max(other.0.len());
        (0..n)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(Poly::new(out))
    }

    pub fn derivative(&self) -> Result<Poly> {
        if self.0.len() == 1 {
            return Ok(Poly::new(vec![0]));
        }
        self.0[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| c.checked_mul(i as i128 + 1).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    /// First `order` coefficients of `self / den`; `den(0)` must be `1`.
    pub fn series_div(&self, den: &Poly, order: usize) -> Result<Vec<i128>> {
        if den.coeff(0) != 1 {
            return Err(Error::InvalidArgument("series denominator must have constant term 1".into()));
        }
        let mut out: Vec<i128> = Vec::with_capacity(order);
        for i in 0..order {
            let mut c = self.coeff(i);
            for j in 1..=i.min(den.degree()) {
                let term = den.coeff(j).checked_mul(out[i - j]).ok_or(Error::Overflow)?;
                c = c.checked_sub(term).ok_or(Error::Overflow)?;
            }
            out.push(c);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    /// Ascending degree, e.g. `1 - t - t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 && !(d == 0 && self.0.len() == 1) {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    f.write_str("t")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `ζ(t) = num(t) / den(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub num: Poly,
    pub den: Poly,
}

impl ClosedForm {
    /// `p_1, …, p_order` from `ζ'/ζ = Σ_{n≥1} p_n t^{n−1}`, where
    /// `ζ'/ζ = (num'·den − num·den') / (num·den)`.
    pub fn periodic_points(&self, order: usize) -> Result<Vec<i128>> {
        let top = self
            .num
            .derivative()?
            .mul(&self.den)?
            .sub(&self.num.mul(&self.den.derivative()?)?)?;
        let bottom = self.num.mul(&self.den)?;
        let series = top.series_div(&bottom, order)?;
        Ok(series)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |p: &Poly| {
            if p.coeffs().iter().filter(|&&c| c != 0).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", part(&self.num), part(&self.den))
    }
}

/// Periodic data of `X(S)` up to a given order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaData {
    pub order: usize,
    /// `p[n−1]`: points fixed by `σⁿ`.
    pub p: Vec<i128>,
    /// `q[n−1]`: points of least period `n`.
    pub q: Vec<i128>,
    #[serde(serialize_with = "closed_form_text")]
    pub closed_form: Option<ClosedForm>,
}

fn closed_form_text<S: serde::Serializer>(cf: &Option<ClosedForm>, s: S) -> Result<S::Ok, S::Error> {
    match cf {
        Some(cf) => s.serialize_str(&cf.to_string()),
        None => s.serialize_str("none"),
    }
}

/// Rational zeta function of a finite or eventually periodic gap set.
pub fn closed_form(g: &GapSet) -> Result<ClosedForm> {
    let term = |s: u64| Poly::monomial(1, s as usize + 1);
    match g {
        GapSet::Finite(s) => {
            let mut den = Poly::one();
            for &x in s {
                den = den.sub(&term(x))?;
            }
            Ok(ClosedForm { num: Poly::one(), den })
        }
        GapSet::EventuallyPeriodic { pre, period } => {
            let head: Vec<u64> = g.iter().take(pre.len()).collect();
            let base = head[head.len() - 1];
            let p: u64 = period.iter().sum();
            // f = A + B / (1 − t^P)
            let mut a = Poly::new(vec![0]);
            for &s in &head {
                a = a.add(&term(s))?;
            }
            let mut b = Poly::new(vec![0]);
            let mut c = 0;
            for &m in period {
                c += m;
                b = b.add(&term(base + c))?;
            }
            let one_minus_tp = Poly::one().sub(&Poly::monomial(1, p as usize))?;
            let nf = a.mul(&one_minus_tp)?.add(&b)?;
            let den = one_minus_tp.sub(&nf)?;
            // (1 − t^P) / (1 − t)
            let num = Poly::new(vec![1; p as usize]);
            Ok(ClosedForm { num, den })
        }
        GapSet::Sampled { .. } => Err(Error::Undecidable("no closed form for a sampled gap set")),
    }
}

/// Möbius function.
pub fn mobius(n: usize) -> i128 {
    let mut n = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `q_n = Σ_{d|n} μ(n/d)·p_d`.
pub fn least_period_counts(p: &[i128]) -> Vec<i128> {
    (1..=p.len())
        .map(|n| {
            (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| mobius(n / d) * p[d - 1])
                .sum()
        })
        .collect()
}

/// Periodic-point counts to `order` from the closed form; sampled sets fall
/// back to brute-force enumeration and carry no closed form.
pub fn zeta_series(g: &GapSet, order: usize) -> Result<ZetaData> {
    g.validate()?;
    let (p, closed_form) = if g.is_sampled() {
        let p = (1..=order)
            .map(|n| periodic_points_bruteforce(g, n).map(i128::from))
            .collect::<Result<Vec<_>>>()?;
        (p, None)
    } else {
        if order > MAX_ZETA_ORDER {
            return Err(Error::InvalidArgument(format!(
                "order {order} exceeds {MAX_ZETA_ORDER}"
            )));
        }
        let cf = closed_form(g)?;
        (cf.periodic_points(order)?, Some(cf))
    };
    let q = least_period_counts(&p);
    Ok(ZetaData {
        order,
        p,
        q,
        closed_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GapSet {
        s.parse().unwrap()
    }

    #[test]
    fn full_shift_zeta() {
        let z = zeta_series(&GapSet::naturals(), 10).unwrap();
        assert_eq!(z.closed_form.as_ref().unwrap().to_string(), "1/(1 - 2t)");
        assert_eq!(z.p, (1..=10).map(|n| 1i128 << n).collect::<Vec<_>>());
        assert_eq!(z.q[1], 2);
    }

    #[test]
    fn exceptional_pair_shares_denominator() {
        let a = zeta_series(&g("finite:0,2"), 20).unwrap();
        let b = zeta_series(&g("delta:2;1"), 20).unwrap();
        assert_eq!(a.p, b.p);
        assert_eq!(a.closed_form.unwrap().den.to_string(), "1 - t - t^3");
        assert_eq!(b.closed_form.unwrap().den.to_string(), "1 - t - t^3");
    }

    #[test]
    fn finite_odd_gaps() {
        let z = zeta_series(&g("finite:1,3"), 5).unwrap();
        assert_eq!(z.p, vec![0, 2, 0, 6, 0]);
        assert_eq!(z.q[0], 0);
        assert_eq!(z.q[1], 2);
    }

    #[test]
    fn odds_closed_form() {
        let z = zeta_series(&g("delta:1;2"), 4).unwrap();
        assert_eq!(z.closed_form.unwrap().to_string(), "(1 + t)/(1 - 2t^2)");
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i128> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn least_period_inversion() {
        // full shift: q_1 = 2, q_2 = 4 - 2, q_4 = 16 - 4
        let q = least_period_counts(&[2, 4, 8, 16]);
        assert_eq!(q, vec![2, 2, 6, 12]);
    }

    #[test]
    fn poly_display() {
        assert_eq!(Poly::new(vec![1, -1, 0, -1]).to_string(), "1 - t - t^3");
        assert_eq!(Poly::new(vec![0, -3, 2]).to_string(), "-3t + 2t^2");
        assert_eq!(Poly::new(vec![0]).to_string(), "0");
    }

    #[test]
    fn sampled_uses_enumeration() {
        let z = zeta_series(&g("family:squares,horizon=30"), 6).unwrap();
        assert!(z.closed_form.is_none());
        for n in 1..=6 {
            assert_eq!(z.p[n - 1], periodic_points_bruteforce(&g("family:squares,horizon=30"), n).unwrap() as i128);
        }
    }
}
