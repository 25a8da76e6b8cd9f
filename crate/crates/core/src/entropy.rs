//! Entropy from the gap equation `Σ_{s∈S} x^{−(s+1)} = 1`.
//!
//! The root `λ ∈ [1, 2]` gives `h(X(S)) = log λ`. For eventually periodic
//! `S` the tail of the sum is a geometric series and is evaluated in closed
//! form; sampled sets get a bracket from a finite truncation (a subshift)
//! and the cofinite relaxation of the same prefix (a supershift).

use serde::Serialize;

use crate::{Error, GapSet, Result, Scalar};

/// Bisection step cap; more than enough for `f64` on `[1, 2]`.
const MAX_BISECTIONS: usize = 400;

/// `λ` and `h = log λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Entropy<T> {
    pub lambda: T,
    pub h: T,
}

/// `lo ≤ h(X(S)) ≤ hi`, from the first `k` elements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyBounds<T> {
    pub k: usize,
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> EntropyBounds<T> {
    pub fn width(&self) -> T {
        self.hi - self.lo
    }
}

/// `Σ_{s∈S} x^{−(s+1)}` for `x > 1`.
pub fn gap_equation_value<T: Scalar>(g: &GapSet, x: T) -> Result<T> {
    if !(x > T::one()) {
        return Err(Error::InvalidArgument(format!("x = {x} must exceed 1")));
    }
    let inv = x.recip();
    let term = |s: u64| inv.powf(T::of(s as f64 + 1.0));
    match g {
        GapSet::Finite(s) => Ok(s.iter().fold(T::zero(), |acc, &v| acc + term(v))),
        GapSet::EventuallyPeriodic { pre, period } => {
            let head = g.iter().take(pre.len()).fold(T::zero(), |acc, v| acc + term(v));
            let base: u64 = pre.iter().sum();
            let p: u64 = period.iter().sum();
            let mut c = 0;
            let mut tail = T::zero();
            for &m in period {
                c += m;
                tail = tail + term(base + c);
            }
            Ok(head + tail / (T::one() - inv.powf(T::of(p as f64))))
        }
        GapSet::Sampled { .. } => Err(Error::NotSofic),
    }
}

/// Root of the gap equation by bisection on `[1, 2]`.
pub fn entropy<T: Scalar>(g: &GapSet, tol: T) -> Result<Entropy<T>> {
    g.validate()?;
    if !(tol > T::zero()) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    if g.is_sampled() {
        return Err(Error::NotSofic);
    }
    if g.len() == Some(1) {
        return Ok(Entropy { lambda: T::one(), h: T::zero() });
    }
    let (mut lo, mut hi) = (T::one(), T::of(2.0));
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) / T::of(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if gap_equation_value(g, mid)? > T::one() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda = (lo + hi) / T::of(2.0);
    Ok(Entropy { lambda, h: lambda.ln() })
}

/// `h(X(S_k))` for the truncations `S_k` to the first `k` elements.
pub fn entropy_truncations<T: Scalar>(g: &GapSet, ks: &[usize], tol: T) -> Result<Vec<T>> {
    ks.iter()
        .map(|&k| entropy(&g.truncate(k)?, tol).map(|e| e.h))
        .collect()
}

/// Bracket from the first `k` elements: the finite prefix below, the prefix
/// together with every larger integer above.
pub fn entropy_bounds<T: Scalar>(g: &GapSet, k: usize, tol: T) -> Result<EntropyBounds<T>> {
    let prefix = g.truncate(k)?;
    let deltas: Vec<u64> = prefix.deltas().collect();
    let relaxed = GapSet::eventually_periodic(deltas, vec![1])?;
    Ok(EntropyBounds {
        k,
        lo: entropy(&prefix, tol)?.h,
        hi: entropy(&relaxed, tol)?.h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GapSet {
        s.parse().unwrap()
    }

    #[test]
    fn gap_equation_examples() {
        let v: f64 = gap_equation_value(&GapSet::naturals(), 2.0).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        let v: f64 = gap_equation_value(&g("delta:1;2"), 2f64.sqrt()).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        let v: f64 = gap_equation_value(&g("finite:0,2"), 2.0).unwrap();
        assert_eq!(v, 0.625);
        assert!(gap_equation_value(&g("finite:0,2"), 1.0f64).is_err());
    }

    #[test]
    fn entropy_examples() {
        let e: Entropy<f64> = entropy(&GapSet::naturals(), 1e-12).unwrap();
        assert!((e.lambda - 2.0).abs() < 1e-12);
        assert!((e.h - 2f64.ln()).abs() < 1e-11);
        let e: Entropy<f64> = entropy(&g("delta:1;1"), 1e-12).unwrap();
        assert!((e.lambda - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
        let e: Entropy<f64> = entropy(&g("delta:1;2"), 1e-12).unwrap();
        assert!((e.lambda - 2f64.sqrt()).abs() < 1e-10);
        let e: Entropy<f64> = entropy(&g("finite:3"), 1e-12).unwrap();
        assert_eq!((e.lambda, e.h), (1.0, 0.0));
        let e: Entropy<f32> = entropy(&g("delta:1;2"), 1e-6).unwrap();
        assert!((e.lambda - 2f32.sqrt()).abs() < 1e-5);
    }

    #[test]
    fn truncations_increase() {
        let hs: Vec<f64> = entropy_truncations(&GapSet::naturals(), &[1, 2, 4, 8], 1e-12).unwrap();
        assert!(hs.windows(2).all(|w| w[0] < w[1]));
        assert!(hs[3] < 2f64.ln());
        let whole: f64 = entropy(&g("finite:0,2"), 1e-12).unwrap().h;
        assert_eq!(entropy_truncations(&g("finite:0,2"), &[2], 1e-12).unwrap(), vec![whole]);
    }

    #[test]
    fn bounds_bracket() {
        let sq = g("family:squares,horizon=10000");
        let b: EntropyBounds<f64> = entropy_bounds(&sq, 3, 1e-12).unwrap();
        let lo: f64 = entropy(&g("finite:0,1,4"), 1e-12).unwrap().h;
        let hi: f64 = entropy(&g("delta:0,1,3;1"), 1e-12).unwrap().h;
        assert_eq!((b.lo, b.hi), (lo, hi));
        let full = g("family:powers2,horizon=1000");
        let widths: Vec<f64> = (2..=8).map(|k| entropy_bounds(&full, k, 1e-12).unwrap().width()).collect();
        assert!(widths.windows(2).all(|w| w[1] <= w[0]));
        let nat = GapSet::naturals();
        let b: EntropyBounds<f64> = entropy_bounds(&nat, 5, 1e-12).unwrap();
        assert!((b.hi - 2f64.ln()).abs() < 1e-11);
    }

    #[test]
    fn truncation_depths_agree_past_forty() {
        for s in ["delta:1;2", "delta:1;1", "delta:2;3", "delta:1;1,2", "family:squares,horizon=10000"] {
            let set = g(s);
            for m in 40..45 {
                let a: f64 = entropy(&set.truncate(m).unwrap(), 1e-13).unwrap().h;
                let b: f64 = entropy(&set.truncate(m + 1).unwrap(), 1e-13).unwrap().h;
                assert!((a - b).abs() < 1e-6, "{s}, m = {m}");
            }
        }
    }
}
