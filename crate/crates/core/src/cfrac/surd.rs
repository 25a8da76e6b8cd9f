use std::fmt;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Zero};

use crate::{Error, Rational, Result};

/// `(a + b√d) / c` with `c > 0`, `d > 1` squarefree, `b ≠ 0` and
/// `gcd(a, b, c) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
}

/// `n = f² · r` with `r` squarefree.
pub(crate) fn squarefree_split(n: i128) -> (i128, i128) {
    debug_assert!(n > 0);
    let (mut rest, mut f, mut core) = (n, 1, 1);
    let mut p = 2;
    while p * p * p <= rest {
        let mut count = 0;
        while rest % p == 0 {
            rest /= p;
            count += 1;
        }
        f *= p.pow(count / 2);
        if count % 2 == 1 {
            core *= p;
        }
        p += 1;
    }
    // what is left has at most two prime factors, both above the cube root
    let s = rest.sqrt();
    if s * s == rest {
        f *= s;
    } else {
        core *= rest;
    }
    (f, core)
}

impl QuadraticSurd {
    pub fn new(a: i128, b: i128, c: i128, d: i128) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidArgument("denominator is zero".into()));
        }
        if d <= 0 {
            return Err(Error::InvalidArgument(format!("radicand {d} must be positive")));
        }
        let (f, d) = squarefree_split(d);
        let b = b.checked_mul(f).ok_or(Error::Overflow)?;
        if d == 1 || b == 0 {
            return Err(Error::NotIrrational);
        }
        let (mut a, mut b, mut c) = (a, b, c);
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        Ok(QuadraticSurd { a: a / g, b: b / g, c: c / g, d })
    }

    pub fn parts(&self) -> (i128, i128, i128, i128) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + self.b as f64 * (self.d as f64).sqrt()) / self.c as f64
    }

    /// Sign of the value, decided exactly.
    pub fn signum(&self) -> i32 {
        let (a, b) = (self.a, self.b);
        match (a.signum(), b.signum()) {
            (sa, sb) if sa >= 0 && sb > 0 => 1,
            (sa, sb) if sa <= 0 && sb < 0 => -1,
            (sa, _) => {
                // a and b√d have opposite signs: compare a² with b²d
                let lhs = a.checked_mul(a);
                let rhs = b.checked_mul(b).and_then(|x| x.checked_mul(self.d));
                match (lhs, rhs) {
                    (Some(l), Some(r)) if l > r => sa as i32,
                    (Some(_), Some(_)) => -sa as i32,
                    _ => {
                        if (a as f64).abs() > (b as f64).abs() * (self.d as f64).sqrt() {
                            sa as i32
                        } else {
                            -sa as i32
                        }
                    }
                }
            }
        }
    }

    /// Human-readable `(a + b√d)/c`.
    pub fn pretty(&self) -> String {
        let b = match self.b.abs() {
            1 => format!("√{}", self.d),
            m => format!("{m}√{}", self.d),
        };
        let sign = if self.b < 0 { "-" } else { "+" };
        let num = if self.a == 0 {
            format!("{}{b}", if self.b < 0 { "-" } else { "" })
        } else {
            format!("{} {sign} {b}", self.a)
        };
        if self.c == 1 {
            num
        } else {
            format!("({num})/{}", self.c)
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quad:{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for QuadraticSurd {
    type Err = Error;

    /// `a,b,c,d` for `(a + b√d)/c`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<i128> = s
            .split(',')
            .map(|t| t.trim().parse::<i128>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::syntax(s, "expected four integers a,b,c,d"))?;
        match parts[..] {
            [a, b, c, d] => QuadraticSurd::new(a, b, c, d),
            _ => Err(Error::syntax(s, "expected four integers a,b,c,d")),
        }
    }
}

/// `u + v√d` with rational `u`, `v`; used to evaluate periodic continued
/// fractions exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SurdField {
    pub u: Rational,
    pub v: Rational,
    pub d: i128,
}

fn checked(r: Option<Rational>) -> Result<Rational> {
    r.ok_or(Error::Overflow)
}

impl SurdField {
    pub fn add_int(&self, n: i128) -> Result<SurdField> {
        Ok(SurdField {
            u: checked(self.u.checked_add(&Rational::from_integer(n)))?,
            v: self.v,
            d: self.d,
        })
    }

    /// `1 / (u + v√d) = (u − v√d) / (u² − v²d)`.
    pub fn recip(&self) -> Result<SurdField> {
        let uu = checked(self.u.checked_mul(&self.u))?;
        let vv = checked(self.v.checked_mul(&self.v))?;
        let vvd = checked(vv.checked_mul(&Rational::from_integer(self.d)))?;
        let norm = checked(uu.checked_sub(&vvd))?;
        if norm.is_zero() {
            return Err(Error::InvalidArgument("division by zero surd".into()));
        }
        let inv = norm.recip();
        Ok(SurdField {
            u: checked(self.u.checked_mul(&inv))?,
            v: checked((-self.v).checked_mul(&inv))?,
            d: self.d,
        })
    }

    pub fn to_surd(&self) -> Result<QuadraticSurd> {
        let c = self.u.denom().lcm(self.v.denom());
        let a = checked(self.u.checked_mul(&Rational::from_integer(c)))?;
        let b = checked(self.v.checked_mul(&Rational::from_integer(c)))?;
        debug_assert!(a.is_integer() && b.is_integer());
        QuadraticSurd::new(a.to_integer(), b.to_integer(), c, self.d)
    }
}

/// Exact `⌊(p + √dd) / q⌋` for `q ≠ 0` and non-square `dd`.
pub(crate) fn floor_surd(p: i128, dd: i128, q: i128) -> i128 {
    let s = dd.sqrt();
    if q > 0 {
        Integer::div_floor(&(p + s), &q)
    } else {
        -Integer::div_floor(&(p + s), &-q) - 1
    }
}
