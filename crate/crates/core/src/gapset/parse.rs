//! Text grammar for gap sets:
//!
//! ```text
//! finite:s0,s1,...
//! delta:d0[,d1,...];m1[,m2,...]
//! cofinite:exclude=a,b,...
//! family:{squares|primes|powers2},horizon=N[,bounded=yes:M|no]
//! ```

use std::str::FromStr;

use super::{DeltaBound, Family, GapSet};
use crate::{Error, Gap, Result};

/// The accepted grammar, reproduced in the CLI help.
pub const GRAMMAR: &str = "finite:s0,s1,... | delta:d0[,d1,...];m1[,m2,...] | cofinite:exclude=a,b,... | family:{squares|primes|powers2},horizon=N[,bounded=yes:M|no]";

fn parse_num(input: &str, tok: &str) -> Result<Gap> {
    tok.trim()
        .parse::<Gap>()
        .map_err(|_| Error::syntax(input, format!("`{}` is not a nonnegative integer", tok.trim())))
}

fn parse_list(input: &str, body: &str) -> Result<Vec<Gap>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(|t| parse_num(input, t)).collect()
}

impl FromStr for GapSet {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::syntax(input, "expected `<kind>:<body>`"))?;
        match kind.trim() {
            "finite" => {
                let xs = parse_list(input, body)?;
                GapSet::finite(xs)
            }
            "delta" => {
                let (pre, period) = body
                    .split_once(';')
                    .ok_or_else(|| Error::syntax(input, "expected `;` between pre-period and period"))?;
                let pre = parse_list(input, pre)?;
                let period = parse_list(input, period)?;
                if pre.is_empty() {
                    return Err(Error::syntax(input, "pre-period must contain d0"));
                }
                if period.is_empty() {
                    return Err(Error::syntax(input, "period must be nonempty"));
                }
                GapSet::eventually_periodic(pre, period)
            }
            "cofinite" => {
                let rest = body
                    .trim()
                    .strip_prefix("exclude=")
                    .ok_or_else(|| Error::syntax(input, "expected `exclude=`"))?;
                let mut excluded = parse_list(input, rest)?;
                excluded.sort_unstable();
                excluded.dedup();
                cofinite(&excluded)
            }
            "family" => parse_family(input, body),
            other => Err(Error::syntax(input, format!("unknown kind `{other}`"))),
        }
    }
}

/// `ℕ₀ ∖ excluded` in eventually periodic form.
fn cofinite(excluded: &[Gap]) -> Result<GapSet> {
    let top = excluded.last().map_or(0, |&m| m + 1);
    let members: Vec<Gap> = (0..=top).filter(|x| excluded.binary_search(x).is_err()).collect();
    let mut pre = Vec::with_capacity(members.len());
    let mut prev = 0;
    for (i, &m) in members.iter().enumerate() {
        pre.push(if i == 0 { m } else { m - prev });
        prev = m;
    }
    GapSet::eventually_periodic(pre, vec![1])
}

fn parse_family(input: &str, body: &str) -> Result<GapSet> {
    let mut parts = body.split(',');
    let family = match parts.next().map(str::trim) {
        Some("squares") => Family::Squares,
        Some("primes") => Family::Primes,
        Some("powers2") => Family::Powers2,
        Some(other) => return Err(Error::syntax(input, format!("unknown family `{other}`"))),
        None => return Err(Error::syntax(input, "missing family name")),
    };
    let mut horizon = None;
    let mut bound = None;
    for part in parts {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::syntax(input, format!("expected key=value, got `{part}`")))?;
        match key.trim() {
            "horizon" => horizon = Some(parse_num(input, value)?),
            "bounded" => {
                bound = Some(match value.trim() {
                    "no" => DeltaBound::No,
                    v => match v.strip_prefix("yes:") {
                        Some(m) => DeltaBound::Yes(parse_num(input, m)?),
                        None => {
                            return Err(Error::syntax(input, "bounded must be `yes:M` or `no`"))
                        }
                    },
                })
            }
            other => return Err(Error::syntax(input, format!("unknown key `{other}`"))),
        }
    }
    let horizon = horizon.ok_or_else(|| Error::syntax(input, "missing horizon=N"))?;
    GapSet::family(family, horizon, bound)
}
