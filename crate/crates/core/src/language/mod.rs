//! Word-level ground truth for `X(S)`.
//!
//! Everything here works directly with words and the gap rule, without any
//! graph presentation or closed form, so it serves as the reference the other
//! modules are checked against.

mod code;
mod word;
mod zeta;

use crate::{Error, Gap, GapSet, Result};

pub use code::{
    apply_code, exceptional_pair_code, verify_code_conjugacy, verify_exceptional_pair_conjugacy,
    ConjugacyReport, SlidingBlockCode,
};
pub use word::Word;
pub use zeta::{least_period_counts, mobius, zeta_series, ClosedForm, Poly, ZetaData};

/// Longest block length accepted by the enumerators.
pub const MAX_ENUM_LEN: usize = 24;

/// Membership answers for `0..len`, computed once per enumeration.
struct GapTable {
    member: Vec<Result<bool>>,
    room: Vec<bool>,
}

impl GapTable {
    fn new(g: &GapSet, len: usize) -> Self {
        GapTable {
            member: (0..=len as Gap).map(|x| g.contains(x)).collect(),
            room: (0..=len as Gap).map(|x| g.has_element_at_least(x)).collect(),
        }
    }

    fn member(&self, gap: usize) -> Result<bool> {
        self.member[gap].clone()
    }
}

fn check_len(n: usize) -> Result<()> {
    if n > MAX_ENUM_LEN {
        return Err(Error::InvalidArgument(format!(
            "length {n} exceeds the enumeration limit {MAX_ENUM_LEN}"
        )));
    }
    Ok(())
}

/// Whether `w` occurs in some point of `X(S)`.
///
/// Internal zero runs must lie in `S`; the leading and trailing runs only need
/// room to be completed, i.e. some element of `S` at least as large (always
/// true for infinite `S`).
pub fn is_admissible(w: &Word, g: &GapSet) -> Result<bool> {
    let syms = w.symbols();
    let ones: Vec<usize> = (0..syms.len()).filter(|&i| syms[i] == 1).collect();
    let (Some(&first), Some(&last)) = (ones.first(), ones.last()) else {
        return Ok(g.has_element_at_least(syms.len() as Gap));
    };
    if !g.has_element_at_least(first as Gap) || !g.has_element_at_least((syms.len() - 1 - last) as Gap) {
        return Ok(false);
    }
    let mut undecided = None;
    for pair in ones.windows(2) {
        match g.contains((pair[1] - pair[0] - 1) as Gap) {
            Ok(true) => {}
            Ok(false) => return Ok(false),
            Err(e) => undecided = undecided.or(Some(e)),
        }
    }
    undecided.map_or(Ok(true), Err)
}

/// Whether the periodic point `u^∞` lies in `X(S)`: every cyclic gap between
/// consecutive `1`s is in `S`, and `0^∞` is allowed iff `S` is infinite.
pub fn is_periodic_admissible(u: &Word, g: &GapSet) -> Result<bool> {
    let n = u.len();
    if n == 0 {
        return Err(Error::InvalidArgument("period must be at least 1".into()));
    }
    let ones: Vec<usize> = (0..n).filter(|&i| u.symbols()[i] == 1).collect();
    if ones.is_empty() {
        return Ok(g.is_infinite());
    }
    let mut undecided = None;
    for (i, &p) in ones.iter().enumerate() {
        let next = if i + 1 < ones.len() { ones[i + 1] } else { ones[0] + n };
        match g.contains((next - p - 1) as Gap) {
            Ok(true) => {}
            Ok(false) => return Ok(false),
            Err(e) => undecided = undecided.or(Some(e)),
        }
    }
    undecided.map_or(Ok(true), Err)
}

/// Calls `visit` with every admissible word of length `n`, encoded as bits
/// (first symbol most significant). Zero runs are pruned as soon as they
/// cannot be completed.
pub fn for_each_block(g: &GapSet, n: usize, mut visit: impl FnMut(u64)) -> Result<()> {
    check_len(n)?;
    let table = GapTable::new(g, n);
    fn go(
        t: &GapTable,
        n: usize,
        depth: usize,
        bits: u64,
        seen_one: bool,
        run: usize,
        visit: &mut dyn FnMut(u64),
    ) -> Result<()> {
        if depth == n {
            visit(bits);
            return Ok(());
        }
        if t.room[run + 1] {
            go(t, n, depth + 1, bits << 1, seen_one, run + 1, visit)?;
        }
        if !seen_one || t.member(run)? {
            go(t, n, depth + 1, (bits << 1) | 1, true, 0, visit)?;
        }
        Ok(())
    }
    go(&table, n, 0, 0, false, 0, &mut visit)
}

/// All admissible words of length `n`.
pub fn blocks(g: &GapSet, n: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for_each_block(g, n, |b| out.push(Word::from_bits(b, n)))?;
    Ok(out)
}

/// `|B_n(X(S))|` by pruned enumeration.
pub fn count_blocks(g: &GapSet, n: usize) -> Result<u64> {
    let mut count = 0u64;
    for_each_block(g, n, |_| count += 1)?;
    Ok(count)
}

/// Number of points fixed by `σⁿ`, counted by scanning all `2ⁿ` words of
/// length `n` and testing their periodizations.
pub fn periodic_points_bruteforce(g: &GapSet, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("period must be at least 1".into()));
    }
    check_len(n)?;
    let table = GapTable::new(g, n);
    let mut count = 0u64;
    for mask in 0u64..(1u64 << n) {
        if mask == 0 {
            count += g.is_infinite() as u64;
            continue;
        }
        let mut ones = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            ones.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        let mut ok = true;
        for (i, &p) in ones.iter().enumerate() {
            let next = if i + 1 < ones.len() { ones[i + 1] } else { ones[0] + n };
            if !table.member(next - p - 1)? {
                ok = false;
                break;
            }
        }
        count += ok as u64;
    }
    Ok(count)
}
