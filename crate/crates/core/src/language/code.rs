//! Sliding block codes `y_i = Φ(x_{i−m} … x_{i+n})` on periodic points.

use std::collections::HashMap;
use std::fmt;

use super::{blocks, is_admissible, is_periodic_admissible, periodic_points_bruteforce, Word};
use crate::{Error, Gap, GapSet, Result};

/// Longest word length accepted by the code verifier.
pub const MAX_VERIFY_LEN: usize = 14;

/// A block map with memory `m` and anticipation `n`.
///
/// `table[w]` is `Φ(w)` for the window `w` of length `m + n + 1`, read as a
/// binary number with the first symbol most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidingBlockCode {
    pub memory: usize,
    pub anticipation: usize,
    pub table: Vec<u8>,
    pub source: Option<GapSet>,
    pub target: Option<GapSet>,
}

impl SlidingBlockCode {
    pub fn new(memory: usize, anticipation: usize, table: Vec<u8>) -> Result<Self> {
        let width = memory + anticipation + 1;
        if width > 20 {
            return Err(Error::InvalidArgument(format!("window length {width} too large")));
        }
        if table.len() != 1 << width {
            return Err(Error::InvalidArgument(format!(
                "table has {} entries, expected {}",
                table.len(),
                1 << width
            )));
        }
        if table.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArgument("table values must be 0 or 1".into()));
        }
        Ok(SlidingBlockCode {
            memory,
            anticipation,
            table,
            source: None,
            target: None,
        })
    }

    /// The 1-block identity code.
    pub fn identity() -> Self {
        SlidingBlockCode::new(0, 0, vec![0, 1]).expect("valid table")
    }

    pub fn with_shifts(mut self, source: GapSet, target: GapSet) -> Self {
        self.source = Some(source);
        self.target = Some(target);
        self
    }

    pub fn window(&self) -> usize {
        self.memory + self.anticipation + 1
    }

    /// `Φ` applied to one window.
    pub fn eval(&self, w: &Word) -> Result<u8> {
        if w.len() != self.window() {
            return Err(Error::InvalidArgument(format!(
                "window `{w}` has length {}, expected {}",
                w.len(),
                self.window()
            )));
        }
        Ok(self.table[w.to_bits().expect("window fits in 64 bits") as usize])
    }

    /// Image of a finite word; it is shorter by `m + n` symbols.
    pub fn apply_word(&self, w: &Word) -> Word {
        let k = self.window();
        let syms = w.symbols();
        if syms.len() < k {
            return Word::default();
        }
        let out = syms
            .windows(k)
            .map(|win| self.table[bits_of(win.iter().copied())])
            .collect();
        Word::from_symbols(out)
    }

    fn apply_cyclic(&self, u: &[u8]) -> Word {
        let n = u.len();
        let k = self.window();
        let out = (0..n)
            .map(|i| {
                let start = i + n * k - self.memory;
                self.table[bits_of((0..k).map(|j| u[(start + j) % n]))]
            })
            .collect();
        Word::from_symbols(out)
    }
}

fn bits_of(it: impl Iterator<Item = u8>) -> usize {
    it.fold(0, |acc, b| (acc << 1) | b as usize)
}

impl fmt::Display for SlidingBlockCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "memory={} anticipation={} ones={{", self.memory, self.anticipation)?;
        let k = self.window();
        let ones: Vec<String> = (0..self.table.len())
            .filter(|&i| self.table[i] == 1)
            .map(|i| Word::from_bits(i as u64, k).to_string())
            .collect();
        write!(f, "{}}}", ones.join(","))
    }
}

/// The code from `X({0, n})` onto `X({n, n+1, …})`: memory 0, anticipation
/// `n − 1`, and `Φ(w) = 1` exactly for `w = 0ⁿ`.
pub fn exceptional_pair_code(n: Gap) -> Result<SlidingBlockCode> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > 20 {
        return Err(Error::InvalidArgument(format!("n = {n} gives a window longer than 20")));
    }
    let n_us = n as usize;
    let mut table = vec![0u8; 1 << n_us];
    table[0] = 1;
    let code = SlidingBlockCode::new(0, n_us - 1, table)?;
    Ok(code.with_shifts(
        GapSet::finite(vec![0, n])?,
        GapSet::eventually_periodic(vec![n], vec![1])?,
    ))
}

/// Image of the periodic point `u^∞`, returned as its period-`|u|` word.
pub fn apply_code(code: &SlidingBlockCode, u: &Word) -> Result<Word> {
    if u.is_empty() {
        return Err(Error::InvalidArgument("period must be at least 1".into()));
    }
    if let Some(src) = &code.source {
        if !is_periodic_admissible(u, src)? {
            return Err(Error::NonAdmissible(format!("({u})^∞ is not a point of X({src})")));
        }
    }
    Ok(code.apply_cyclic(u.symbols()))
}

/// Result of [`verify_code_conjugacy`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyReport {
    pub passed: bool,
    pub words_checked: usize,
    pub points_checked: usize,
    pub counterexample: Option<String>,
}

impl ConjugacyReport {
    fn fail(words: usize, points: usize, why: String) -> Self {
        ConjugacyReport {
            passed: false,
            words_checked: words,
            points_checked: points,
            counterexample: Some(why),
        }
    }
}

/// Checks that `code` sends the source language into the target language on
/// words of length `len`, and that it is a bijection between the points of
/// period `m` for every `m ≤ len`.
pub fn verify_code_conjugacy(
    code: &SlidingBlockCode,
    source: &GapSet,
    target: &GapSet,
    len: usize,
) -> Result<ConjugacyReport> {
    if len > MAX_VERIFY_LEN {
        return Err(Error::InvalidArgument(format!(
            "length {len} exceeds {MAX_VERIFY_LEN}"
        )));
    }
    let mut words = 0;
    for w in blocks(source, len)? {
        words += 1;
        let image = code.apply_word(&w);
        if !is_admissible(&image, target)? {
            return Ok(ConjugacyReport::fail(
                words,
                0,
                format!("{w} maps to {image}, which is not in the target language"),
            ));
        }
    }
    let mut points = 0;
    for m in 1..=len {
        let mut seen: HashMap<Word, Word> = HashMap::new();
        for bits in 0u64..1 << m {
            let u = Word::from_bits(bits, m);
            if !is_periodic_admissible(&u, source)? {
                continue;
            }
            points += 1;
            let image = code.apply_cyclic(u.symbols());
            if !is_periodic_admissible(&image, target)? {
                return Ok(ConjugacyReport::fail(
                    words,
                    points,
                    format!("({u})^∞ maps to ({image})^∞, which is not a target point"),
                ));
            }
            if let Some(other) = seen.insert(image.clone(), u.clone()) {
                return Ok(ConjugacyReport::fail(
                    words,
                    points,
                    format!("({other})^∞ and ({u})^∞ both map to ({image})^∞"),
                ));
            }
        }
        let (ps, pt) = (periodic_points_bruteforce(source, m)?, periodic_points_bruteforce(target, m)?);
        if ps != pt {
            return Ok(ConjugacyReport::fail(
                words,
                points,
                format!("period {m}: {ps} source points against {pt} target points"),
            ));
        }
    }
    Ok(ConjugacyReport {
        passed: true,
        words_checked: words,
        points_checked: points,
        counterexample: None,
    })
}

/// [`verify_code_conjugacy`] for the exceptional pair `{0, n}` / `{n, n+1, …}`.
pub fn verify_exceptional_pair_conjugacy(n: Gap, len: usize) -> Result<ConjugacyReport> {
    let code = exceptional_pair_code(n)?;
    let (src, tgt) = (code.source.clone().unwrap(), code.target.clone().unwrap());
    verify_code_conjugacy(&code, &src, &tgt, len)
}
