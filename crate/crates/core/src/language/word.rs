use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A finite word over `{0, 1}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if symbols.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArgument("words are over the alphabet {0,1}".into()));
        }
        Ok(Word(symbols))
    }

    pub(crate) fn from_symbols(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&b| b <= 1));
        Word(symbols)
    }

    pub fn zeros(n: usize) -> Self {
        Word(vec![0; n])
    }

    /// The low `len` bits of `bits`, most significant first.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        Word((0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect())
    }

    /// Inverse of [`Word::from_bits`]; `None` past 64 symbols.
    pub fn to_bits(&self) -> Option<u64> {
        (self.0.len() <= 64).then(|| self.0.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::syntax(s, format!("unexpected symbol `{c}`"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}
