use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Semigroup;
use crate::error::{Error, Result};

/// A generator of the free semigroup, written as a family character plus an
/// index: `x1`, `y2`, `z10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub family: char,
    pub index: u32,
}

impl Letter {
    pub const fn new(family: char, index: u32) -> Self {
        Letter { family, index }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = chars
            .next()
            .filter(|c| c.is_ascii_alphabetic())
            .ok_or_else(|| Error::Parse(format!("bad letter `{s}`")))?;
        let index = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter `{s}`")))?;
        Ok(Letter { family, index })
    }
}

/// A nonempty word in the free semigroup. There is no empty word: the free
/// semigroup has no unit.
///
/// Ordered by length, then lexicographically on letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The least rotation under the word order. Central functions on the free
    /// semigroup are exactly the functions of this value.
    pub fn least_rotation(&self) -> Word {
        (0..self.0.len())
            .map(|k| {
                let mut v = self.0[k..].to_vec();
                v.extend_from_slice(&self.0[..k]);
                Word(v)
            })
            .min()
            .expect("nonempty")
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Semigroup for Word {
    fn try_product(&self, rhs: &Self) -> Result<Self> {
        let mut v = Vec::with_capacity(self.0.len() + rhs.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&rhs.0);
        Ok(Word(v))
    }
}

impl fmt::Display for Word {
    /// `x1*y1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `x1*y2*x1`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split('*')
            .map(|t| t.trim().parse())
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}
