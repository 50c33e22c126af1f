use std::collections::BTreeMap;

use super::{Letter, Semigroup, Word};
use crate::error::{Error, Result};

/// A homomorphism out of the free semigroup, fixed by the images of letters.
/// Multiplicativity holds by construction: a word maps to the ordered product
/// of its letters' images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupHom<T> {
    images: BTreeMap<Letter, T>,
}

impl<T: Semigroup> SemigroupHom<T> {
    pub fn new(images: impl IntoIterator<Item = (Letter, T)>) -> Self {
        SemigroupHom {
            images: images.into_iter().collect(),
        }
    }

    pub fn image_of(&self, letter: Letter) -> Option<&T> {
        self.images.get(&letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = &Letter> {
        self.images.keys()
    }

    pub fn apply(&self, word: &Word) -> Result<T> {
        let mut letters = word.letters().iter();
        let first = letters.next().expect("words are nonempty");
        let mut acc = self.lookup(*first)?.clone();
        for &l in letters {
            acc = acc.try_product(self.lookup(l)?)?;
        }
        Ok(acc)
    }

    fn lookup(&self, l: Letter) -> Result<&T> {
        self.images
            .get(&l)
            .ok_or_else(|| Error::UnknownLetter(l.to_string()))
    }
}
