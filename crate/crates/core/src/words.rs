//! Free-monoid words over the alphabet `a1..an`.
//!
//! Letters are 1-based. Every piece of circular index arithmetic in the crate
//! goes through [`circ`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Maps an arbitrary integer onto the circular range `1..=n`.
#[inline]
pub fn circ(k: i64, n: usize) -> usize {
    debug_assert!(n > 0);
    ((k - 1).rem_euclid(n as i64) + 1) as usize
}

/// Clockwise distance from `from` to `to` on the circle `1..=n`.
#[inline]
pub fn clockwise(from: usize, to: usize, n: usize) -> usize {
    (to as i64 - from as i64).rem_euclid(n as i64) as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Letter(u16);

impl Letter {
    pub fn new(index: usize, rank: usize) -> Result<Self> {
        if index == 0 || index > rank {
            return Err(Error::LetterOutOfRange { index, rank });
        }
        Ok(Letter(index as u16))
    }

    pub(crate) fn raw(index: usize) -> Self {
        Letter(index as u16)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A word over `a1..a_rank`; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Word { rank, letters: Vec::new() })
    }

    pub fn from_indices<I>(rank: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let letters = indices
            .into_iter()
            .map(|i| Letter::new(i, rank))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { rank, letters })
    }

    /// Builds a word from indices already known to lie in `1..=rank`.
    pub(crate) fn from_raw(rank: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let letters: Vec<Letter> = indices.into_iter().map(Letter::raw).collect();
        debug_assert!(letters.iter().all(|l| (1..=rank).contains(&l.index())));
        Word { rank, letters }
    }

    pub fn generator(index: usize, rank: usize) -> Result<Self> {
        Word::from_indices(rank, [index])
    }

    /// Parses the dotted syntax `a1.a3.a2`; `1` (or the empty string) is the identity.
    pub fn parse(input: &str, rank: usize) -> Result<Self> {
        let s = input.trim();
        if s.is_empty() || s == "1" {
            return Word::empty(rank);
        }
        let mut indices = Vec::new();
        for part in s.split('.') {
            let part = part.trim();
            let digits = part.strip_prefix('a').ok_or_else(|| Error::Parse {
                input: input.to_string(),
                reason: format!("expected a letter like a3, found {part:?}"),
            })?;
            let index = usize::from_str(digits).map_err(|_| Error::Parse {
                input: input.to_string(),
                reason: format!("bad letter index {digits:?}"),
            })?;
            indices.push(index);
        }
        Word::from_indices(rank, indices)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|l| l.index())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn content(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }

    /// Content as a membership table indexed `1..=rank` (slot 0 unused).
    pub(crate) fn content_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.rank + 1];
        for l in &self.letters {
            mask[l.index()] = true;
        }
        mask
    }

    /// The longest subword whose content lies in `keep`.
    pub fn restrict(&self, keep: &BTreeSet<Letter>) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().copied().filter(|l| keep.contains(l)).collect(),
        }
    }

    /// True when `self` embeds into `t` as a (scattered) subsequence.
    pub fn is_subword_of(&self, t: &Word) -> bool {
        let mut it = t.letters.iter();
        self.letters.iter().all(|l| it.any(|m| m == l))
    }

    /// True when `self` occurs in `t` as a contiguous factor.
    pub fn occurs_in(&self, t: &Word) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(t.letters.windows(self.len()).any(|w| w == self.letters.as_slice()))
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { rank: self.rank, letters })
    }

    pub fn push(&mut self, letter: Letter) {
        debug_assert!(letter.index() <= self.rank);
        self.letters.push(letter);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.letters.iter().map(|l| l.index()))
    }
}
