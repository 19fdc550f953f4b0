//! Letters, finite words, and the string primitives shared by every other
//! module: border arrays, linear-time occurrence search, factor sets, and
//! right/left special status.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Deref, Range};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported alphabet; letters print as `'a'..='z'`.
pub const MAX_ALPHABET: usize = 26;

/// A letter, stored as its index in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const A: Letter = Letter(0);
    pub const B: Letter = Letter(1);

    pub fn new(index: usize) -> Result<Self> {
        if index < MAX_ALPHABET {
            Ok(Letter(index as u8))
        } else {
            Err(Error::LetterOutOfRange {
                index,
                size: MAX_ALPHABET,
            })
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        if c.is_ascii_lowercase() {
            Ok(Letter(c as u8 - b'a'))
        } else {
            Err(Error::InvalidLetter(c))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn to_char(self) -> char {
        (b'a' + self.0) as char
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word. Ordering is lexicographic, a proper prefix sorting first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }

    /// Builds a word from alphabet indices, panicking on indices `>= 26`.
    pub fn from_indices(indices: &[usize]) -> Self {
        Word(
            indices
                .iter()
                .map(|&i| Letter::new(i).expect("letter index below 26"))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn slice(&self, range: Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn with_suffix(&self, letter: Letter) -> Word {
        let mut w = self.clone();
        w.0.push(letter);
        w
    }

    pub fn with_prefix(&self, letter: Letter) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// `|w|_α`, the number of occurrences of one letter.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Size of the smallest alphabet `{a, …}` containing every letter.
    pub fn alphabet_size(&self) -> usize {
        self.0.iter().map(|l| l.index() + 1).max().unwrap_or(0)
    }

    pub fn primitive_root(&self) -> Word {
        Word(primitive_root(&self.0).to_vec())
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && primitive_root(&self.0).len() == self.len()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                Letter::from_char(c).map_err(|_| Error::Parse {
                    literal: s.to_string(),
                    reason: format!("unexpected character {c:?}, words use 'a'..='z'"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Failure function: entry `i` is the length of the longest proper border
/// of `s[..=i]`.
pub fn border_array<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut fail = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Lengths of all proper nonempty borders of `s`, ascending.
pub fn proper_borders<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let fail = border_array(s);
    let mut out = Vec::new();
    let mut b = fail.last().copied().unwrap_or(0);
    while b > 0 {
        out.push(b);
        b = fail[b - 1];
    }
    out.reverse();
    out
}

/// Shortest `p` with `s = p^k`.
pub fn primitive_root<T: PartialEq>(s: &[T]) -> &[T] {
    if s.is_empty() {
        return s;
    }
    let period = s.len() - border_array(s)[s.len() - 1];
    if s.len().is_multiple_of(period) {
        &s[..period]
    } else {
        s
    }
}

/// Knuth–Morris–Pratt search: every start position of `pattern` in `text`.
pub fn find_all<T: PartialEq>(pattern: &[T], text: &[T]) -> Vec<usize> {
    let mut out = Vec::new();
    if pattern.is_empty() {
        return (0..=text.len()).collect();
    }
    if pattern.len() > text.len() {
        return out;
    }
    let fail = border_array(pattern);
    let mut k = 0;
    for (i, c) in text.iter().enumerate() {
        while k > 0 && *c != pattern[k] {
            k = fail[k - 1];
        }
        if *c == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            out.push(i + 1 - k);
            k = fail[k - 1];
        }
    }
    out
}

/// All positions where `u` occurs in `w`, ascending.
pub fn occurrences(u: &Word, w: &Word) -> Vec<usize> {
    find_all(u, w)
}

/// Distinct factors of length `n`; empty when `n > |w|`.
pub fn factors(w: &Word, n: usize) -> BTreeSet<Word> {
    if n > w.len() {
        return BTreeSet::new();
    }
    (0..=w.len() - n)
        .map(|i| Word::from_slice(&w[i..i + n]))
        .collect()
}

/// Extension data of a length-`n` word against a factor set of length `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialStatus {
    pub right_special: bool,
    pub left_special: bool,
    /// Right extensions `uβ` present in the factor set.
    pub successors: BTreeSet<Word>,
    /// Left extensions `αu` present in the factor set.
    pub predecessors: BTreeSet<Word>,
}

pub fn special_status(extended: &BTreeSet<Word>, u: &Word) -> SpecialStatus {
    let n = u.len();
    let mut successors = BTreeSet::new();
    let mut predecessors = BTreeSet::new();
    for f in extended.iter().filter(|f| f.len() == n + 1) {
        if f[..n] == u[..] {
            successors.insert(f.clone());
        }
        if f[1..] == u[..] {
            predecessors.insert(f.clone());
        }
    }
    SpecialStatus {
        right_special: successors.len() >= 2,
        left_special: predecessors.len() >= 2,
        successors,
        predecessors,
    }
}
