//! Overlaps of a word with itself and the `f` relation table between two
//! words of the same length.
//!
//! An overlap of `q` with span `m` is the word of length `2|q| - m` having
//! `q` both as a prefix and as a suffix; it exists iff `m = 0` or `m` is the
//! length of a proper border of `q`. A k-overlap splices `k` copies of `q`
//! with one span per junction, and is *proper* when it contains exactly `k`
//! occurrences of `q`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{find_all, proper_borders, Word};

/// A word together with its overlap spans, computed once from the border array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapSpace {
    q: Word,
    spans: Vec<usize>,
}

impl OverlapSpace {
    pub fn new(q: &Word) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut spans = vec![0];
        spans.extend(proper_borders(q));
        Ok(OverlapSpace {
            q: q.clone(),
            spans,
        })
    }

    pub fn word(&self) -> &Word {
        &self.q
    }

    pub fn spans(&self) -> &[usize] {
        &self.spans
    }

    pub fn has_span(&self, m: usize) -> bool {
        self.spans.binary_search(&m).is_ok()
    }

    fn check(&self, m: usize) -> Result<()> {
        if self.has_span(m) {
            Ok(())
        } else {
            Err(Error::UndefinedSpan {
                word: self.q.to_string(),
                span: m,
            })
        }
    }

    pub fn overlap(&self, m: usize) -> Result<Word> {
        self.k_overlap(&[m])
    }

    pub fn k_overlap(&self, spans: &[usize]) -> Result<Word> {
        for &m in spans {
            self.check(m)?;
        }
        let n = self.q.len();
        let total = (spans.len() + 1) * n - spans.iter().sum::<usize>();
        let mut out = Vec::with_capacity(total);
        out.extend_from_slice(&self.q);
        for &m in spans {
            out.extend_from_slice(&self.q[m..]);
        }
        Ok(Word::new(out))
    }

    pub fn is_proper(&self, spans: &[usize]) -> Result<bool> {
        let w = self.k_overlap(spans)?;
        Ok(find_all(&self.q, &w).len() == spans.len() + 1)
    }

    /// Position of `r` in the proper overlap of span `m`, if both exist.
    ///
    /// A proper overlap of `q` holds at most one occurrence of any other word
    /// of the same length, so the first hit is the only one.
    pub fn occ(&self, r: &Word, m: usize) -> Option<usize> {
        if !self.has_span(m) {
            return None;
        }
        let v = self.overlap(m).ok()?;
        if find_all(&self.q, &v).len() != 2 {
            return None;
        }
        find_all(r, &v).first().copied()
    }
}

pub fn border_spans(q: &Word) -> Result<Vec<usize>> {
    Ok(OverlapSpace::new(q)?.spans)
}

pub fn overlap(q: &Word, m: usize) -> Result<Word> {
    OverlapSpace::new(q)?.overlap(m)
}

pub fn k_overlap(q: &Word, spans: &[usize]) -> Result<Word> {
    OverlapSpace::new(q)?.k_overlap(spans)
}

pub fn is_proper(q: &Word, spans: &[usize]) -> Result<bool> {
    OverlapSpace::new(q)?.is_proper(spans)
}

pub(crate) fn check_couple(q: &Word, r: &Word) -> Result<()> {
    if q.is_empty() || r.is_empty() {
        return Err(Error::EmptyWord);
    }
    if q.len() != r.len() {
        return Err(Error::LengthMismatch {
            q: q.to_string(),
            r: r.to_string(),
        });
    }
    if q == r {
        return Err(Error::EqualWords(q.to_string()));
    }
    Ok(())
}

pub fn occ(q: &Word, r: &Word, m: usize) -> Result<Option<usize>> {
    check_couple(q, r)?;
    Ok(OverlapSpace::new(q)?.occ(r, m))
}

/// `f(m, n) = m + occ(m) - occ(n)` over every span pair where both
/// positions are defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTable {
    space: OverlapSpace,
    r: Word,
    occ: BTreeMap<usize, usize>,
    f: BTreeMap<(usize, usize), i64>,
}

impl FTable {
    pub fn q(&self) -> &Word {
        self.space.word()
    }

    pub fn r(&self) -> &Word {
        &self.r
    }

    pub fn space(&self) -> &OverlapSpace {
        &self.space
    }

    pub fn spans(&self) -> &[usize] {
        self.space.spans()
    }

    pub fn occ(&self, m: usize) -> Option<usize> {
        self.occ.get(&m).copied()
    }

    pub fn occ_map(&self) -> &BTreeMap<usize, usize> {
        &self.occ
    }

    /// Spans whose proper overlap contains `r`.
    pub fn domain(&self) -> Vec<usize> {
        self.occ.keys().copied().collect()
    }

    pub fn get(&self, m: usize, n: usize) -> Option<i64> {
        self.f.get(&(m, n)).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.f.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn to_json(&self) -> FTableJson {
        FTableJson {
            q: self.q().clone(),
            r: self.r.clone(),
            spans: self.spans().to_vec(),
            occ: self.occ.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            f: self
                .entries()
                .map(|((m, n), value)| FEntry { m, n, value })
                .collect(),
        }
    }
}

/// Serialized form of an [`FTable`]; undefined entries are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FTableJson {
    pub q: Word,
    pub r: Word,
    pub spans: Vec<usize>,
    pub occ: BTreeMap<String, usize>,
    pub f: Vec<FEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FEntry {
    pub m: usize,
    pub n: usize,
    pub value: i64,
}

/// Builds the table in `O(|q|^2)`: one linear search per span.
pub fn f_table(q: &Word, r: &Word) -> Result<FTable> {
    check_couple(q, r)?;
    let space = OverlapSpace::new(q)?;
    let occ: BTreeMap<usize, usize> = space
        .spans()
        .iter()
        .filter_map(|&m| space.occ(r, m).map(|p| (m, p)))
        .collect();
    let mut f = BTreeMap::new();
    for (&m, &om) in &occ {
        for (&n, &on) in &occ {
            f.insert((m, n), m as i64 + om as i64 - on as i64);
        }
    }
    Ok(FTable {
        space,
        r: r.clone(),
        occ,
        f,
    })
}
