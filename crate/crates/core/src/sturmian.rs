//! Sturmian factor languages given by directive sequences.
//!
//! The characteristic word of a slope with partial quotients
//! `d_1, d_2, …` is the limit of the standard words
//!
//! ```text
//!   s_{-1} = b,  s_0 = a,  s_{k} = s_{k-1}^{d_k} s_{k-2}
//! ```
//!
//! so `[1, 1, 1, …]` yields the Fibonacci word `abaababaabaab…`. A
//! truncated directive `d_1..d_K` fixes the prefix `s_K s_{K-1}` of the
//! limit, since `s_{K-1}` is a prefix of `s_K`. Every biinfinite Sturmian
//! word of the slope has the same factor language, which is what all
//! queries here operate on.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{factors, find_all, special_status, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SturmLang {
    directive: Vec<u32>,
}

impl SturmLang {
    pub fn new(directive: Vec<u32>) -> Result<Self> {
        if directive.is_empty() || directive.contains(&0) {
            return Err(Error::InvalidDirective(directive));
        }
        Ok(SturmLang { directive })
    }

    /// The Fibonacci language, with `depth` ones in the directive.
    pub fn fibonacci(depth: usize) -> Self {
        SturmLang {
            directive: vec![1; depth.max(1)],
        }
    }

    pub fn directive(&self) -> &[u32] {
        &self.directive
    }

    /// A certified prefix of length at least `min(cap, certified_len())`.
    fn prefix_upto(&self, cap: usize) -> Vec<Letter> {
        let mut prev = vec![Letter::B];
        let mut cur = vec![Letter::A];
        for &d in &self.directive {
            if cur.len() >= cap {
                return cur;
            }
            let mut next = Vec::with_capacity(cur.len() * d as usize + prev.len());
            for _ in 0..d {
                next.extend_from_slice(&cur);
                // any power of s_{k-1} up to d_k is a prefix of s_k
                if next.len() >= cap {
                    return next;
                }
            }
            next.extend_from_slice(&prev);
            prev = std::mem::replace(&mut cur, next);
        }
        cur.extend_from_slice(&prev);
        cur
    }

    /// Number of letters of the characteristic word fixed by the directive.
    pub fn certified_len(&self) -> usize {
        let (mut prev, mut cur) = (1usize, 1usize);
        for &d in &self.directive {
            let next = cur.saturating_mul(d as usize).saturating_add(prev);
            prev = cur;
            cur = next;
        }
        cur.saturating_add(prev)
    }

    pub fn characteristic_prefix(&self, len: usize) -> Result<Word> {
        let available = self.certified_len();
        if available < len {
            return Err(Error::NeedsLongerDirective {
                directive: self.directive.clone(),
                needed: len,
                available,
            });
        }
        let mut v = self.prefix_upto(len);
        v.truncate(len);
        Ok(Word::new(v))
    }

    /// The `n + 1` factors of length `n`, grown from ever longer prefixes
    /// until the count is reached.
    pub fn factor_set(&self, n: usize) -> Result<BTreeSet<Word>> {
        let mut len = (4 * n).max(8);
        let available = self.certified_len();
        loop {
            let take = len.min(available);
            let prefix = self.characteristic_prefix(take)?;
            let f = factors(&prefix, n);
            if f.len() == n + 1 {
                return Ok(f);
            }
            if f.len() > n + 1 {
                return Err(Error::InvalidDirective(self.directive.clone()));
            }
            if take == available {
                return Err(Error::NeedsLongerDirective {
                    directive: self.directive.clone(),
                    needed: len * 2,
                    available,
                });
            }
            len *= 2;
        }
    }

    /// Unique right special factor of length `n`, and the unique left one.
    pub fn special_factors(&self, n: usize) -> Result<(Word, Word)> {
        let ext = self.factor_set(n + 1)?;
        let mut right = None;
        let mut left = None;
        for u in self.factor_set(n)? {
            let s = special_status(&ext, &u);
            if s.right_special {
                right = Some(u.clone());
            }
            if s.left_special {
                left = Some(u);
            }
        }
        match (right, left) {
            (Some(r), Some(l)) => Ok((r, l)),
            _ => Err(Error::InvalidDirective(self.directive.clone())),
        }
    }

    pub fn bispecial_at(&self, n: usize) -> Result<Option<Word>> {
        let (r, l) = self.special_factors(n)?;
        Ok((r == l).then_some(r))
    }
}

pub fn characteristic_prefix(lang: &SturmLang, len: usize) -> Result<Word> {
    lang.characteristic_prefix(len)
}

pub fn factor_set(lang: &SturmLang, n: usize) -> Result<BTreeSet<Word>> {
    lang.factor_set(n)
}

/// Bispecial factors of length at most `up_to`, shortest first; `ε` included.
pub fn bispecial_factors(lang: &SturmLang, up_to: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for n in 0..=up_to {
        if let Some(s) = lang.bispecial_at(n)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Quasiperiods of length `n` of every biinfinite word of the language.
///
/// There are none when a bispecial factor of length `n - 1` exists
/// (including `ε` for `n = 1`, since a single letter never covers a binary
/// word). Otherwise they are the length-`n` factors of the shortest
/// bispecial factor of length at least `n`.
pub fn sturmian_quasiperiods(lang: &SturmLang, n: usize) -> Result<BTreeSet<Word>> {
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    if lang.bispecial_at(n - 1)?.is_some() {
        return Ok(BTreeSet::new());
    }
    let mut len = n;
    loop {
        if let Some(s) = lang.bispecial_at(len)? {
            return Ok(factors(&s, n));
        }
        len += 1;
    }
}

/// Successor graph on the length-`n` factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RauzyGraph {
    pub n: usize,
    pub vertices: Vec<Word>,
    /// `(from, to, appended letter)` as vertex indices.
    pub edges: Vec<(usize, usize, char)>,
    /// `c_0 … c_{k-1}`: from the left special vertex to the right special one.
    pub central: Vec<usize>,
    /// The two paths `d` and `e` leading from `c_{k-1}` back to `c_0`,
    /// excluding both endpoints.
    pub branches: [Vec<usize>; 2],
}

impl RauzyGraph {
    /// `(k, ℓ, m)`, summing to `n + 1`.
    pub fn decomposition(&self) -> (usize, usize, usize) {
        (
            self.central.len(),
            self.branches[0].len(),
            self.branches[1].len(),
        )
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    /// Graphviz description.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph rauzy_{} {{\n", self.n);
        for (i, v) in self.vertices.iter().enumerate() {
            let label = if v.is_empty() {
                "ε".to_string()
            } else {
                v.to_string()
            };
            s.push_str(&format!("  v{i} [label=\"{label}\"];\n"));
        }
        for (a, b, l) in &self.edges {
            s.push_str(&format!("  v{a} -> v{b} [label=\"{l}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn rauzy_graph(lang: &SturmLang, n: usize) -> Result<RauzyGraph> {
    let vertices: Vec<Word> = lang.factor_set(n)?.into_iter().collect();
    let index: BTreeMap<&Word, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    for f in lang.factor_set(n + 1)? {
        let a = index[&f.slice(0..n)];
        let b = index[&f.slice(1..n + 1)];
        edges.push((a, b, f[n].to_char()));
    }
    let out = |v: usize| -> Vec<usize> { edges.iter().filter(|e| e.0 == v).map(|e| e.1).collect() };
    let invalid = || Error::InvalidDirective(lang.directive().to_vec());
    let head = (0..vertices.len())
        .find(|&v| edges.iter().filter(|e| e.1 == v).count() == 2)
        .ok_or_else(invalid)?;
    let tail = (0..vertices.len())
        .find(|&v| out(v).len() == 2)
        .ok_or_else(invalid)?;

    let mut central = vec![head];
    let mut cur = head;
    while cur != tail {
        let nx = out(cur);
        if nx.len() != 1 || central.len() > vertices.len() {
            return Err(invalid());
        }
        cur = nx[0];
        central.push(cur);
    }
    let mut branches: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (slot, start) in out(tail).into_iter().enumerate() {
        let mut v = start;
        while v != head {
            branches[slot].push(v);
            let nx = out(v);
            if nx.len() != 1 || branches[slot].len() > vertices.len() {
                return Err(invalid());
            }
            v = nx[0];
        }
    }
    Ok(RauzyGraph {
        n,
        vertices,
        edges,
        central,
        branches,
    })
}

/// Direct coverage decision for `q` over the language: `q` must be a factor,
/// and no length-`2|q|` factor may start with `q` and contain no further
/// occurrence of it (that would be a gap longer than `|q|`).
pub fn windowed_qp_oracle(lang: &SturmLang, q: &Word) -> Result<bool> {
    if q.is_empty() {
        return Ok(false);
    }
    let n = q.len();
    if !lang.factor_set(n)?.contains(q) {
        return Ok(false);
    }
    let long = lang.factor_set(2 * n)?;
    let gap = long
        .iter()
        .any(|v| v[..n] == q[..] && (1..=n).all(|i| v[i..i + n] != q[..]));
    Ok(!gap)
}

/// Occurrences of `q` in the certified prefix; exposed for diagnostics.
pub fn prefix_occurrences(lang: &SturmLang, q: &Word, len: usize) -> Result<Vec<usize>> {
    Ok(find_all(q, &lang.characteristic_prefix(len)?))
}
