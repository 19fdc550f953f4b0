//! Relations between two words `q`, `r` of the same length, read off the
//! `f` table, and the three-way classification they induce on
//! biinfinite words:
//!
//! ```text
//!   Definite ──► Compatible ◄── Positive
//!        ▲                          ▲
//!        └──── Definite+Positive ───┘
//!
//!   Compatible         ⇔ ∃ w with quasiperiods q and r
//!   Positive           ⇔ same derivated sequences along q and r
//!   Definite           ⇔ every q-quasiperiodic w has infinitely many r
//!   Definite+Positive  ⇔ every q-quasiperiodic w is r-quasiperiodic
//! ```

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::overlaps::{f_table, FTable, FTableJson};
use crate::word::Word;

pub fn is_compatible(t: &FTable) -> bool {
    !t.is_empty()
}

/// Span pairs `(m, n)` whose 3-overlap of `q` exists and is proper.
pub fn proper_three_overlaps(t: &FTable) -> Vec<(usize, usize)> {
    let space = t.space();
    let spans = space.spans();
    let mut out = Vec::new();
    for &m in spans {
        for &n in spans {
            if space.is_proper(&[m, n]).unwrap_or(false) {
                out.push((m, n));
            }
        }
    }
    out
}

pub fn is_definite(t: &FTable) -> bool {
    proper_three_overlaps(t)
        .into_iter()
        .all(|(m, n)| t.get(m, n).is_some())
}

pub fn is_positive(t: &FTable) -> bool {
    !t.is_empty() && t.entries().all(|(_, v)| v >= 0)
}

/// True iff `f` is defined and nonnegative on every listed couple.
pub fn nonnegative_on(t: &FTable, couples: &[(usize, usize)]) -> bool {
    couples
        .iter()
        .all(|&(m, n)| matches!(t.get(m, n), Some(v) if v >= 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoupleKind {
    /// No biinfinite word has both quasiperiods.
    Incompatible,
    /// Every q-quasiperiodic biinfinite word is r-quasiperiodic.
    ImpliesQuasiperiodicity,
    /// Some word has both quasiperiods, some has only `q`.
    CompatibleOnly,
}

impl CoupleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CoupleKind::Incompatible => "incompatible",
            CoupleKind::ImpliesQuasiperiodicity => "implies-quasiperiodicity",
            CoupleKind::CompatibleOnly => "compatible-only",
        }
    }
}

impl fmt::Display for CoupleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Span cycles whose periodic words `V_q(… m, n, m, n …)` back the class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    /// A proper 3-overlap of `q`; its periodic word is q- but not r-quasiperiodic.
    OnlyQ { pair: (usize, usize) },
    /// `both` repeats a span in the domain of `f` (q- and r-quasiperiodic);
    /// `only_q` is a proper 3-overlap with `f` undefined or negative.
    Both {
        both: (usize, usize),
        only_q: (usize, usize),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoupleClass {
    pub kind: CoupleKind,
    pub witness: Option<Witness>,
}

pub fn classify_table(t: &FTable) -> CoupleClass {
    let proper = proper_three_overlaps(t);
    if !is_compatible(t) {
        return CoupleClass {
            kind: CoupleKind::Incompatible,
            witness: proper.first().map(|&pair| Witness::OnlyQ { pair }),
        };
    }
    if is_definite(t) && is_positive(t) {
        return CoupleClass {
            kind: CoupleKind::ImpliesQuasiperiodicity,
            witness: None,
        };
    }
    let both = t
        .domain()
        .first()
        .map(|&m| (m, m))
        .expect("compatible table has a nonempty domain");
    let only_q = proper
        .iter()
        .copied()
        .find(|&(m, n)| t.get(m, n).is_none_or(|v| v < 0))
        .or_else(|| t.entries().find(|&(_, v)| v < 0).map(|(k, _)| k));
    CoupleClass {
        kind: CoupleKind::CompatibleOnly,
        witness: only_q.map(|only_q| Witness::Both { both, only_q }),
    }
}

pub fn classify(q: &Word, r: &Word) -> Result<CoupleClass> {
    Ok(classify_table(&f_table(q, r)?))
}

/// Whether every q-quasiperiodic biinfinite word contains infinitely many
/// occurrences of `r`; this is exactly definiteness of the couple.
pub fn definiteness_meaning(q: &Word, r: &Word) -> Result<bool> {
    Ok(is_definite(&f_table(q, r)?))
}

/// JSON payload of `classify`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyJson {
    pub class: CoupleKind,
    pub witness: Option<Witness>,
    pub compatible: bool,
    pub definite: bool,
    pub positive: bool,
    pub f_table: FTableJson,
}

pub fn classify_json(q: &Word, r: &Word) -> Result<ClassifyJson> {
    let t = f_table(q, r)?;
    let c = classify_table(&t);
    Ok(ClassifyJson {
        class: c.kind,
        witness: c.witness,
        compatible: is_compatible(&t),
        definite: is_definite(&t),
        positive: is_positive(&t),
        f_table: t.to_json(),
    })
}
