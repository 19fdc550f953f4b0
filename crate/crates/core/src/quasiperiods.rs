//! Quasiperiodicity of finite words and of eventually periodic biinfinite
//! words, chains of same-length quasiperiods, and the local rules that
//! relate quasiperiods of lengths `n` and `n + 1`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::biword::BiWord;
use crate::derivated::derivated_sequence;
use crate::error::{Error, Result};
use crate::overlaps::{check_couple, f_table, OverlapSpace};
use crate::relations::nonnegative_on;
use crate::word::{find_all, proper_borders, special_status, Letter, Word};

fn covers(n: usize, occ: &[usize], q_len: usize) -> bool {
    // every gap at most |q|, first at 0, last flush with the end
    match (occ.first(), occ.last()) {
        (Some(&0), Some(&last)) => {
            last + q_len == n && occ.windows(2).all(|p| p[1] - p[0] <= q_len)
        }
        _ => false,
    }
}

pub fn is_quasiperiod_finite(q: &Word, w: &Word) -> bool {
    if q.is_empty() || q.len() > w.len() {
        return false;
    }
    covers(w.len(), &find_all(q, w), q.len())
}

/// Proper quasiperiods `q != w`; all of them are borders of `w`.
pub fn quasiperiods_finite(w: &Word) -> BTreeSet<Word> {
    proper_borders(w)
        .into_iter()
        .map(|b| w.slice(0..b))
        .filter(|q| is_quasiperiod_finite(q, w))
        .collect()
}

/// Exact decision of whether `q` covers every position of `w`.
///
/// Coverage of a position depends only on the `2|q| - 1` letters around it,
/// so beyond `|q|` letters into either periodic tail it repeats with the
/// period. Checking one extra period on each side is therefore enough.
pub fn is_quasiperiod_bi(q: &Word, w: &BiWord) -> bool {
    if q.is_empty() {
        return false;
    }
    let n = q.len() as i64;
    let (lp, rp) = (w.left().len() as i64, w.right().len() as i64);
    let c = w.center().len() as i64;
    let lo = -n - lp;
    let hi = c + n + rp;
    let start = lo - n;
    let win = w.window(start, hi + n);
    let mut covered = vec![false; (hi - lo + 1) as usize];
    for p in find_all(q, &win) {
        let a = p as i64 + start;
        for i in a.max(lo)..=(a + n - 1).min(hi) {
            covered[(i - lo) as usize] = true;
        }
    }
    covered.into_iter().all(|x| x)
}

/// All quasiperiods of length `n`: factors of that length that pass the
/// direct coverage test.
pub fn quasiperiods_of_length(w: &BiWord, n: usize) -> BTreeSet<Word> {
    if n == 0 {
        return BTreeSet::new();
    }
    w.factor_set(n)
        .into_iter()
        .filter(|q| is_quasiperiod_bi(q, w))
        .collect()
}

/// A maximal run `u_1 → … → u_k` of quasiperiods linked by unique successors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Chain {
    pub members: Vec<Word>,
    /// Set for periodic words where the run closes on itself; the cycle is
    /// cut at its lexicographically least member.
    pub cyclic: bool,
}

impl Chain {
    pub fn contains(&self, u: &Word) -> bool {
        self.members.contains(u)
    }
}

/// Successor map of length-`n` factors: `αu → uβ` for each factor `αuβ`.
struct SuccessorGraph {
    next: BTreeMap<Word, BTreeSet<Word>>,
    prev: BTreeMap<Word, BTreeSet<Word>>,
}

impl SuccessorGraph {
    fn new(w: &BiWord, n: usize) -> Self {
        let mut next: BTreeMap<Word, BTreeSet<Word>> = BTreeMap::new();
        let mut prev: BTreeMap<Word, BTreeSet<Word>> = BTreeMap::new();
        for f in w.factor_set(n + 1) {
            let a = f.slice(0..n);
            let b = f.slice(1..n + 1);
            next.entry(a.clone()).or_default().insert(b.clone());
            prev.entry(b).or_default().insert(a);
        }
        SuccessorGraph { next, prev }
    }

    fn right_special(&self, u: &Word) -> bool {
        self.next.get(u).is_some_and(|s| s.len() >= 2)
    }

    fn left_special(&self, u: &Word) -> bool {
        self.prev.get(u).is_some_and(|s| s.len() >= 2)
    }

    fn unique_next(&self, u: &Word) -> Option<&Word> {
        match self.next.get(u) {
            Some(s) if s.len() == 1 => s.iter().next(),
            _ => None,
        }
    }
}

pub fn chains_of_length(w: &BiWord, n: usize) -> Vec<Chain> {
    let qps = quasiperiods_of_length(w, n);
    let graph = SuccessorGraph::new(w, n);
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut chains = Vec::new();

    let walk = |head: &Word, seen: &mut BTreeSet<Word>| -> Chain {
        let mut members = vec![head.clone()];
        seen.insert(head.clone());
        let mut cur = head.clone();
        let mut cyclic = false;
        while let Some(nx) = graph.unique_next(&cur) {
            if nx == head {
                cyclic = true;
                break;
            }
            if !qps.contains(nx) || graph.left_special(nx) || seen.contains(nx) {
                break;
            }
            members.push(nx.clone());
            seen.insert(nx.clone());
            cur = nx.clone();
        }
        Chain { members, cyclic }
    };

    // heads: members with no quasiperiod predecessor feeding them uniquely
    for u in &qps {
        let fed = graph
            .prev
            .get(u)
            .filter(|p| p.len() == 1)
            .and_then(|p| p.iter().next())
            .is_some_and(|p| qps.contains(p) && !graph.right_special(p));
        if !fed {
            chains.push(walk(u, &mut seen));
        }
    }
    // what remains lies on cycles; BTreeSet order cuts each at its least member
    for u in &qps {
        if !seen.contains(u) {
            chains.push(walk(u, &mut seen));
        }
    }
    chains.sort();
    chains
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

pub fn is_right_special(w: &BiWord, u: &Word) -> bool {
    special_status(&w.factor_set(u.len() + 1), u).right_special
}

pub fn is_left_special(w: &BiWord, u: &Word) -> bool {
    special_status(&w.factor_set(u.len() + 1), u).left_special
}

/// Rule for `qα` given quasiperiod `q`: it is a quasiperiod iff `q` is not
/// right special.
pub fn thm1_extend_right(w: &BiWord, q: &Word, alpha: Letter) -> Result<bool> {
    require(is_quasiperiod_bi(q, w), || {
        format!("{q} is not a quasiperiod of {w}")
    })?;
    let qa = q.with_suffix(alpha);
    require(w.contains_factor(&qa), || {
        format!("{qa} is not a factor of {w}")
    })?;
    Ok(!is_right_special(w, q))
}

/// Mirror of [`thm1_extend_right`] for `αq`.
pub fn thm1_extend_left(w: &BiWord, q: &Word, alpha: Letter) -> Result<bool> {
    require(is_quasiperiod_bi(q, w), || {
        format!("{q} is not a quasiperiod of {w}")
    })?;
    let aq = q.with_prefix(alpha);
    require(w.contains_factor(&aq), || {
        format!("{aq} is not a factor of {w}")
    })?;
    Ok(!is_left_special(w, q))
}

fn square_rule(w: &BiWord, q: &Word, square: &Word) -> bool {
    !w.contains_factor(square) || find_all(q, square).len() >= 3
}

/// Rule for the prefix `q` of a quasiperiod `qα`: `q` is a quasiperiod iff
/// `qαqα` is not a factor or contains `q` at least three times.
pub fn thm1_shrink(w: &BiWord, qa: &Word) -> Result<bool> {
    require(qa.len() >= 2, || format!("{qa} is shorter than 2"))?;
    require(is_quasiperiod_bi(qa, w), || {
        format!("{qa} is not a quasiperiod of {w}")
    })?;
    let q = qa.slice(0..qa.len() - 1);
    Ok(square_rule(w, &q, &qa.concat(qa)))
}

/// Rule for the suffix `q` of a quasiperiod `αq`, using the square `αqαq`.
pub fn thm1_shrink_left(w: &BiWord, aq: &Word) -> Result<bool> {
    require(aq.len() >= 2, || format!("{aq} is shorter than 2"))?;
    require(is_quasiperiod_bi(aq, w), || {
        format!("{aq} is not a quasiperiod of {w}")
    })?;
    let q = aq.slice(1..aq.len());
    Ok(square_rule(w, &q, &aq.concat(aq)))
}

/// Length-`n` successors `uβ` of `αu = q`.
pub fn successors(w: &BiWord, q: &Word) -> BTreeSet<Word> {
    let n = q.len();
    w.factor_set(n + 1)
        .into_iter()
        .filter(|f| f[..n] == q[..])
        .map(|f| f.slice(1..n + 1))
        .collect()
}

/// Length-`n` predecessors `αu` of `uβ = q`.
pub fn predecessors(w: &BiWord, q: &Word) -> BTreeSet<Word> {
    let n = q.len();
    w.factor_set(n + 1)
        .into_iter()
        .filter(|f| f[1..] == q[..])
        .map(|f| f.slice(0..n))
        .collect()
}

/// The periodic word whose consecutive `q` occurrences cycle through the
/// given spans, with an occurrence of `q` at position 0.
pub fn bi_word_from_spans(q: &Word, cycle: &[usize]) -> Result<BiWord> {
    if cycle.is_empty() {
        return Err(Error::Precondition("span cycle must be nonempty".into()));
    }
    let space = OverlapSpace::new(q)?;
    // validates every span
    space.k_overlap(cycle)?;
    let mut period = Word::empty();
    for &m in cycle {
        period = period.concat(&q.slice(0..q.len() - m));
    }
    BiWord::periodic(period)
}

/// Span pairs `(m, n)` whose proper 3-overlap of `q` occurs in `w`.
pub fn occurring_couples(w: &BiWord, q: &Word) -> Result<Vec<(usize, usize)>> {
    let space = OverlapSpace::new(q)?;
    let mut out = Vec::new();
    for &m in space.spans() {
        for &n in space.spans() {
            let v = space.k_overlap(&[m, n])?;
            if find_all(q, &v).len() == 3 && w.contains_factor(&v) {
                out.push((m, n));
            }
        }
    }
    Ok(out)
}

fn check_pair_in(w: &BiWord, q: &Word, r: &Word) -> Result<()> {
    check_couple(q, r)?;
    require(is_quasiperiod_bi(q, w), || {
        format!("{q} is not a quasiperiod of {w}")
    })?;
    require(is_quasiperiod_bi(r, w), || {
        format!("{r} is not a quasiperiod of {w}")
    })
}

pub fn same_chain(w: &BiWord, q: &Word, r: &Word) -> Result<bool> {
    check_pair_in(w, q, r)?;
    Ok(chains_of_length(w, q.len())
        .iter()
        .any(|c| c.contains(q) && c.contains(r)))
}

/// The three per-word predicates relating two same-length quasiperiods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairRelation {
    /// `f(m, n) >= 0` on every occurring couple.
    pub f_nonnegative: bool,
    /// Derivated sequences agree up to shift.
    pub same_derivated: bool,
    pub same_chain: bool,
}

impl PairRelation {
    pub fn consistent(&self) -> bool {
        self.f_nonnegative == self.same_derivated && self.same_derivated == self.same_chain
    }
}

pub fn pair_relation(w: &BiWord, q: &Word, r: &Word) -> Result<PairRelation> {
    check_pair_in(w, q, r)?;
    let t = f_table(q, r)?;
    let couples = occurring_couples(w, q)?;
    let dq = derivated_sequence(w, q)?;
    let dr = derivated_sequence(w, r)?;
    Ok(PairRelation {
        f_nonnegative: nonnegative_on(&t, &couples),
        same_derivated: dq.equal_up_to_shift(&dr),
        same_chain: same_chain(w, q, r)?,
    })
}
