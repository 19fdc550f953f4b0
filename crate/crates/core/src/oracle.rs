//! Brute-force reference checks.
//!
//! Everything in this module recomputes what it needs from letters alone:
//! its own border scan, its own periodic-word construction, its own
//! coverage test. No production path calls into it; it backs the test
//! suites and the `verify` command.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::biword::BiWord;
use crate::derivated::derivated_sequence;
use crate::overlaps::{f_table, occ};
use crate::par::*;
use crate::quasiperiods::{
    is_quasiperiod_bi, is_right_special, pair_relation, predecessors, successors, thm1_extend_left,
    thm1_extend_right, thm1_shrink, thm1_shrink_left,
};
use crate::relations::{classify_table, is_compatible, is_definite, is_positive, CoupleKind};
use crate::word::{Letter, Word};

/// Bounds for the exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub alphabet_size: usize,
    /// Longest `q` in couple sweeps. Local-rule sweeps use periods, centers
    /// and quasiperiods of up to `max_len - 1` letters.
    pub max_len: usize,
    /// Longest span cycle used to build periodic witnesses.
    pub max_cycle: usize,
    /// Minimum number of period copies per side in windowed coverage checks.
    pub max_window_copies: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            alphabet_size: 2,
            max_len: 6,
            max_cycle: 2,
            max_window_copies: 6,
        }
    }
}

impl SweepConfig {
    pub fn is_valid(&self) -> bool {
        self.alphabet_size >= 1
            && self.alphabet_size <= crate::word::MAX_ALPHABET
            && self.max_len >= 1
            && self.max_cycle >= 1
            && self.max_window_copies >= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub checked: usize,
    pub discrepancies: Vec<String>,
}

impl SweepReport {
    fn new(name: &str, results: Vec<(usize, Vec<String>)>) -> Self {
        let checked = results.iter().map(|r| r.0).sum();
        let discrepancies = results.into_iter().flat_map(|r| r.1).collect();
        SweepReport {
            name: name.to_string(),
            checked,
            discrepancies,
        }
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Marks every position inside an occurrence of `q` and checks all are marked.
pub fn naive_cover(q: &Word, w: &Word) -> bool {
    if q.is_empty() || q.len() > w.len() {
        return false;
    }
    let mut covered = vec![false; w.len()];
    for i in 0..=w.len() - q.len() {
        if w[i..i + q.len()] == q[..] {
            for c in &mut covered[i..i + q.len()] {
                *c = true;
            }
        }
    }
    covered.into_iter().all(|c| c)
}

pub fn all_words(alphabet: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (0..alphabet).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|v| Word::from_indices(&v)).collect()
}

/// Spans of overlaps of `q`, by comparing prefixes with suffixes.
fn naive_spans(q: &Word) -> Vec<usize> {
    (0..q.len())
        .filter(|&m| q[..m] == q[q.len() - m..])
        .collect()
}

fn naive_count(u: &[Letter], t: &[Letter]) -> usize {
    if u.len() > t.len() {
        return 0;
    }
    (0..=t.len() - u.len())
        .filter(|&i| t[i..i + u.len()] == *u)
        .count()
}

/// Period of the biinfinite word whose `q` copies are spliced with `cycle`.
fn cycle_period(q: &Word, cycle: &[usize]) -> Vec<Letter> {
    cycle
        .iter()
        .flat_map(|&m| q[..q.len() - m].to_vec())
        .collect()
}

fn repeat(period: &[Letter], len: usize) -> Vec<Letter> {
    period.iter().copied().cycle().take(len).collect()
}

/// Coverage of the biinfinite word `period^ℤ` by `q`.
fn periodic_cover(q: &Word, period: &[Letter]) -> bool {
    let (n, p) = (q.len(), period.len());
    let text = repeat(period, p + 2 * n);
    let mut covered = vec![false; text.len()];
    for i in 0..=text.len() - n {
        if text[i..i + n] == q[..] {
            covered[i..i + n].iter_mut().for_each(|c| *c = true);
        }
    }
    covered[n..n + p].iter().all(|&c| c)
}

/// Occurrences of `r` starting in one period of `period^ℤ`.
fn periodic_count(r: &Word, period: &[Letter]) -> usize {
    let p = period.len();
    let text = repeat(period, p + r.len());
    (0..p).filter(|&i| text[i..i + r.len()] == r[..]).count()
}

fn bi_letter(b: &BiWord, i: i64) -> Letter {
    let (l, c, r) = (b.left(), b.center(), b.right());
    if i < 0 {
        l[i.rem_euclid(l.len() as i64) as usize]
    } else if (i as usize) < c.len() {
        c[i as usize]
    } else {
        r[(i - c.len() as i64).rem_euclid(r.len() as i64) as usize]
    }
}

/// Coverage checked position by position on a window of period copies.
pub fn naive_bi_cover(q: &Word, b: &BiWord, min_copies: usize) -> bool {
    if q.is_empty() {
        return false;
    }
    let n = q.len() as i64;
    let (lp, rp) = (b.left().len() as i64, b.right().len() as i64);
    let lc = (min_copies as i64).max((n + lp - 1) / lp + 2);
    let rc = (min_copies as i64).max((n + rp - 1) / rp + 2);
    let lo = -lc * lp;
    let hi = b.center().len() as i64 + rc * rp;
    let occurs = |p: i64| (0..n).all(|k| bi_letter(b, p + k) == q[k as usize]);
    (lo..hi).all(|i| (i - n + 1..=i).any(occurs))
}

fn couples(cfg: &SweepConfig) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_len {
        let words = all_words(cfg.alphabet_size, n);
        for q in &words {
            for r in &words {
                if q != r {
                    out.push((q.clone(), r.clone()));
                }
            }
        }
    }
    out
}

fn cycles(spans: &[usize], max_cycle: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_cycle {
        layer = layer
            .into_iter()
            .flat_map(|c| {
                spans.iter().map(move |&m| {
                    let mut v = c.clone();
                    v.push(m);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// A periodic q-quasiperiodic witness, with its r-statistics.
struct Witness {
    cycle: Vec<usize>,
    period: Vec<Letter>,
    r_covers: bool,
    r_per_period: usize,
}

fn witnesses(q: &Word, r: &Word, max_cycle: usize) -> Vec<Witness> {
    cycles(&naive_spans(q), max_cycle)
        .into_iter()
        .map(|cycle| {
            let period = cycle_period(q, &cycle);
            debug_assert!(periodic_cover(q, &period));
            Witness {
                r_covers: periodic_cover(r, &period),
                r_per_period: periodic_count(r, &period),
                cycle,
                period,
            }
        })
        .collect()
}

fn run<T, F>(items: Vec<T>, check: F) -> Vec<(usize, Vec<String>)>
where
    T: Send + Sync,
    F: Fn(&T) -> (usize, Vec<String>) + Send + Sync,
{
    items.par_iter().map(check).collect()
}

/// Classification against semantic witnesses, for all three cases.
pub fn sweep_classify(cfg: &SweepConfig) -> SweepReport {
    let results = run(couples(cfg), |(q, r)| {
        let t = f_table(q, r).expect("valid couple");
        let kind = classify_table(&t).kind;
        let ws = witnesses(q, r, cfg.max_cycle);
        let with_r = ws.iter().filter(|w| w.r_covers).count();
        let ok = match kind {
            CoupleKind::Incompatible => with_r == 0,
            CoupleKind::ImpliesQuasiperiodicity => with_r == ws.len(),
            CoupleKind::CompatibleOnly => with_r > 0 && with_r < ws.len(),
        };
        let bad = if ok {
            vec![]
        } else {
            vec![format!(
                "({q}, {r}) classified {kind} but {with_r}/{} witnesses are {r}-quasiperiodic",
                ws.len()
            )]
        };
        (1, bad)
    });
    SweepReport::new("classification", results)
}

/// Cyclic sum identity of `f` over all tuples of length `1..=3` from the
/// domain, plus `f(m, m) = m` and full definedness on the domain square.
pub fn sweep_sum_identity(cfg: &SweepConfig) -> SweepReport {
    let results = run(couples(cfg), |(q, r)| {
        let t = f_table(q, r).expect("valid couple");
        let dom = t.domain();
        let mut bad = Vec::new();
        let mut checked = 0;
        let f = |a: usize, b: usize| t.get(a, b);
        for &m in &dom {
            if f(m, m) != Some(m as i64) {
                bad.push(format!("({q}, {r}): f({m},{m}) = {:?}", f(m, m)));
            }
        }
        let mut tuples: Vec<Vec<usize>> = dom.iter().map(|&a| vec![a]).collect();
        for _ in 0..3 {
            for tup in &tuples {
                checked += 1;
                let lhs: i64 = tup.iter().map(|&s| s as i64).sum();
                let rhs: Option<i64> = (0..tup.len())
                    .map(|i| f(tup[i], tup[(i + 1) % tup.len()]))
                    .sum();
                if rhs != Some(lhs) {
                    bad.push(format!("({q}, {r}): tuple {tup:?} sums {lhs} vs {rhs:?}"));
                }
            }
            tuples = tuples
                .iter()
                .flat_map(|tup| {
                    dom.iter().map(move |&a| {
                        let mut v = tup.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        if t.len() != dom.len() * dom.len() {
            bad.push(format!("({q}, {r}): f not defined on all of domain²"));
        }
        (checked, bad)
    });
    SweepReport::new("sum-identity", results)
}

/// A proper overlap of `q` never holds two occurrences of another word of
/// the same length; also cross-checks `occ` against the scan.
pub fn sweep_unique_occurrence(alphabet: usize, max_len: usize) -> SweepReport {
    let mut items = Vec::new();
    for n in 1..=max_len {
        items.extend(all_words(alphabet, n));
    }
    let results = run(items, |q| {
        let mut bad = Vec::new();
        let mut checked = 0;
        let others = all_words(alphabet, q.len());
        for m in naive_spans(q) {
            let v: Vec<Letter> = q.iter().chain(q[m..].iter()).copied().collect();
            if naive_count(q, &v) != 2 {
                continue;
            }
            for r in others.iter().filter(|r| *r != q) {
                checked += 1;
                let c = naive_count(r, &v);
                if c > 1 {
                    bad.push(format!(
                        "overlap {} of {q} holds {r} {c} times",
                        Word::from_slice(&v)
                    ));
                }
                let expect = (0..=v.len() - r.len()).find(|&i| v[i..i + r.len()] == r[..]);
                if occ(q, r, m).expect("valid couple") != expect {
                    bad.push(format!("occ({q}, {r}, {m}) disagrees with scan"));
                }
            }
        }
        (checked, bad)
    });
    SweepReport::new("unique-occurrence", results)
}

/// Definiteness versus "every witness holds at least one `r` per `q` copy".
pub fn sweep_definiteness(cfg: &SweepConfig) -> SweepReport {
    let results = run(couples(cfg), |(q, r)| {
        let t = f_table(q, r).expect("valid couple");
        let ws = witnesses(q, r, cfg.max_cycle);
        let semantic = ws.iter().all(|w| w.r_per_period >= w.cycle.len());
        let bad = if semantic == is_definite(&t) {
            vec![]
        } else {
            let w = ws.iter().find(|w| w.r_per_period < w.cycle.len());
            vec![format!(
                "({q}, {r}): definite={} but witness {:?} has {} r per period",
                is_definite(&t),
                w.map(|w| &w.cycle),
                w.map_or(0, |w| w.r_per_period)
            )]
        };
        (1, bad)
    });
    SweepReport::new("definiteness", results)
}

/// Per-word agreement of the three pair predicates on every witness that
/// carries both quasiperiods, and equal derivated sequences for
/// compatible positive couples.
pub fn sweep_pair_relations(cfg: &SweepConfig) -> SweepReport {
    let results = run(couples(cfg), |(q, r)| {
        let t = f_table(q, r).expect("valid couple");
        let positive = is_compatible(&t) && is_positive(&t);
        let mut bad = Vec::new();
        let mut checked = 0;
        let mut seen = HashSet::new();
        for w in witnesses(q, r, cfg.max_cycle)
            .into_iter()
            .filter(|w| w.r_covers)
        {
            let bi = BiWord::periodic(Word::new(w.period.clone())).expect("nonempty period");
            if !seen.insert(bi.clone()) {
                continue;
            }
            checked += 1;
            match pair_relation(&bi, q, r) {
                Ok(rel) => {
                    if !rel.consistent() {
                        bad.push(format!("({q}, {r}) on {bi}: {rel:?}"));
                    }
                    if positive && !rel.same_derivated {
                        bad.push(format!(
                            "({q}, {r}) positive but derivated sequences differ on {bi}"
                        ));
                    }
                }
                Err(e) => bad.push(format!("({q}, {r}) on {bi}: {e}")),
            }
        }
        (checked, bad)
    });
    SweepReport::new("pair-relations", results)
}

fn primitive_words(alphabet: usize, max: usize) -> Vec<Word> {
    (1..=max)
        .flat_map(|n| all_words(alphabet, n))
        .filter(|w| w.is_primitive())
        .collect()
}

/// Small eventually periodic words: primitive periods and centers of up to
/// `parts` letters, deduplicated after normalization.
pub fn small_biwords(alphabet: usize, parts: usize) -> Vec<BiWord> {
    let periods = primitive_words(alphabet, parts);
    let centers: Vec<Word> = (0..=parts).flat_map(|n| all_words(alphabet, n)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for l in &periods {
        for c in &centers {
            for r in &periods {
                let b = BiWord::new(l.clone(), c.clone(), r.clone()).expect("nonempty periods");
                if seen.insert(b.clone()) {
                    out.push(b);
                }
            }
        }
    }
    out
}

fn thm1_on_word(b: &BiWord, alphabet: usize, qmax: usize, copies: usize) -> (usize, Vec<String>) {
    let mut memo: HashMap<Word, bool> = HashMap::new();
    let mut qp = |u: &Word| -> bool {
        *memo
            .entry(u.clone())
            .or_insert_with(|| naive_bi_cover(u, b, copies))
    };
    let letters: Vec<Letter> = (0..alphabet).map(|i| Letter::new(i).unwrap()).collect();
    let mut bad = Vec::new();
    let mut checked = 0;
    let mut expect = |what: String, rule: bool, direct: bool, bad: &mut Vec<String>| {
        checked += 1;
        if rule != direct {
            bad.push(format!("{b}: {what}: rule {rule}, coverage {direct}"));
        }
    };
    for n in 1..=qmax {
        for q in b.factor_set(n) {
            let direct = qp(&q);
            expect(
                format!("coverage of {q}"),
                is_quasiperiod_bi(&q, b),
                direct,
                &mut bad,
            );
            if !direct {
                continue;
            }
            for &a in &letters {
                let qa = q.with_suffix(a);
                if b.contains_factor(&qa) {
                    let rule = thm1_extend_right(b, &q, a).expect("preconditions hold");
                    let d = qp(&qa);
                    expect(format!("extend {q}·{a}"), rule, d, &mut bad);
                }
                let aq = q.with_prefix(a);
                if b.contains_factor(&aq) {
                    let rule = thm1_extend_left(b, &q, a).expect("preconditions hold");
                    let d = qp(&aq);
                    expect(format!("extend {a}·{q}"), rule, d, &mut bad);
                }
            }
            let rs = is_right_special(b, &q);
            for s in successors(b, &q) {
                let d = qp(&s);
                expect(format!("successor {s} of {q}"), !rs, d, &mut bad);
            }
            let ls = crate::quasiperiods::is_left_special(b, &q);
            for p in predecessors(b, &q) {
                let d = qp(&p);
                expect(format!("predecessor {p} of {q}"), !ls, d, &mut bad);
            }
            if n >= 2 {
                let rule = thm1_shrink(b, &q).expect("preconditions hold");
                let d = qp(&q.slice(0..n - 1));
                expect(format!("shrink {q} to prefix"), rule, d, &mut bad);
                let rule = thm1_shrink_left(b, &q).expect("preconditions hold");
                let d = qp(&q.slice(1..n));
                expect(format!("shrink {q} to suffix"), rule, d, &mut bad);
            }
        }
    }
    (checked, bad)
}

/// Extension, restriction, successor and predecessor rules against direct
/// coverage over all small eventually periodic words.
pub fn sweep_thm1(cfg: &SweepConfig) -> SweepReport {
    let bound = cfg.max_len.saturating_sub(1).max(1);
    sweep_thm1_on(cfg, small_biwords(cfg.alphabet_size, bound), bound)
}

pub fn sweep_thm1_on(cfg: &SweepConfig, words: Vec<BiWord>, qmax: usize) -> SweepReport {
    let results = run(words, |b| {
        thm1_on_word(b, cfg.alphabet_size, qmax, cfg.max_window_copies)
    });
    SweepReport::new("local-rules", results)
}

/// Derivated sequences along quasiperiods never have a gap above `|q|`,
/// and non-quasiperiods always do.
pub fn sweep_gap_bound(words: &[BiWord], qmax: usize) -> SweepReport {
    let results = run(words.to_vec(), |b| {
        let mut bad = Vec::new();
        let mut checked = 0;
        for n in 1..=qmax {
            for q in b.factor_set(n) {
                if let Ok(d) = derivated_sequence(b, &q) {
                    checked += 1;
                    if (d.max_gap() <= n) != is_quasiperiod_bi(&q, b) {
                        bad.push(format!("{b}: {q} has derivated sequence {d}"));
                    }
                }
            }
        }
        (checked, bad)
    });
    SweepReport::new("gap-bound", results)
}

/// Every sweep behind `biqp verify`.
pub fn verify(cfg: &SweepConfig) -> Vec<SweepReport> {
    vec![
        sweep_classify(cfg),
        sweep_sum_identity(cfg),
        sweep_unique_occurrence(cfg.alphabet_size, cfg.max_len + 1),
        sweep_definiteness(cfg),
        sweep_pair_relations(cfg),
        sweep_thm1(cfg),
        {
            let bound = cfg.max_len.saturating_sub(1).max(1);
            sweep_gap_bound(&small_biwords(cfg.alphabet_size, bound), bound)
        },
    ]
}

/// Tally of classes in the couple sweep.
pub fn class_histogram(cfg: &SweepConfig) -> BTreeMap<String, usize> {
    let kinds: Vec<CoupleKind> = couples(cfg)
        .par_iter()
        .map(|(q, r)| classify_table(&f_table(q, r).expect("valid couple")).kind)
        .collect();
    let mut h = BTreeMap::new();
    for k in kinds {
        *h.entry(k.to_string()).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn small() -> SweepConfig {
        SweepConfig {
            max_len: 3,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn naive_cover_examples() {
        assert!(naive_cover(&w("aba"), &w("abaaba")));
        assert!(!naive_cover(&w("aba"), &w("abab")));
        assert!(naive_cover(&w("abaaba"), &w("abaababaabaaba")));
    }

    #[test]
    fn default_config() {
        let c = SweepConfig::default();
        assert_eq!(
            (c.alphabet_size, c.max_len, c.max_cycle, c.max_window_copies),
            (2, 6, 2, 6)
        );
        assert!(c.is_valid());
        assert!(!SweepConfig { max_cycle: 0, ..c }.is_valid());
    }

    #[test]
    fn small_classification_sweep() {
        let r = sweep_classify(&small());
        assert!(r.passed(), "{:?}", r.discrepancies);
        // per length n there are at most 2^n (2^n - 1) couples
        assert_eq!(r.checked, 2 + 12 + 56);
    }

    #[test]
    fn unary_alphabet_has_no_couples() {
        let cfg = SweepConfig {
            alphabet_size: 1,
            ..SweepConfig::default()
        };
        let r = sweep_classify(&cfg);
        assert_eq!(r.checked, 0);
        assert!(r.passed());
    }

    #[test]
    fn eq1_word_rules() {
        let b: BiWord = "baababa||abaababa".parse().unwrap();
        let r = sweep_thm1_on(&SweepConfig::default(), vec![b.clone()], 9);
        assert!(r.passed(), "{:?}", r.discrepancies);
        let q8: Vec<Word> = b
            .factor_set(8)
            .into_iter()
            .filter(|q| naive_bi_cover(q, &b, 6))
            .collect();
        assert!(q8.contains(&w("abaababa")) && q8.contains(&w("ababaaba")));
    }

    #[test]
    fn periodic_subfamily_rules() {
        let words: Vec<BiWord> = primitive_words(2, 5)
            .into_iter()
            .map(|p| BiWord::periodic(p).unwrap())
            .collect();
        let r = sweep_thm1_on(&SweepConfig::default(), words, 6);
        assert!(r.passed(), "{:?}", r.discrepancies);
    }

    #[test]
    fn left_restriction_needs_the_mirrored_square() {
        // Restricting αq to q must look at αqαq; the unmirrored qαqα gives
        // wrong answers on small words.
        let mut wrong = 0;
        for b in small_biwords(2, 3) {
            for n in 2..=4 {
                for aq in b.factor_set(n) {
                    if !naive_bi_cover(&aq, &b, 6) {
                        continue;
                    }
                    let (alpha, q) = (aq[0], aq.slice(1..n));
                    let u = q.with_suffix(alpha).concat(&q.with_suffix(alpha));
                    let literal = !b.contains_factor(&u) || naive_count(&q, &u) >= 3;
                    let direct = naive_bi_cover(&q, &b, 6);
                    assert_eq!(thm1_shrink_left(&b, &aq).unwrap(), direct, "{b} {aq}");
                    wrong += usize::from(literal != direct);
                }
            }
        }
        assert!(wrong > 0);
    }

    #[test]
    fn cycle_enumeration() {
        assert_eq!(cycles(&[0, 1], 2).len(), 2 + 4);
        assert_eq!(cycle_period(&w("abaababa"), &[1, 0]).len(), 15);
        assert!(periodic_cover(&w("ab"), &cycle_period(&w("ab"), &[0])));
        assert_eq!(periodic_count(&w("ba"), &cycle_period(&w("ab"), &[0])), 1);
    }
}
