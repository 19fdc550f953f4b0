//! Derivated sequences: gaps between consecutive occurrences of a word in
//! an eventually periodic biinfinite word.

use std::fmt;

use serde::Serialize;

use crate::biword::BiWord;
use crate::error::{Error, Result};
use crate::word::{find_all, primitive_root, Word};

/// An eventually periodic biinfinite sequence of positive gaps,
/// `^ω(left) center (right)^ω`.
///
/// `offset` is the index of the first element after the left tail, under
/// the convention that index 0 is the gap `q_1 - q_0`, with `q_0` the
/// leftmost occurrence covering position 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivSeq {
    left: Vec<usize>,
    center: Vec<usize>,
    right: Vec<usize>,
    offset: i64,
}

impl DerivSeq {
    pub fn new(left: Vec<usize>, center: Vec<usize>, right: Vec<usize>, offset: i64) -> Self {
        assert!(
            !left.is_empty() && !right.is_empty(),
            "periods must be nonempty"
        );
        let mut left = primitive_root(&left).to_vec();
        let mut right = primitive_root(&right).to_vec();
        let mut center = center;
        let mut offset = offset;
        while let (Some(&c), Some(&r)) = (center.last(), right.last()) {
            if c != r {
                break;
            }
            center.pop();
            right.rotate_right(1);
        }
        while !center.is_empty() && center[0] == left[0] {
            let c = center.remove(0);
            left.remove(0);
            left.push(c);
            offset += 1;
        }
        if center.is_empty() && left == right {
            let p = left.len();
            let best = (0..p)
                .min_by_key(|&t| {
                    left[t..]
                        .iter()
                        .chain(&left[..t])
                        .copied()
                        .collect::<Vec<_>>()
                })
                .unwrap_or(0);
            left.rotate_left(best);
            right = left.clone();
            offset += best as i64;
        }
        DerivSeq {
            left,
            center,
            right,
            offset,
        }
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Gap `q_{i+1} - q_i`.
    pub fn gap(&self, i: i64) -> usize {
        let k = i - self.offset;
        let c = self.center.len() as i64;
        if k < 0 {
            self.left[k.rem_euclid(self.left.len() as i64) as usize]
        } else if k < c {
            self.center[k as usize]
        } else {
            self.right[(k - c).rem_euclid(self.right.len() as i64) as usize]
        }
    }

    pub fn max_gap(&self) -> usize {
        self.left
            .iter()
            .chain(&self.center)
            .chain(&self.right)
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Equality of the sequences after forgetting where index 0 sits.
    pub fn equal_up_to_shift(&self, other: &DerivSeq) -> bool {
        self.left == other.left && self.center == other.center && self.right == other.right
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for DerivSeq {
    /// `^w(7) 5 (8)^w`, with `w` standing for ω.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "^w({})", join(&self.left))?;
        if !self.center.is_empty() {
            write!(f, " {} ", join(&self.center))?;
        }
        write!(f, "({})^w", join(&self.right))
    }
}

/// Derivated sequence of `w` along `q`.
///
/// Defined whenever `q` occurs in both periodic tails. If no occurrence
/// covers position 0 (so `q` is not a quasiperiod), `q_0` falls back to the
/// last occurrence starting at or before 0.
pub fn derivated_sequence(w: &BiWord, q: &Word) -> Result<DerivSeq> {
    if q.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = q.len();
    let (lp, rp) = (w.left().len(), w.right().len());
    let c = w.center().len() as i64;
    let (start, end) = w.padded_bounds(n.div_ceil(lp) + 2, n.div_ceil(rp) + 2);
    let win = w.window(start, end - 1);
    let occ: Vec<i64> = find_all(q, &win)
        .into_iter()
        .map(|p| p as i64 + start)
        .collect();
    let not_recurrent = || Error::NotRecurrent {
        word: q.to_string(),
        bi: w.to_string(),
    };

    let p_r = *occ
        .iter()
        .find(|&&p| p >= c)
        .filter(|&&p| p < c + rp as i64)
        .ok_or_else(not_recurrent)?;
    let p_l = *occ
        .iter()
        .rev()
        .find(|&&p| p + n as i64 <= 0)
        .filter(|&&p| p >= -(lp as i64) - n as i64)
        .ok_or_else(not_recurrent)?;

    let gaps_between = |lo: i64, hi: i64| -> Vec<usize> {
        let pts: Vec<i64> = occ
            .iter()
            .copied()
            .filter(|&p| p >= lo && p <= hi)
            .collect();
        pts.windows(2).map(|x| (x[1] - x[0]) as usize).collect()
    };
    let left = gaps_between(p_l - lp as i64, p_l);
    let right = gaps_between(p_r, p_r + rp as i64);
    let center = gaps_between(p_l, p_r);

    let core: Vec<i64> = occ
        .iter()
        .copied()
        .filter(|&p| p >= p_l && p <= p_r)
        .collect();
    let q0 = core
        .iter()
        .position(|&p| p <= 0 && p + n as i64 > 0)
        .or_else(|| core.iter().rposition(|&p| p <= 0))
        .expect("p_l lies at or before 0");
    Ok(DerivSeq::new(left, center, right, -(q0 as i64)))
}
