//! Eventually periodic biinfinite words `^ω(left) · center · (right)^ω`.
//!
//! Position 0 is the first letter of `center`, or the first letter of the
//! first `right` copy when the center is empty. Values are kept in a
//! canonical form so that derived equality is equality of the indexed
//! sequence:
//!
//! * both periods are primitive;
//! * the center is as short as possible on its right end, i.e. its last
//!   letter is never absorbable into the right period.
//!
//! The left end of the center is never absorbed because that would move
//! the origin.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BiWordFields")]
pub struct BiWord {
    left: Word,
    center: Word,
    right: Word,
}

#[derive(Deserialize)]
struct BiWordFields {
    left: Word,
    center: Word,
    right: Word,
}

impl TryFrom<BiWordFields> for BiWord {
    type Error = Error;

    fn try_from(f: BiWordFields) -> Result<Self> {
        BiWord::new(f.left, f.center, f.right)
    }
}

impl BiWord {
    pub fn new(left: Word, center: Word, right: Word) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyWord);
        }
        let left = left.primitive_root();
        let mut right = right.primitive_root().into_letters();
        let mut center = center.into_letters();
        while let (Some(&c), Some(&r)) = (center.last(), right.last()) {
            if c != r {
                break;
            }
            center.pop();
            right.rotate_right(1);
        }
        Ok(BiWord {
            left,
            center: Word::new(center),
            right: Word::new(right),
        })
    }

    /// The purely periodic word `^ω(p)(p)^ω` with `p` starting at position 0.
    pub fn periodic(period: Word) -> Result<Self> {
        BiWord::new(period.clone(), Word::empty(), period)
    }

    pub fn left(&self) -> &Word {
        &self.left
    }

    pub fn center(&self) -> &Word {
        &self.center
    }

    pub fn right(&self) -> &Word {
        &self.right
    }

    /// True when the whole word is a single periodic orbit.
    pub fn is_periodic(&self) -> bool {
        let p = self.right.len();
        if self.left.len() != p {
            return false;
        }
        let c = self.center.len() as i64;
        (-(p as i64)..c).all(|i| self.letter_at(i) == self.letter_at(i + p as i64))
    }

    pub fn letter_at(&self, i: i64) -> Letter {
        let c = self.center.len() as i64;
        if i < 0 {
            let l = self.left.len() as i64;
            self.left[i.rem_euclid(l) as usize]
        } else if i < c {
            self.center[i as usize]
        } else {
            let r = self.right.len() as i64;
            self.right[(i - c).rem_euclid(r) as usize]
        }
    }

    /// Letters `i..=j`; empty when `j < i`.
    pub fn window(&self, i: i64, j: i64) -> Word {
        if j < i {
            return Word::empty();
        }
        Word::new((i..=j).map(|k| self.letter_at(k)).collect())
    }

    /// Bounds `[start, end)` of a window holding `copies` whole periods on
    /// each side of the center.
    pub fn padded_bounds(&self, left_copies: usize, right_copies: usize) -> (i64, i64) {
        let start = -((left_copies * self.left.len()) as i64);
        let end = (self.center.len() + right_copies * self.right.len()) as i64;
        (start, end)
    }

    /// Every distinct factor of length `n`.
    pub fn factor_set(&self, n: usize) -> BTreeSet<Word> {
        let lc = n.div_ceil(self.left.len()) + 1;
        let rc = n.div_ceil(self.right.len()) + 1;
        self.factor_set_padded(n, lc, rc)
    }

    pub(crate) fn factor_set_padded(&self, n: usize, lc: usize, rc: usize) -> BTreeSet<Word> {
        let (start, end) = self.padded_bounds(lc, rc);
        let win = self.window(start, end - 1);
        crate::word::factors(&win, n)
    }

    pub fn contains_factor(&self, u: &Word) -> bool {
        if u.is_empty() {
            return true;
        }
        let lc = u.len().div_ceil(self.left.len()) + 1;
        let rc = u.len().div_ceil(self.right.len()) + 1;
        let (start, end) = self.padded_bounds(lc, rc);
        let win = self.window(start, end - 1);
        !crate::word::find_all(u, &win).is_empty()
    }

    /// The `LEFT|CENTER|RIGHT` literal.
    pub fn literal(&self) -> String {
        self.to_string()
    }
}

impl FromStr for BiWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() != 3 {
            return Err(bad("expected LEFT|CENTER|RIGHT with exactly two '|'"));
        }
        if parts[0].is_empty() || parts[2].is_empty() {
            return Err(bad("left and right periods must be nonempty"));
        }
        let word = |p: &str| -> Result<Word> {
            p.parse::<Word>()
                .map_err(|_| bad(&format!("{p:?} is not a lowercase word over 'a'..='z'")))
        };
        BiWord::new(word(parts[0])?, word(parts[1])?, word(parts[2])?)
    }
}

impl fmt::Display for BiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.left, self.center, self.right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(s: &str) -> BiWord {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn letter_at_examples() {
        let ab = bi("ba||ab");
        assert_eq!(ab.letter_at(0), Letter::A);
        assert_eq!(ab.letter_at(-1), Letter::A);
        let eq1 = bi("baababa||abaababa");
        assert_eq!(eq1.letter_at(3), Letter::A);
        assert_eq!(eq1.letter_at(-7), Letter::B);
    }

    #[test]
    fn window_examples() {
        assert_eq!(bi("ab||ab").window(-2, 1), w("abab"));
        assert_eq!(bi("b|a|b").window(0, 0), w("a"));
        assert_eq!(bi("baababa||abaababa").window(0, 7), w("abaababa"));
    }

    #[test]
    fn factor_set_examples() {
        assert_eq!(
            bi("a||a").factor_set(3).into_iter().collect::<Vec<_>>(),
            vec![w("aaa")]
        );
        assert_eq!(
            bi("ab||ab").factor_set(2).into_iter().collect::<Vec<_>>(),
            vec![w("ab"), w("ba")]
        );
        assert_eq!(
            bi("baababa||abaababa")
                .factor_set(2)
                .into_iter()
                .collect::<Vec<_>>(),
            vec![w("aa"), w("ab"), w("ba")]
        );
    }

    #[test]
    fn canonical_form() {
        assert_eq!(bi("ab|ab|ab"), bi("ab||ab"));
        assert_eq!(bi("abab||ababab"), bi("ab||ab"));
        assert_eq!(bi("ab|a|ba"), bi("ab||ab"));
        assert_eq!(bi("b|aab|ab").to_string(), "b|a|ab");
        // origin differs, so these are distinct indexed words
        assert_ne!(bi("ab|ab|b"), bi("ab|abab|b"));
        assert!(!bi("ba|ab|ab").is_periodic());
        assert!(bi("ab||ab").is_periodic());
    }

    #[test]
    fn literal_errors() {
        assert!(matches!(
            "ab|ab".parse::<BiWord>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!("|a|b".parse::<BiWord>(), Err(Error::Parse { .. })));
        assert!(matches!(
            "a|B|b".parse::<BiWord>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "a|b|c|d".parse::<BiWord>(),
            Err(Error::Parse { .. })
        ));
    }

    fn arb_word(min: usize, max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0usize..2, min..=max).prop_map(|v| Word::from_indices(&v))
    }

    proptest! {
        #[test]
        fn normalization_preserves_letters_and_is_idempotent(
            l in arb_word(1, 5), c in arb_word(0, 5), r in arb_word(1, 5)
        ) {
            let raw = |i: i64| -> Letter {
                let cl = c.len() as i64;
                if i < 0 { l[i.rem_euclid(l.len() as i64) as usize] }
                else if i < cl { c[i as usize] }
                else { r[(i - cl).rem_euclid(r.len() as i64) as usize] }
            };
            let b = BiWord::new(l.clone(), c.clone(), r.clone()).unwrap();
            for i in -30..30 {
                prop_assert_eq!(b.letter_at(i), raw(i));
            }
            let again = BiWord::new(b.left().clone(), b.center().clone(), b.right().clone()).unwrap();
            prop_assert_eq!(&again, &b);
            let reparsed: BiWord = b.literal().parse().unwrap();
            prop_assert_eq!(reparsed, b);
        }

        #[test]
        fn factor_set_is_saturated(
            l in arb_word(1, 4), c in arb_word(0, 4), r in arb_word(1, 4), n in 1usize..7
        ) {
            let b = BiWord::new(l, c, r).unwrap();
            let lc = n.div_ceil(b.left().len()) + 1;
            let rc = n.div_ceil(b.right().len()) + 1;
            prop_assert_eq!(b.factor_set(n), b.factor_set_padded(n, lc + 1, rc + 1));
        }
    }
}
