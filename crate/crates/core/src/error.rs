use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}: expected 'a'..='z'")]
    InvalidLetter(char),

    #[error("letter index {index} outside an alphabet of {size}")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("malformed word literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("empty word where a nonempty one is required")]
    EmptyWord,

    #[error("span {span} is not an overlap span of {word}")]
    UndefinedSpan { word: String, span: usize },

    #[error("words {q} and {r} have different lengths")]
    LengthMismatch { q: String, r: String },

    #[error("the two words of a couple must differ (got {0} twice)")]
    EqualWords(String),

    #[error("{word} occurs only finitely often in a tail of {bi}")]
    NotRecurrent { word: String, bi: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("directive {directive:?} certifies only {available} letters, {needed} needed")]
    NeedsLongerDirective {
        directive: Vec<u32>,
        needed: usize,
        available: usize,
    },

    #[error("directive {0:?} does not generate a Sturmian language")]
    InvalidDirective(Vec<u32>),
}
