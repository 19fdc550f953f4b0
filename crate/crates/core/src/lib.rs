//! Quasiperiodicity of biinfinite words over finite alphabets.
//!
//! Finite and eventually periodic biinfinite words, overlaps of a word with
//! itself and the `f` table of a couple `(q, r)`, the three-way
//! classification of couples, derivated sequences, chains of quasiperiods
//! and the quasiperiods of Sturmian languages. The [`oracle`] module holds
//! brute-force counterparts used for cross-checking.
//!
//! ```
//! use biqp_core::{classify, BiWord, CoupleKind, Word};
//!
//! let q: Word = "abaababa".parse().unwrap();
//! let r: Word = "ababaaba".parse().unwrap();
//! assert_eq!(classify(&q, &r).unwrap().kind, CoupleKind::CompatibleOnly);
//!
//! let w: BiWord = "baababa||abaababa".parse().unwrap();
//! assert!(biqp_core::is_quasiperiod_bi(&q, &w));
//! ```

pub mod biword;
pub mod derivated;
pub mod error;
pub mod oracle;
pub mod overlaps;
pub mod par;
pub mod quasiperiods;
pub mod relations;
pub mod sturmian;
pub mod word;

pub use biword::BiWord;
pub use derivated::{derivated_sequence, DerivSeq};
pub use error::{Error, Result};
pub use overlaps::{f_table, occ, FEntry, FTable, FTableJson, OverlapSpace};
pub use quasiperiods::{
    chains_of_length, is_quasiperiod_bi, is_quasiperiod_finite, quasiperiods_finite,
    quasiperiods_of_length, Chain,
};
pub use relations::{
    classify, classify_json, is_compatible, is_definite, is_positive, ClassifyJson, CoupleClass,
    CoupleKind, Witness,
};
pub use sturmian::{rauzy_graph, sturmian_quasiperiods, RauzyGraph, SturmLang};
pub use word::{Letter, Word};
