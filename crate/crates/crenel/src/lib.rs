//! Enumeration toolkit for the permutation class Av(4231, 35142, 42513,
//! 351624): pattern machinery, brute-force class enumeration, the
//! crenellation word codec for the class's simple permutations, and the
//! exact generating-function pipeline that reproduces the class counting
//! sequence 1, 2, 6, 23, 101, 477, ... (OEIS A213090).
//!
//! The crate is organized mirror-fashion around the mathematics:
//!
//! * [`perm`] — permutations, pattern containment, symmetries, intervals,
//!   simplicity, substitution decomposition and inflation;
//! * [`class`] — level-by-level enumeration of the class, census statistics
//!   and structural verification of its simple members;
//! * [`codec`] — words over {a, b, c, d}, the seven-state recognizer, the
//!   geometric decoder, the structural encoder and per-point inflation
//!   classes;
//! * [`series`] — exact rational truncated power series and the generating
//!   functions, every stage computed by independent routes that must agree;
//! * [`verify`] — the named check suites behind `crenel verify`;
//! * [`cli`] — the command-line front end.
//!
//! Everything except the enumerator's internal cache is immutable and pure,
//! so the library is safe to use from any number of threads. All arithmetic
//! is exact: big-rational series coefficients, and rational coordinates in
//! the decoder. No floating point is used anywhere.
//!
//! ```
//! use crenel::{decode, encode, Enumerator, PatternSet};
//!
//! let word: crenel::Word = "ddbdd".parse().unwrap();
//! let p = decode(&word).unwrap();
//! assert_eq!(p.to_string(), "2,5,3,1,4");
//! assert_eq!(encode(&p).unwrap(), word);
//!
//! let mut enumerator = Enumerator::new(PatternSet::default());
//! let counts: Vec<u64> = enumerator
//!     .counts(6)
//!     .unwrap()
//!     .into_iter()
//!     .map(|(_, c)| c)
//!     .collect();
//! assert_eq!(counts, [1, 2, 6, 23, 101, 477]);
//! ```

// parity checks via `% 2` read better than is_multiple_of here
#![allow(clippy::manual_is_multiple_of)]

pub mod class;
pub mod cli;
pub mod codec;
pub mod perm;
pub mod series;
pub mod verify;

pub use class::{CensusRecord, ClassError, ClassLevel, Enumerator};
pub use codec::{
    allowed_block_classes, decode, encode, simples_via_words, words_of_length, BlockClass,
    CodecError, Dfa, Letter, Word,
};
pub use perm::{IntervalSpan, PatternSet, PermError, Permutation, SkeletonDecomposition};
pub use series::{Series, SeriesError};
