//! The word codec for the class's simple permutations: validity rules, the
//! seven-state recognizer, word enumeration, the geometric decoder, the
//! structural encoder, and the per-point inflation classes.

mod decode;
mod dfa;
mod encode;
mod word;

pub use decode::{decode, decode_with_roles, PointRole};
pub use dfa::{Dfa, State};
pub use encode::encode;
pub use word::{Letter, RuleViolation, Word};

pub(crate) use word::validate_letters;

use thiserror::Error;

use crate::perm::{PatternSet, Permutation};

/// Errors from the codec.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum CodecError {
    #[error("character {0:?} is not in the alphabet abcd")]
    BadAlphabet(char),
    #[error("invalid word: {0}")]
    InvalidWord(RuleViolation),
    #[error("permutation is not encodable: {0}")]
    NotEncodable(NotEncodableReason),
    #[error("block classes are only defined for simple class members of length >= 4")]
    NotApplicable,
}

/// Why a permutation has no code word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotEncodableReason {
    TooShort,
    NotSimple,
    NotInClass,
    /// Second entry is 1; the inverse is the encodable orientation.
    WrongOrientation,
    /// Structurally not of the staircase form. Unreachable for genuine
    /// simple class members.
    NotCrenellationForm,
}

impl std::fmt::Display for NotEncodableReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            NotEncodableReason::TooShort => "shorter than 4",
            NotEncodableReason::NotSimple => "not simple",
            NotEncodableReason::NotInClass => "not a class member",
            NotEncodableReason::WrongOrientation => {
                "second entry is 1 (encode the inverse instead)"
            }
            NotEncodableReason::NotCrenellationForm => "not of the staircase form",
        };
        f.write_str(text)
    }
}

/// Runs the recognizer on a raw string (after alphabet validation).
pub fn dfa_accepts(input: &str) -> Result<bool, CodecError> {
    let word: Word = input.parse()?;
    Ok(Dfa::accepts(word.letters()))
}

/// All valid words of length `n`, lexicographically. Empty for n < 4.
pub fn words_of_length(n: usize) -> Vec<Word> {
    if n < 4 {
        return Vec::new();
    }
    let path_len = n - 2;
    // reach[s][k]: can the accept state be hit in exactly k more steps
    let mut reach = vec![[false; 7]; path_len + 1];
    reach[0][Dfa::ACCEPT.index()] = true;
    for k in 1..=path_len {
        for (s, _, t) in Dfa::transitions() {
            if reach[k - 1][t.index()] {
                reach[k][s.index()] = true;
            }
        }
    }
    let mut out = Vec::new();
    let mut prefix = vec![Letter::D, Letter::D];
    walk(Dfa::START, path_len, &reach, &mut prefix, &mut out);
    out
}

fn walk(
    state: State,
    remaining: usize,
    reach: &[[bool; 7]],
    prefix: &mut Vec<Letter>,
    out: &mut Vec<Word>,
) {
    if remaining == 0 {
        if state == Dfa::ACCEPT {
            out.push(Word::new(prefix.clone()));
        }
        return;
    }
    for letter in Letter::ALL {
        if let Some(next) = Dfa::step(state, letter) {
            if reach[remaining - 1][next.index()] {
                prefix.push(letter);
                walk(next, remaining - 1, reach, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// The simple class members of length `n`: decodes of all valid words plus
/// their inverses. The two halves are disjoint, and together they exhaust
/// the simple members.
pub fn simples_via_words(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for word in words_of_length(n) {
        let q = decode(&word).expect("enumerated words are valid");
        out.push(q.inverse());
        out.push(q);
    }
    out.sort_unstable();
    assert!(
        out.windows(2).all(|w| w[0] != w[1]),
        "decoded simples and their inverses must be disjoint"
    );
    out
}

/// The pattern class a block may be inflated by without leaving the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockClass {
    /// Only decreasing blocks (every point of the block is in an inversion
    /// both ways).
    Decreasing,
    /// Blocks avoiding 231.
    Av231,
    /// Blocks avoiding 312.
    Av312,
}

impl BlockClass {
    /// Whether `block` belongs to this class.
    pub fn allows(self, block: &Permutation) -> bool {
        match self {
            BlockClass::Decreasing => block
                .values()
                .windows(2)
                .all(|w| w[0] > w[1]),
            BlockClass::Av231 => {
                !block.contains(&Permutation::from_vec_unchecked(vec![2, 3, 1]))
            }
            BlockClass::Av312 => {
                !block.contains(&Permutation::from_vec_unchecked(vec![3, 1, 2]))
            }
        }
    }
}

/// Per-point allowed inflation classes of a simple class member of length at
/// least 4. A point with a bigger entry somewhere before it and a smaller
/// entry somewhere after it can only be inflated by a decreasing block;
/// with only the bigger-before witness it may take anything avoiding 231,
/// and with only the smaller-after witness anything avoiding 312.
pub fn allowed_block_classes(p: &Permutation) -> Result<Vec<BlockClass>, CodecError> {
    if p.len() < 4 || !p.is_simple() || !p.avoids_all(&PatternSet::default()) {
        return Err(CodecError::NotApplicable);
    }
    let vals = p.values();
    Ok((0..vals.len())
        .map(|i| {
            let bigger_before = vals[..i].iter().any(|&v| v > vals[i]);
            let smaller_after = vals[i + 1..].iter().any(|&v| v < vals[i]);
            match (bigger_before, smaller_after) {
                (true, true) => BlockClass::Decreasing,
                (true, false) => BlockClass::Av231,
                (false, true) => BlockClass::Av312,
                (false, false) => {
                    unreachable!("a simple permutation of length >= 4 splits every point")
                }
            }
        })
        .collect())
}
