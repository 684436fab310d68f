//! Words over the four-letter alphabet {a, b, c, d} and the validity rules
//! that carve out exactly the code words of the class's simple permutations.

use std::fmt;
use std::str::FromStr;

use super::CodecError;

/// One letter of the codec alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }
}

/// Which validity rule a candidate word breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum RuleViolation {
    #[error("word has length {0}, but valid words have length >= 4")]
    TooShort(usize),
    #[error("word must begin with dd")]
    MissingLeadingDd,
    #[error("word must end with dd")]
    MissingTrailingDd,
    #[error("word contains a repeated-letter factor {0}{0}")]
    RepeatedLetter(char),
    #[error("word cannot begin dda")]
    StartsDda,
    #[error("word cannot end cdd")]
    EndsCdd,
    #[error("word contains the forbidden factor da")]
    ForbiddenDa,
}

/// A string over {a, b, c, d}. Validity (the code-word rules) is a separate
/// question answered by [`Word::validate`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, CodecError> {
        let letters = s
            .chars()
            .map(|c| Letter::from_char(c).ok_or(CodecError::BadAlphabet(c)))
            .collect::<Result<_, _>>()?;
        Ok(Word { letters })
    }
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Checks the code-word rules, reporting the first one broken:
    /// begins and ends `dd`; no `aa`, `bb` or `cc` factor; does not begin
    /// `dda` or end `cdd`; no `da` factor.
    pub fn validate(&self) -> Result<(), RuleViolation> {
        validate_letters(&self.letters)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

/// Rule check on a raw letter slice, allocation-free so the exhaustive
/// rule-versus-automaton comparison stays cheap.
pub(crate) fn validate_letters(w: &[Letter]) -> Result<(), RuleViolation> {
    use Letter::*;
    let n = w.len();
    if n >= 2 && (w[0] != D || w[1] != D) {
        return Err(RuleViolation::MissingLeadingDd);
    }
    if n < 4 {
        return Err(RuleViolation::TooShort(n));
    }
    if w[n - 2] != D || w[n - 1] != D {
        return Err(RuleViolation::MissingTrailingDd);
    }
    if w[2] == A {
        return Err(RuleViolation::StartsDda);
    }
    if w[n - 3] == C {
        return Err(RuleViolation::EndsCdd);
    }
    for i in 0..n - 1 {
        if w[i] == w[i + 1] && w[i] != D {
            return Err(RuleViolation::RepeatedLetter(w[i].as_char()));
        }
        if w[i] == D && w[i + 1] == A {
            return Err(RuleViolation::ForbiddenDa);
        }
    }
    Ok(())
}
