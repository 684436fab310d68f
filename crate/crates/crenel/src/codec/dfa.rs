//! The seven-state recognizer for stripped code words.
//!
//! State `I` means "just consumed the opening dd"; the automaton therefore
//! runs on a word with its mandatory leading `dd` removed, and a word of
//! length n corresponds to an accepted path of length n - 2. State names
//! reflect a recently-read suffix long enough to police every rule.

use super::word::Letter;

/// Automaton states. `Dd` is the unique accepting state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum State {
    I,
    A,
    B,
    C,
    Cd,
    D,
    Dd,
}

impl State {
    pub const ALL: [State; 7] = [
        State::I,
        State::A,
        State::B,
        State::C,
        State::Cd,
        State::D,
        State::Dd,
    ];

    pub fn index(self) -> usize {
        match self {
            State::I => 0,
            State::A => 1,
            State::B => 2,
            State::C => 3,
            State::Cd => 4,
            State::D => 5,
            State::Dd => 6,
        }
    }
}

/// The fixed transition table. A missing entry rejects.
#[derive(Debug, Clone, Copy, Default)]
pub struct Dfa;

impl Dfa {
    pub const START: State = State::I;
    pub const ACCEPT: State = State::Dd;

    /// The partial transition function, row for row as printed.
    pub fn step(state: State, letter: Letter) -> Option<State> {
        use State as S;
        match (state, letter) {
            (S::I, Letter::A) => None,
            (S::I, Letter::B) => Some(S::B),
            (S::I, Letter::C) => Some(S::C),
            (S::I, Letter::D) => Some(S::D),

            (S::A, Letter::A) => None,
            (S::A, Letter::B) => Some(S::B),
            (S::A, Letter::C) => Some(S::C),
            (S::A, Letter::D) => Some(S::D),

            (S::B, Letter::A) => Some(S::A),
            (S::B, Letter::B) => None,
            (S::B, Letter::C) => Some(S::C),
            (S::B, Letter::D) => Some(S::D),

            (S::C, Letter::A) => Some(S::A),
            (S::C, Letter::B) => Some(S::B),
            (S::C, Letter::C) => None,
            (S::C, Letter::D) => Some(S::Cd),

            (S::Cd, Letter::A) => None,
            (S::Cd, Letter::B) => Some(S::B),
            (S::Cd, Letter::C) => Some(S::C),
            (S::Cd, Letter::D) => Some(S::D),

            (S::D, Letter::A) => None,
            (S::D, Letter::B) => Some(S::B),
            (S::D, Letter::C) => Some(S::C),
            (S::D, Letter::D) => Some(S::Dd),

            (S::Dd, Letter::A) => None,
            (S::Dd, Letter::B) => Some(S::B),
            (S::Dd, Letter::C) => Some(S::C),
            (S::Dd, Letter::D) => Some(S::Dd),
        }
    }

    /// Runs the table from `I`; accepts iff the whole input is consumed and
    /// the final state is `Dd`.
    pub fn accepts(input: &[Letter]) -> bool {
        let mut state = Dfa::START;
        for &letter in input {
            match Dfa::step(state, letter) {
                Some(next) => state = next,
                None => return false,
            }
        }
        state == Dfa::ACCEPT
    }

    /// Every defined transition, for path-weight sums over the automaton.
    pub fn transitions() -> impl Iterator<Item = (State, Letter, State)> {
        State::ALL.iter().flat_map(|&s| {
            Letter::ALL
                .iter()
                .filter_map(move |&l| Dfa::step(s, l).map(|t| (s, l, t)))
        })
    }
}
