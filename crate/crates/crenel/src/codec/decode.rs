//! Decoding words to simple permutations through an explicit plane template.
//!
//! A valid word parses as `dd f0 d f1 d ... f(m-1) d`: two opening isolated
//! points, then m blocks, each block's factor terminated by the `d` of the
//! next isolated point. Even-indexed blocks are N-shaped (their three letter
//! groups stack by value), odd-indexed blocks are S-shaped (the mirror, by
//! position). Every point receives exact rational coordinates; the decoded
//! permutation is the pattern of the resulting point set. No floating point
//! is involved anywhere.

use num_rational::Ratio;

use crate::perm::Permutation;

use super::word::{Letter, Word};
use super::CodecError;

type Coord = Ratio<i64>;

/// What a decoded point came from: the k-th isolated point (1-based, in
/// encoding order) or a letter of a block factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointRole {
    Isolated { ordinal: usize },
    BlockPoint { block: usize, letter: Letter },
}

/// Decodes a valid word to the simple class member it encodes.
pub fn decode(word: &Word) -> Result<Permutation, CodecError> {
    decode_with_roles(word).map(|(p, _)| p)
}

/// Decode, also reporting for each position of the result which template
/// point produced it.
pub fn decode_with_roles(word: &Word) -> Result<(Permutation, Vec<PointRole>), CodecError> {
    word.validate().map_err(CodecError::InvalidWord)?;
    let factors = parse_factors(word);

    let mut points: Vec<(Coord, Coord, PointRole)> = Vec::with_capacity(word.len());
    points.push((c(-30), c(-10), PointRole::Isolated { ordinal: 1 }));
    points.push((c(20), c(-20), PointRole::Isolated { ordinal: 2 }));

    for (block, factor) in factors.iter().enumerate() {
        let k = (block / 2) as i64;
        let base = c(40 * k);
        place_block(&mut points, block, factor, base);
        let terminator = if block % 2 == 0 {
            (base + c(10), base + c(30))
        } else {
            (base + c(60), base + c(20))
        };
        points.push((
            terminator.0,
            terminator.1,
            PointRole::Isolated { ordinal: block + 3 },
        ));
    }

    debug_assert_eq!(points.len(), word.len());
    points.sort_by_key(|p| p.0);
    debug_assert!(points.windows(2).all(|w| w[0].0 < w[1].0));

    // rank the y coordinates to read off one-line notation
    let mut by_y: Vec<usize> = (0..points.len()).collect();
    by_y.sort_by(|&i, &j| points[i].1.cmp(&points[j].1));
    debug_assert!(by_y.windows(2).all(|w| points[w[0]].1 < points[w[1]].1));
    let mut values = vec![0u32; points.len()];
    for (rank, &i) in by_y.iter().enumerate() {
        values[i] = rank as u32 + 1;
    }

    let roles = points.iter().map(|p| p.2).collect();
    Ok((Permutation::from_vec_unchecked(values), roles))
}

/// Splits the letters after the opening `dd` into the per-block factors,
/// one per remaining `d`.
fn parse_factors(word: &Word) -> Vec<Vec<Letter>> {
    let mut factors = Vec::new();
    let mut current = Vec::new();
    for &letter in &word.letters()[2..] {
        if letter == Letter::D {
            factors.push(std::mem::take(&mut current));
        } else {
            current.push(letter);
        }
    }
    debug_assert!(current.is_empty(), "valid words end with d");
    factors
}

fn place_block(points: &mut Vec<(Coord, Coord, PointRole)>, block: usize, factor: &[Letter], base: Coord) {
    let t = factor.len() as i64;
    let group_sizes = |letter: Letter| factor.iter().filter(|&&l| l == letter).count() as i64;
    let mut seen = [0i64; 3]; // per-letter running index within its group

    for (i, &letter) in factor.iter().enumerate() {
        let along = Ratio::new(10 * (i as i64 + 1), t + 1);
        let (g, lane) = match letter {
            Letter::A => (0, 0i64),
            Letter::B => (1, 1),
            Letter::C => (2, 2),
            Letter::D => unreachable!("factors contain no d"),
        };
        let s = group_sizes(letter);
        let q = seen[g];
        seen[g] += 1;
        // a and c advance with the factor order, b runs backwards
        let within = if letter == Letter::B {
            Ratio::new(10 * (s - q), s + 1)
        } else {
            Ratio::new(10 * (q + 1), s + 1)
        };
        let role = PointRole::BlockPoint { block, letter };
        if block % 2 == 0 {
            // N-shaped: factor order climbs the value band, lanes split by x
            let y = base + along;
            let x = base + c(10 * lane) + within;
            points.push((x, y, role));
        } else {
            // S-shaped: factor order walks the position band, lanes split by y
            let x = base + c(30) + along;
            let y = base + c(10 * (lane + 1)) + within;
            points.push((x, y, role));
        }
    }
}

fn c(v: i64) -> Coord {
    Ratio::from_integer(v)
}
