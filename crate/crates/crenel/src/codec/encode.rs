//! Structural encoder: peels a simple class member back into its code word.
//!
//! The isolated points are recovered by an alternating extremal scan (the
//! highest point left of the previous isolated point, then the rightmost
//! point below it). Every remaining point is then classified by how many
//! isolated points lie below it and how many lie before it; those two counts
//! pin down its block and letter except at block boundaries, where a point
//! could either close a block as `c` or open the next one as `a`. That tie
//! is settled the way the word rules demand: a block never begins with `a`,
//! so a point belongs to the later block only if it sits inside that block's
//! extent (past its first `b` or `c`). The result is checked by decoding.

use crate::perm::{PatternSet, Permutation};

use super::decode::decode;
use super::word::{Letter, Word};
use super::{CodecError, NotEncodableReason};

/// Encodes an eligible simple class member as its unique valid word.
///
/// Eligible means: length at least 4, simple, avoiding the default basis,
/// and with second entry different from 1. Members with second entry 1 are
/// the inverses of encodable ones; callers may retry with the inverse.
pub fn encode(p: &Permutation) -> Result<Word, CodecError> {
    if p.len() < 4 {
        return Err(CodecError::NotEncodable(NotEncodableReason::TooShort));
    }
    if !p.is_simple() {
        return Err(CodecError::NotEncodable(NotEncodableReason::NotSimple));
    }
    if !p.avoids_all(&PatternSet::default()) {
        return Err(CodecError::NotEncodable(NotEncodableReason::NotInClass));
    }
    if p.values()[1] == 1 {
        return Err(CodecError::NotEncodable(NotEncodableReason::WrongOrientation));
    }
    encode_inner(p).ok_or(CodecError::NotEncodable(NotEncodableReason::NotCrenellationForm))
}

fn encode_inner(p: &Permutation) -> Option<Word> {
    let vals = p.values();
    let n = p.len();
    if vals[0] != 2 {
        return None;
    }

    let iso = isolated_points(p)?;
    let m = iso.len() - 2;
    if m < 2 {
        return None;
    }
    let mut in_iso = vec![false; n];
    for &i in &iso {
        in_iso[i] = true;
    }
    let mut iso_vals: Vec<u32> = iso.iter().map(|&i| vals[i]).collect();
    iso_vals.sort_unstable();
    let mut iso_pos: Vec<usize> = iso.clone();
    iso_pos.sort_unstable();

    // Classify the block points by their isolated-point counts. Unambiguous
    // signatures land directly; boundary points go to their cells.
    let mut blocks: Vec<Vec<(usize, u32, Letter)>> = vec![Vec::new(); m];
    let mut cell_a: Vec<Vec<(usize, u32)>> = vec![Vec::new(); m + 3];
    let mut cell_b: Vec<Vec<(usize, u32)>> = vec![Vec::new(); m + 3];
    for pos in 0..n {
        if in_iso[pos] {
            continue;
        }
        let val = vals[pos];
        let vg = iso_vals.partition_point(|&v| v < val);
        let pg = iso_pos.partition_point(|&q| q < pos);
        if vg == pg {
            // interior of a block: N-shaped when the count is even
            let block = vg.checked_sub(2)?;
            if block >= m {
                return None;
            }
            blocks[block].push((pos, val, Letter::B));
        } else if vg % 2 == 0 && pg + 1 == vg {
            if vg >= m + 3 {
                return None;
            }
            cell_a[vg].push((pos, val));
        } else if vg % 2 == 0 && pg == vg + 1 {
            if vg >= m + 3 {
                return None;
            }
            cell_b[vg].push((pos, val));
        } else {
            return None;
        }
    }

    // Resolve boundary cells from the top of the staircase downwards, so a
    // block's b and c members are complete before its a candidates are split.
    for g in (2..m + 3).rev() {
        for (pos, val) in cell_b[g].drain(..).collect::<Vec<_>>() {
            // c closing N block g-2, or a opening S block g-1
            let opens_later = g - 1 < m
                && blocks[g - 1]
                    .iter()
                    .filter(|t| t.2 != Letter::A)
                    .map(|t| t.0)
                    .min()
                    .is_some_and(|leftmost| pos > leftmost);
            if opens_later {
                blocks[g - 1].push((pos, val, Letter::A));
            } else {
                if g - 2 >= m {
                    return None;
                }
                blocks[g - 2].push((pos, val, Letter::C));
            }
        }
        for (pos, val) in cell_a[g].drain(..).collect::<Vec<_>>() {
            // c closing S block g-3, or a opening N block g-2
            let opens_later = g - 2 < m
                && blocks[g - 2]
                    .iter()
                    .filter(|t| t.2 != Letter::A)
                    .map(|t| t.1)
                    .min()
                    .is_some_and(|lowest| val > lowest);
            if opens_later {
                blocks[g - 2].push((pos, val, Letter::A));
            } else {
                if g < 3 || g - 3 >= m {
                    return None;
                }
                blocks[g - 3].push((pos, val, Letter::C));
            }
        }
    }

    // Factors read bottom-to-top in N blocks and left-to-right in S blocks.
    let mut letters = vec![Letter::D, Letter::D];
    for (j, members) in blocks.iter_mut().enumerate() {
        if j % 2 == 0 {
            members.sort_unstable_by_key(|t| t.1);
        } else {
            members.sort_unstable_by_key(|t| t.0);
        }
        letters.extend(members.iter().map(|t| t.2));
        letters.push(Letter::D);
    }
    let word = Word::new(letters);
    if !word.is_valid() {
        return None;
    }
    match decode(&word) {
        Ok(q) if q == *p => Some(word),
        _ => None,
    }
}

/// The isolated points in encoding order: the first entry, the position of
/// value 1, then alternately the highest point left of the previous one and
/// the rightmost point below it, until the scan revisits a known point.
fn isolated_points(p: &Permutation) -> Option<Vec<usize>> {
    let vals = p.values();
    let n = p.len();
    let pos_of_one = p.values().iter().position(|&v| v == 1)?;
    let mut iso = vec![0usize, pos_of_one];
    let mut member = vec![false; n];
    member[0] = true;
    member[pos_of_one] = true;
    let mut parity_even = true;
    while iso.len() <= n {
        let prev = *iso.last().expect("nonempty");
        let cand = if parity_even {
            (0..prev).max_by_key(|&i| vals[i])?
        } else {
            (0..n).rev().find(|&i| vals[i] < vals[prev])?
        };
        if member[cand] {
            return Some(iso);
        }
        member[cand] = true;
        iso.push(cand);
        parity_even = !parity_even;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::words_of_length;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&p("2413")).unwrap().to_string(), "dddd");
        assert_eq!(encode(&p("25314")).unwrap().to_string(), "ddbdd");
        assert_eq!(encode(&p("24153")).unwrap().to_string(), "ddddd");
    }

    #[test]
    fn encode_rejects_with_reasons() {
        assert!(matches!(
            encode(&p("123")),
            Err(CodecError::NotEncodable(NotEncodableReason::TooShort))
        ));
        assert!(matches!(
            encode(&p("4231")),
            Err(CodecError::NotEncodable(NotEncodableReason::NotSimple))
        ));
        assert!(matches!(
            encode(&p("35142")),
            Err(CodecError::NotEncodable(NotEncodableReason::NotInClass))
        ));
        // second entry 1: the inverse orientation encodes instead
        assert!(matches!(
            encode(&p("3142")),
            Err(CodecError::NotEncodable(NotEncodableReason::WrongOrientation))
        ));
        assert_eq!(encode(&p("3142").inverse()).unwrap().to_string(), "dddd");
    }

    #[test]
    fn encode_inverts_decode_on_short_words() {
        for n in 4..=9 {
            for word in words_of_length(n) {
                let q = decode(&word).unwrap();
                assert_eq!(encode(&q).unwrap(), word, "word {word}");
            }
        }
    }
}
