//! Exact permutation arithmetic: patterns, containment, the two symmetries of
//! the class, interval detection, simplicity, substitution decomposition,
//! inflation and the N/S shape predicates.
//!
//! Permutations are kept in one-line notation with 1-based values. Every
//! value is immutable after construction and every operation is a pure
//! function, so all of this is safe to use from any number of threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors from permutation construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("duplicate entry {0} in input sequence")]
    DuplicateValue(u32),
    #[error("value {value} is not in 1..={len}")]
    ValueOutOfRange { value: u32, len: usize },
    #[error("inflation expects {skeleton} blocks, got {blocks}")]
    BlockCountMismatch { skeleton: usize, blocks: usize },
    #[error("inflation block at position {0} is empty")]
    EmptyBlock(usize),
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A permutation of {1..n} in one-line notation.
///
/// Ordering is lexicographic on the value sequence, which is the order used
/// for all sorted member listings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    /// Comma-separated one-line notation, e.g. `2,5,3,1,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts comma-separated values (`2,5,3,1,4`) and, for n <= 9, plain
    /// digit strings (`25314`).
    fn from_str(s: &str) -> Result<Self, PermError> {
        let parse_err = |reason: &str| PermError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|e| parse_err(&e.to_string()))?
        } else {
            if s.is_empty() {
                return Err(parse_err("empty string"));
            }
            if s.len() > 9 {
                return Err(parse_err("digit-string form only supports n <= 9"));
            }
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| parse_err("non-digit character")))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values).map_err(|e| parse_err(&e.to_string()))
    }
}

impl Permutation {
    /// Validates that `values` is a bijection of {1..n}.
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(PermError::ValueOutOfRange { value: v, len: n });
            }
            if seen[v as usize - 1] {
                return Err(PermError::DuplicateValue(v));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// Construction without the bijection check. Callers must guarantee it.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The one-line notation, 1-based values at 0-based positions.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The pattern (order-isomorphic permutation) of a sequence of distinct
    /// entries, e.g. the pattern of 47183 is 34152.
    pub fn pattern_of(entries: &[u32]) -> Result<Self, PermError> {
        if entries.is_empty() {
            return Err(PermError::EmptyInput);
        }
        let mut index: Vec<usize> = (0..entries.len()).collect();
        index.sort_by_key(|&i| entries[i]);
        for pair in index.windows(2) {
            if entries[pair[0]] == entries[pair[1]] {
                return Err(PermError::DuplicateValue(entries[pair[0]]));
            }
        }
        let mut values = vec![0u32; entries.len()];
        for (rank, &i) in index.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Ok(Permutation { values })
    }

    /// True iff some subsequence of `self` has pattern `needle`.
    pub fn contains(&self, needle: &Permutation) -> bool {
        let k = needle.len();
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.search(needle, &mut chosen, 0)
    }

    fn search(&self, needle: &Permutation, chosen: &mut Vec<usize>, start: usize) -> bool {
        let depth = chosen.len();
        if depth == needle.len() {
            return true;
        }
        let slack = self.len() - (needle.len() - depth);
        for pos in start..=slack {
            if self.consistent(needle, chosen, pos) {
                chosen.push(pos);
                if self.search(needle, chosen, pos + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    fn consistent(&self, needle: &Permutation, chosen: &[usize], pos: usize) -> bool {
        let depth = chosen.len();
        chosen.iter().enumerate().all(|(j, &earlier)| {
            (self.values[pos] > self.values[earlier])
                == (needle.values[depth] > needle.values[j])
        })
    }

    /// Containment restricted to occurrences in which `needle`'s maximum is
    /// matched at position `pinned` of `self`. Only meaningful when that
    /// position holds the global maximum of `self`, which is how the level
    /// extension uses it.
    pub(crate) fn contains_with_pinned_max(&self, needle: &Permutation, pinned: usize) -> bool {
        let k = needle.len();
        if k == 0 || k > self.len() {
            return k == 0;
        }
        let jmax = needle
            .values
            .iter()
            .enumerate()
            .max_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .expect("nonempty needle");
        if pinned < jmax || self.len() - pinned <= k - 1 - jmax {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.search_pinned(needle, &mut chosen, 0, jmax, pinned)
    }

    fn search_pinned(
        &self,
        needle: &Permutation,
        chosen: &mut Vec<usize>,
        start: usize,
        jmax: usize,
        pinned: usize,
    ) -> bool {
        let depth = chosen.len();
        if depth == needle.len() {
            return true;
        }
        if depth == jmax {
            if pinned >= start && self.consistent(needle, chosen, pinned) {
                chosen.push(pinned);
                if self.search_pinned(needle, chosen, pinned + 1, jmax, pinned) {
                    return true;
                }
                chosen.pop();
            }
            return false;
        }
        // keep room for the remaining choices on this side of the pin
        let upper = if depth < jmax {
            pinned - (jmax - depth - 1)
        } else {
            self.len() - (needle.len() - 1 - depth)
        };
        for pos in start..upper {
            if self.consistent(needle, chosen, pos) {
                chosen.push(pos);
                if self.search_pinned(needle, chosen, pos + 1, jmax, pinned) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// True iff `self` contains none of the patterns in `basis`.
    pub fn avoids_all(&self, basis: &PatternSet) -> bool {
        basis.patterns().iter().all(|b| !self.contains(b))
    }

    /// The group inverse: `q[p[i]] = i`.
    pub fn inverse(&self) -> Self {
        let mut values = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values }
    }

    /// Reverse the sequence and complement the values: `r[i] = n+1-p[n+1-i]`.
    pub fn reverse_complement(&self) -> Self {
        let n = self.len() as u32;
        let values = self.values.iter().rev().map(|&v| n + 1 - v).collect();
        Permutation { values }
    }

    /// The pattern of the first, last, greatest and least entries, taken in
    /// position order. Coinciding roles collapse, so the result can be
    /// shorter than 4.
    pub fn extreme_pattern(&self) -> Self {
        assert!(!self.is_empty(), "extreme_pattern of empty permutation");
        let argmax = self.position_of(self.len() as u32);
        let argmin = self.position_of(1);
        let mut roles = vec![0, self.len() - 1, argmax, argmin];
        roles.sort_unstable();
        roles.dedup();
        let entries: Vec<u32> = roles.iter().map(|&i| self.values[i]).collect();
        Permutation::pattern_of(&entries).expect("extreme entries are distinct")
    }

    /// 0-based position of a value.
    pub(crate) fn position_of(&self, value: u32) -> usize {
        self.values
            .iter()
            .position(|&v| v == value)
            .expect("value present")
    }

    /// All proper nontrivial intervals: contiguous position windows of length
    /// 2..=n-1 whose values are contiguous, in (start, length) order.
    /// Starts are 1-based.
    pub fn proper_intervals(&self) -> Vec<IntervalSpan> {
        let n = self.len();
        let mut spans = Vec::new();
        for start in 0..n {
            let mut lo = self.values[start];
            let mut hi = lo;
            for end in start + 1..n {
                lo = lo.min(self.values[end]);
                hi = hi.max(self.values[end]);
                let len = end - start + 1;
                if len > n - 1 {
                    break;
                }
                if (hi - lo) as usize == len - 1 {
                    spans.push(IntervalSpan {
                        start: start + 1,
                        length: len,
                    });
                }
            }
        }
        spans
    }

    /// A permutation is simple when its only intervals are singletons and the
    /// whole domain; lengths 1 and 2 are simple by convention.
    pub fn is_simple(&self) -> bool {
        let n = self.len();
        if n <= 2 {
            return true;
        }
        for start in 0..n {
            let mut lo = self.values[start];
            let mut hi = lo;
            for end in start + 1..n {
                lo = lo.min(self.values[end]);
                hi = hi.max(self.values[end]);
                let len = end - start + 1;
                if len > n - 1 {
                    break;
                }
                if (hi - lo) as usize == len - 1 {
                    return false;
                }
            }
        }
        true
    }

    /// The inflation `self[blocks[0], ..., blocks[n-1]]`: each point is
    /// replaced by an interval with the corresponding pattern, e.g.
    /// 2413[1, 21, 3142, 1] = 5 87 3142 6.
    pub fn inflate(&self, blocks: &[Permutation]) -> Result<Permutation, PermError> {
        if blocks.len() != self.len() {
            return Err(PermError::BlockCountMismatch {
                skeleton: self.len(),
                blocks: blocks.len(),
            });
        }
        if let Some(i) = blocks.iter().position(|b| b.is_empty()) {
            return Err(PermError::EmptyBlock(i + 1));
        }
        let mut offsets = vec![0u32; self.len()];
        for (i, &vi) in self.values.iter().enumerate() {
            offsets[i] = self
                .values
                .iter()
                .zip(blocks)
                .filter(|(&vj, _)| vj < vi)
                .map(|(_, b)| b.len() as u32)
                .sum();
        }
        let mut values = Vec::with_capacity(blocks.iter().map(|b| b.len()).sum());
        for (block, &offset) in blocks.iter().zip(&offsets) {
            values.extend(block.values.iter().map(|&v| v + offset));
        }
        Ok(Permutation { values })
    }

    /// The substitution decomposition: the unique simple skeleton together
    /// with its inflation blocks. For skeleton 12 (sum decomposable) the
    /// first block is sum indecomposable; for 21 the first block is skew
    /// indecomposable. For longer skeletons the blocks are the maximal
    /// proper intervals.
    pub fn decompose(&self) -> SkeletonDecomposition {
        assert!(!self.is_empty(), "decompose of empty permutation");
        let n = self.len();
        if n == 1 {
            return SkeletonDecomposition {
                skeleton: Permutation::identity(1),
                blocks: vec![Permutation::identity(1)],
            };
        }
        if let Some(k) = self.sum_split() {
            return SkeletonDecomposition {
                skeleton: Permutation::from_vec_unchecked(vec![1, 2]),
                blocks: vec![
                    Permutation::pattern_of(&self.values[..k]).expect("nonempty prefix"),
                    Permutation::pattern_of(&self.values[k..]).expect("nonempty suffix"),
                ],
            };
        }
        if let Some(k) = self.skew_split() {
            return SkeletonDecomposition {
                skeleton: Permutation::from_vec_unchecked(vec![2, 1]),
                blocks: vec![
                    Permutation::pattern_of(&self.values[..k]).expect("nonempty prefix"),
                    Permutation::pattern_of(&self.values[k..]).expect("nonempty suffix"),
                ],
            };
        }

        // Neither sum nor skew decomposable: the maximal proper intervals are
        // pairwise disjoint and quotient to a simple skeleton.
        let intervals = self.proper_intervals();
        let maximal: Vec<&IntervalSpan> = intervals
            .iter()
            .filter(|a| {
                !intervals.iter().any(|b| {
                    (b.start < a.start || b.start + b.length > a.start + a.length)
                        && b.start <= a.start
                        && a.start + a.length <= b.start + b.length
                })
            })
            .collect();

        let mut blocks = Vec::new();
        let mut representatives = Vec::new();
        let mut pos = 0usize;
        while pos < n {
            if let Some(span) = maximal.iter().find(|s| s.start - 1 == pos) {
                let window = &self.values[pos..pos + span.length];
                blocks.push(Permutation::pattern_of(window).expect("nonempty window"));
                representatives.push(*window.iter().min().expect("nonempty window"));
                pos += span.length;
            } else {
                assert!(
                    !maximal
                        .iter()
                        .any(|s| s.start - 1 < pos && pos < s.start - 1 + s.length),
                    "maximal intervals of an indecomposable permutation overlap"
                );
                blocks.push(Permutation::identity(1));
                representatives.push(self.values[pos]);
                pos += 1;
            }
        }
        let skeleton = Permutation::pattern_of(&representatives).expect("nonempty quotient");
        debug_assert!(skeleton.is_simple());
        SkeletonDecomposition { skeleton, blocks }
    }

    /// Minimal k < n such that the first k entries are {1..k}.
    fn sum_split(&self) -> Option<usize> {
        let mut max = 0u32;
        for k in 1..self.len() {
            max = max.max(self.values[k - 1]);
            if max as usize == k {
                return Some(k);
            }
        }
        None
    }

    /// Minimal k < n such that the first k entries are the k largest values.
    fn skew_split(&self) -> Option<usize> {
        let n = self.len() as u32;
        let mut min = u32::MAX;
        for k in 1..self.len() {
            min = min.min(self.values[k - 1]);
            if min == n - k as u32 + 1 {
                return Some(k);
            }
        }
        None
    }

    /// True iff the skeleton is 12.
    pub fn is_sum_decomposable(&self) -> bool {
        self.len() >= 2 && self.sum_split().is_some()
    }

    /// True iff the skeleton is 21.
    pub fn is_skew_decomposable(&self) -> bool {
        self.len() >= 2 && self.skew_split().is_some()
    }

    /// True iff the extreme pattern is 2413 and the permutation splits at its
    /// maximum and minimum into increasing, decreasing, increasing runs.
    pub fn is_n_shaped(&self) -> bool {
        if self.is_empty() || self.extreme_pattern().values() != [2, 4, 1, 3] {
            return false;
        }
        let peak = self.position_of(self.len() as u32);
        let trough = self.position_of(1);
        self.run_increasing(0, peak)
            && self.run_decreasing(peak, trough)
            && self.run_increasing(trough, self.len() - 1)
    }

    /// True iff the extreme pattern is 3142 and the three value bands cut at
    /// the last and first entries form increasing, decreasing, increasing
    /// sequences. Equivalent to `is_n_shaped` of the inverse.
    pub fn is_s_shaped(&self) -> bool {
        if self.is_empty() || self.extreme_pattern().values() != [3, 1, 4, 2] {
            return false;
        }
        let positions = self.inverse();
        let low = *self.values.last().expect("nonempty") as usize;
        let high = self.values[0] as usize;
        positions.run_increasing(0, low - 1)
            && positions.run_decreasing(low - 1, high - 1)
            && positions.run_increasing(high - 1, self.len() - 1)
    }

    fn run_increasing(&self, from: usize, to: usize) -> bool {
        (from..to).all(|i| self.values[i] < self.values[i + 1])
    }

    fn run_decreasing(&self, from: usize, to: usize) -> bool {
        (from..to).all(|i| self.values[i] > self.values[i + 1])
    }

    /// Deletes the entry at `pos` and re-patterns the rest.
    pub fn delete(&self, pos: usize) -> Permutation {
        let removed = self.values[pos];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Permutation { values }
    }
}

/// All permutations of length `n` in lexicographic order. Factorial growth;
/// intended for desk-scale cross-checks only.
pub fn all_of_length(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    build_all(n, &mut current, &mut used, &mut out);
    out
}

fn build_all(n: usize, current: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if current.len() == n {
        out.push(Permutation::from_vec_unchecked(current.clone()));
        return;
    }
    for v in 1..=n as u32 {
        if !used[v as usize - 1] {
            used[v as usize - 1] = true;
            current.push(v);
            build_all(n, current, used, out);
            current.pop();
            used[v as usize - 1] = false;
        }
    }
}

/// A proper nontrivial interval: a window of `length >= 2` positions whose
/// values are contiguous. `start` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntervalSpan {
    pub start: usize,
    pub length: usize,
}

/// A simple skeleton together with the ordered inflation blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonDecomposition {
    pub skeleton: Permutation,
    pub blocks: Vec<Permutation>,
}

impl SkeletonDecomposition {
    /// Re-inflates; always reproduces the decomposed permutation.
    pub fn reassemble(&self) -> Permutation {
        self.skeleton
            .inflate(&self.blocks)
            .expect("decomposition blocks match skeleton arity")
    }
}

/// A finite set of forbidden patterns in canonical (length, then lex) order.
///
/// The default instance is the basis {4231, 35142, 42513, 351624}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl Default for PatternSet {
    fn default() -> Self {
        let patterns = ["4231", "35142", "42513", "351624"]
            .iter()
            .map(|s| s.parse().expect("valid basis literal"))
            .collect();
        PatternSet { patterns }
    }
}

impl PatternSet {
    /// Builds a pattern set, deduplicating and sorting canonically. Every
    /// pattern must be nonempty.
    pub fn new(patterns: Vec<Permutation>) -> Result<Self, PermError> {
        if patterns.iter().any(|p| p.is_empty()) {
            return Err(PermError::EmptyInput);
        }
        let mut patterns = patterns;
        patterns.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        patterns.dedup();
        Ok(PatternSet { patterns })
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    /// Whether this is the default basis, the only one for which the golden
    /// values in the verification suites apply.
    pub fn is_default_basis(&self) -> bool {
        *self == PatternSet::default()
    }
}

/// Histogram of extreme patterns over a collection of permutations.
pub fn extreme_pattern_histogram<'a, I>(perms: I) -> BTreeMap<Permutation, u64>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut histogram = BTreeMap::new();
    for p in perms {
        *histogram.entry(p.extreme_pattern()).or_insert(0) += 1;
    }
    histogram
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().expect("test literal")
    }

    /// Exhaustive subsequence scan, independent of the DFS matcher.
    fn oracle_contains(hay: &Permutation, needle: &Permutation) -> bool {
        let n = hay.len();
        let k = needle.len();
        if k > n {
            return false;
        }
        fn choose(
            hay: &Permutation,
            needle: &Permutation,
            start: usize,
            picked: &mut Vec<u32>,
        ) -> bool {
            if picked.len() == needle.len() {
                return Permutation::pattern_of(picked).unwrap() == *needle;
            }
            for i in start..hay.len() {
                picked.push(hay.values()[i]);
                if choose(hay, needle, i + 1, picked) {
                    return true;
                }
                picked.pop();
            }
            false
        }
        choose(hay, needle, 0, &mut Vec::new())
    }

    #[test]
    fn pattern_of_examples() {
        assert_eq!(Permutation::pattern_of(&[4, 7, 1, 8, 3]).unwrap(), p("34152"));
        assert_eq!(Permutation::pattern_of(&[1, 2, 3]).unwrap(), p("123"));
        // rank computation by sorting: the 4231 witness inside 463152
        assert_eq!(Permutation::pattern_of(&[6, 3, 5, 2]).unwrap(), p("4231"));
    }

    #[test]
    fn pattern_of_errors() {
        assert_eq!(Permutation::pattern_of(&[]), Err(PermError::EmptyInput));
        assert_eq!(
            Permutation::pattern_of(&[3, 1, 3]),
            Err(PermError::DuplicateValue(3))
        );
    }

    #[test]
    fn containment_examples() {
        assert!(p("463152").contains(&p("4231")));
        assert!(oracle_contains(&p("463152"), &p("4231")));
        assert!(!p("25314").contains(&p("4231")));
        assert!(!oracle_contains(&p("25314"), &p("4231")));
        for s in ["1", "21", "2413", "35142"] {
            assert!(p(s).contains(&p(s)));
        }
        // longer needle than haystack
        assert!(!p("21").contains(&p("321")));
    }

    #[test]
    fn contains_matches_oracle_on_small_cases() {
        for n in 1..=5 {
            for hay in all_of_length(n) {
                for k in 1..=n {
                    for needle in all_of_length(k) {
                        assert_eq!(
                            hay.contains(&needle),
                            oracle_contains(&hay, &needle),
                            "hay={hay} needle={needle}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_max_matches_plain_containment() {
        // Oracle check of the extension optimization: inserting a new maximum
        // and testing with the pinned matcher must agree with avoids_all.
        let basis = PatternSet::default();
        for n in 1..=5 {
            for parent in all_of_length(n) {
                if !parent.avoids_all(&basis) {
                    continue;
                }
                for slot in 0..=n {
                    let mut values = parent.values().to_vec();
                    values.insert(slot, n as u32 + 1);
                    let child = Permutation::new(values).unwrap();
                    for b in basis.patterns() {
                        assert_eq!(
                            child.contains(b),
                            child.contains_with_pinned_max(b, slot),
                            "child={child} pattern={b} slot={slot}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn avoids_all_examples() {
        let basis = PatternSet::default();
        assert!(p("264315").avoids_all(&basis));
        assert!(!p("4231").avoids_all(&basis));
        assert!(p("123456").avoids_all(&basis));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("25314").inverse(), p("41352"));
        assert_eq!(p("2413").inverse(), p("3142"));
        assert_eq!(p("12345").inverse(), p("12345"));
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(p("35142").reverse_complement(), p("42513"));
        assert_eq!(p("4231").reverse_complement(), p("4231"));
        assert_eq!(p("1").reverse_complement(), p("1"));
    }

    #[test]
    fn extreme_pattern_examples() {
        assert_eq!(p("2413").extreme_pattern(), p("2413"));
        assert_eq!(p("24153").extreme_pattern(), p("2143"));
        assert_eq!(p("25314").extreme_pattern(), p("2413"));
        // coinciding roles collapse instead of erroring
        assert_eq!(p("1").extreme_pattern(), p("1"));
        assert_eq!(p("132").extreme_pattern(), p("132"));
        assert_eq!(p("12").extreme_pattern(), p("12"));
    }

    #[test]
    fn proper_interval_examples() {
        let spans = p("479683152").proper_intervals();
        assert!(spans.contains(&IntervalSpan { start: 2, length: 4 }));
        assert!(p("2413").proper_intervals().is_empty());
        assert_eq!(
            p("264315").proper_intervals(),
            vec![IntervalSpan { start: 3, length: 2 }]
        );
    }

    #[test]
    fn simplicity_examples() {
        assert!(p("2413").is_simple());
        assert!(!p("479683152").is_simple());
        assert!(!p("123").is_simple());
        assert!(p("1").is_simple());
        assert!(p("21").is_simple());
        // no length-3 permutation is simple
        for q in all_of_length(3) {
            assert!(!q.is_simple(), "{q}");
        }
    }

    #[test]
    fn inflation_examples() {
        let skeleton = p("2413");
        let blocks = vec![p("1"), p("21"), p("3142"), p("1")];
        assert_eq!(skeleton.inflate(&blocks).unwrap(), p("58731426"));
        let trivial = vec![p("1"); 4];
        assert_eq!(skeleton.inflate(&trivial).unwrap(), skeleton);
        assert_eq!(
            p("25314")
                .inflate(&[p("1"), p("1"), p("21"), p("1"), p("1")])
                .unwrap(),
            p("264315")
        );
    }

    #[test]
    fn inflation_errors() {
        assert_eq!(
            p("12").inflate(&[p("1")]),
            Err(PermError::BlockCountMismatch { skeleton: 2, blocks: 1 })
        );
        let empty = Permutation::new(vec![]).unwrap();
        assert_eq!(
            p("12").inflate(&[p("1"), empty]),
            Err(PermError::EmptyBlock(2))
        );
    }

    #[test]
    fn decomposition_examples() {
        let d = p("58731426").decompose();
        assert_eq!(d.skeleton, p("2413"));
        assert_eq!(d.blocks, vec![p("1"), p("21"), p("3142"), p("1")]);
        assert_eq!(d.reassemble(), p("58731426"));

        let d = p("123").decompose();
        assert_eq!(d.skeleton, p("12"));
        assert_eq!(d.blocks, vec![p("1"), p("12")]);

        let d = p("264315").decompose();
        assert_eq!(d.skeleton, p("25314"));
        assert_eq!(d.blocks, vec![p("1"), p("1"), p("21"), p("1"), p("1")]);
    }

    #[test]
    fn decompose_inflate_round_trip_exhaustive_small() {
        for n in 1..=6 {
            for q in all_of_length(n) {
                assert_eq!(q.decompose().reassemble(), q, "{q}");
            }
        }
    }

    #[test]
    fn sum_skew_decomposable_examples() {
        assert!(p("123").is_sum_decomposable());
        assert!(!p("123").is_skew_decomposable());
        assert!(p("4231").is_skew_decomposable());
        assert!(!p("2413").is_sum_decomposable());
        assert!(!p("2413").is_skew_decomposable());
        assert!(!p("1").is_sum_decomposable());
        assert!(!p("1").is_skew_decomposable());
    }

    #[test]
    fn n_shape_examples() {
        assert!(p("25314").is_n_shaped());
        assert!(p("2413").is_n_shaped());
        // 246315 has extreme pattern 2413 and all three runs are monotone,
        // so the definition makes it N-shaped.
        assert_eq!(p("246315").extreme_pattern(), p("2413"));
        assert!(p("246315").is_n_shaped());
        // extreme pattern 2143, so the predicate is false outright
        assert!(!p("24153").is_n_shaped());
        // wrong middle run
        assert!(!p("251364").is_n_shaped());
    }

    #[test]
    fn s_shape_examples() {
        assert!(p("3142").is_s_shaped());
        assert!(p("41352").is_s_shaped());
        assert_eq!(p("41352"), p("25314").inverse());
        // extreme pattern of 35142 is 3412, so the predicate is false
        assert!(!p("35142").is_s_shaped());
        assert!(!p("31524").is_s_shaped());
    }

    #[test]
    fn s_shape_agrees_with_n_shape_of_inverse() {
        for n in 1..=6 {
            for q in all_of_length(n) {
                assert_eq!(q.is_s_shaped(), q.inverse().is_n_shaped(), "{q}");
            }
        }
    }

    #[test]
    fn simple_extreme_patterns_are_restricted() {
        let allowed = [p("2143"), p("2413"), p("3142"), p("3412")];
        for n in 4..=6 {
            for q in all_of_length(n) {
                if q.is_simple() {
                    assert!(allowed.contains(&q.extreme_pattern()), "{q}");
                }
            }
        }
    }

    #[test]
    fn default_basis_is_canonical_antichain_closed_under_symmetries() {
        let basis = PatternSet::default();
        let members = basis.patterns();
        assert_eq!(
            members,
            &[p("4231"), p("35142"), p("42513"), p("351624")]
        );
        for a in members {
            for b in members {
                if a != b {
                    assert!(!a.contains(b), "{a} contains {b}");
                }
            }
        }
        let inverses = PatternSet::new(members.iter().map(|q| q.inverse()).collect()).unwrap();
        let rcs =
            PatternSet::new(members.iter().map(|q| q.reverse_complement()).collect()).unwrap();
        assert_eq!(basis, inverses);
        assert_eq!(basis, rcs);
        assert!(basis.is_default_basis());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("2,5,3,1,4"), p("25314"));
        assert_eq!(p("25314").to_string(), "2,5,3,1,4");
        assert!("".parse::<Permutation>().is_err());
        assert!("2,5,3".parse::<Permutation>().is_err());
        assert!("120".parse::<Permutation>().is_err());
        assert!("1234567891".parse::<Permutation>().is_err());
        // 10+ values are fine in comma form
        let big: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(big.len(), 10);
    }

    #[test]
    fn delete_repatterns() {
        assert_eq!(p("25314").delete(1), p("2314"));
        assert_eq!(p("25314").delete(0), p("4213"));
        assert_eq!(p("25314").delete(3), p("1423"));
    }
}
