//! Independent oracles for the integration suites. Everything here is
//! deliberately written from scratch (no calls into the library's matching
//! or decomposition paths) so the tests cross-check rather than echo.

#![allow(dead_code)]

use crenel::Permutation;

/// All length-n value sequences that are permutations of 1..=n, in
/// lexicographic order. Independent of `crenel::perm::all_of_length`.
pub fn all_perms(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn go(n: usize, current: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 1..=n as u32 {
            if !used[v as usize] {
                used[v as usize] = true;
                current.push(v);
                go(n, current, used, out);
                current.pop();
                used[v as usize] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// Rank sequence of distinct entries: the oracle's own pattern function.
pub fn ranks(entries: &[u32]) -> Vec<u32> {
    entries
        .iter()
        .map(|&v| entries.iter().filter(|&&w| w < v).count() as u32 + 1)
        .collect()
}

/// Exhaustive subsequence containment: scans every k-subset of positions.
pub fn oracle_contains(hay: &[u32], needle: &[u32]) -> bool {
    let k = needle.len();
    if k > hay.len() {
        return false;
    }
    let target = ranks(needle);
    let mut picked: Vec<u32> = Vec::with_capacity(k);
    fn go(hay: &[u32], target: &[u32], start: usize, picked: &mut Vec<u32>) -> bool {
        if picked.len() == target.len() {
            return ranks(picked) == target;
        }
        for i in start..hay.len() {
            picked.push(hay[i]);
            if go(hay, target, i + 1, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
    go(hay, &target, 0, &mut picked)
}

/// Brute-force class level: filter all permutations of length n against the
/// basis with the oracle matcher.
pub fn oracle_class_level(n: usize, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
    all_perms(n)
        .into_iter()
        .filter(|p| basis.iter().all(|b| !oracle_contains(p, b)))
        .collect()
}

/// The default basis in oracle form.
pub fn oracle_basis() -> Vec<Vec<u32>> {
    vec![
        vec![4, 2, 3, 1],
        vec![3, 5, 1, 4, 2],
        vec![4, 2, 5, 1, 3],
        vec![3, 5, 1, 6, 2, 4],
    ]
}

/// The increasing oscillation 2 4 1 6 3 8 5 ... truncated to length m.
pub fn oscillation(m: usize) -> Vec<u32> {
    (1..=m)
        .map(|i| {
            if i == 1 {
                2
            } else if i % 2 == 1 {
                i as u32 - 2
            } else if i + 2 <= m {
                i as u32 + 2
            } else if i == m {
                m as u32 - 1
            } else {
                m as u32
            }
        })
        .collect()
}

/// Tiny deterministic generator for sampled checks.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }

    /// A uniform random permutation of 1..=n by shuffling.
    pub fn perm(&mut self, n: usize) -> Vec<u32> {
        let mut values: Vec<u32> = (1..=n as u32).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            values.swap(i, j);
        }
        values
    }
}

pub fn to_perm(values: &[u32]) -> Permutation {
    Permutation::new(values.to_vec()).expect("oracle produces valid permutations")
}
