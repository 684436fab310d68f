//! Brute-force enumeration of the class by length, with census statistics
//! and machine verification of the structural claims about its simple
//! members and their inflations.
//!
//! Levels are generated breadth-first by inserting a new maximum into every
//! slot of every member of the previous level: classes are closed under
//! point deletion, so every member of length n+1 arises from exactly one
//! parent this way, and only basis occurrences through the new maximum need
//! checking.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::codec::{allowed_block_classes, BlockClass};
use crate::perm::{all_of_length, extreme_pattern_histogram, PatternSet, Permutation};

/// Default ceiling on enumerated lengths. Levels grow roughly fourfold per
/// length, so this keeps accidental runaway enumerations at desk scale.
pub const DEFAULT_LIMIT: usize = 11;

/// Errors from enumeration and the verification reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("length {requested} exceeds the configured limit {limit}")]
    LimitExceeded { requested: usize, limit: usize },
    #[error("lengths start at 1")]
    InvalidLength,
    #[error("structure violation for {witness}: {rule}")]
    StructureViolation { witness: Permutation, rule: String },
    #[error("inflation profile violation for {witness}: {detail}")]
    ProfileViolation { witness: Permutation, detail: String },
}

/// One level of the class: all members of a fixed length, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassLevel {
    pub n: usize,
    pub members: Vec<Permutation>,
}

/// Census of one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub n: usize,
    pub class_count: u64,
    pub simple_count: u64,
    pub skew_dec_count: u64,
    pub sum_indec_count: u64,
    /// Extreme patterns over the simple members of this level.
    pub extreme_pattern_histogram: BTreeMap<Permutation, u64>,
}

/// The basis-avoiding extensions of `p` by a new maximum, one per insertion
/// slot that survives. Only occurrences through the new maximum are tested;
/// the parent is assumed to avoid the basis already.
pub fn extend_by_max(p: &Permutation, basis: &PatternSet) -> Vec<Permutation> {
    let n = p.len();
    let mut children = Vec::with_capacity(n + 1);
    for slot in 0..=n {
        let mut values = Vec::with_capacity(n + 1);
        values.extend_from_slice(&p.values()[..slot]);
        values.push(n as u32 + 1);
        values.extend_from_slice(&p.values()[slot..]);
        let child = Permutation::from_vec_unchecked(values);
        if basis
            .patterns()
            .iter()
            .all(|b| !child.contains_with_pinned_max(b, slot))
        {
            children.push(child);
        }
    }
    children
}

/// Level-by-level enumerator with a progressive cache.
#[derive(Debug, Clone)]
pub struct Enumerator {
    basis: PatternSet,
    limit: usize,
    levels: Vec<ClassLevel>,
}

impl Enumerator {
    pub fn new(basis: PatternSet) -> Self {
        Enumerator {
            basis,
            limit: DEFAULT_LIMIT,
            levels: Vec::new(),
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn basis(&self) -> &PatternSet {
        &self.basis
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// All members of length `n`, extending the cache as needed.
    pub fn level(&mut self, n: usize) -> Result<&ClassLevel, ClassError> {
        if n == 0 {
            return Err(ClassError::InvalidLength);
        }
        if n > self.limit {
            return Err(ClassError::LimitExceeded {
                requested: n,
                limit: self.limit,
            });
        }
        while self.levels.len() < n {
            let next = match self.levels.last() {
                None => {
                    let one = Permutation::identity(1);
                    let members = if one.avoids_all(&self.basis) {
                        vec![one]
                    } else {
                        Vec::new()
                    };
                    ClassLevel { n: 1, members }
                }
                Some(prev) => {
                    let mut members = Vec::new();
                    for p in &prev.members {
                        members.extend(extend_by_max(p, &self.basis));
                    }
                    members.sort_unstable();
                    ClassLevel {
                        n: prev.n + 1,
                        members,
                    }
                }
            };
            self.levels.push(next);
        }
        Ok(&self.levels[n - 1])
    }

    /// Member counts for lengths 1..=max_n.
    pub fn counts(&mut self, max_n: usize) -> Result<Vec<(usize, u64)>, ClassError> {
        (1..=max_n)
            .map(|n| self.level(n).map(|l| (n, l.members.len() as u64)))
            .collect()
    }

    /// The simple members of length `n`, sorted.
    pub fn simple_members(&mut self, n: usize) -> Result<Vec<Permutation>, ClassError> {
        Ok(self
            .level(n)?
            .members
            .iter()
            .filter(|p| p.is_simple())
            .cloned()
            .collect())
    }

    /// The skew decomposable members of length `n`, sorted.
    pub fn skew_decomposable_members(&mut self, n: usize) -> Result<Vec<Permutation>, ClassError> {
        Ok(self
            .level(n)?
            .members
            .iter()
            .filter(|p| p.is_skew_decomposable())
            .cloned()
            .collect())
    }

    /// Census statistics for length `n`.
    pub fn census(&mut self, n: usize) -> Result<CensusRecord, ClassError> {
        let level = self.level(n)?;
        let simples: Vec<&Permutation> =
            level.members.iter().filter(|p| p.is_simple()).collect();
        Ok(CensusRecord {
            n,
            class_count: level.members.len() as u64,
            simple_count: simples.len() as u64,
            skew_dec_count: level
                .members
                .iter()
                .filter(|p| p.is_skew_decomposable())
                .count() as u64,
            sum_indec_count: level
                .members
                .iter()
                .filter(|p| !p.is_sum_decomposable())
                .count() as u64,
            extreme_pattern_histogram: extreme_pattern_histogram(simples),
        })
    }

    /// Checks, over every simple member of lengths 4..=max_n: the extreme
    /// pattern is never 3412; members with extreme pattern 2413 are
    /// N-shaped; members with extreme pattern 3142 are S-shaped; and exactly
    /// one of "first entry is 2" / "second entry is 1" holds, with the two
    /// counts equal at every length.
    pub fn verify_structure(&mut self, max_n: usize) -> Result<StructureReport, ClassError> {
        let forbidden: Permutation = "3412".parse().expect("literal");
        let n_extreme: Permutation = "2413".parse().expect("literal");
        let s_extreme: Permutation = "3142".parse().expect("literal");
        let mut levels = Vec::new();
        for n in 4..=max_n {
            let simples = self.simple_members(n)?;
            let mut first_is_two = 0u64;
            let mut second_is_one = 0u64;
            for p in &simples {
                let extreme = p.extreme_pattern();
                if extreme == forbidden {
                    return Err(ClassError::StructureViolation {
                        witness: p.clone(),
                        rule: "extreme pattern 3412 should be impossible".into(),
                    });
                }
                if extreme == n_extreme && !p.is_n_shaped() {
                    return Err(ClassError::StructureViolation {
                        witness: p.clone(),
                        rule: "extreme pattern 2413 requires the N shape".into(),
                    });
                }
                if extreme == s_extreme && !p.is_s_shaped() {
                    return Err(ClassError::StructureViolation {
                        witness: p.clone(),
                        rule: "extreme pattern 3142 requires the S shape".into(),
                    });
                }
                match (p.values()[0] == 2, p.values()[1] == 1) {
                    (true, false) => first_is_two += 1,
                    (false, true) => second_is_one += 1,
                    _ => {
                        return Err(ClassError::StructureViolation {
                            witness: p.clone(),
                            rule: "exactly one of first=2 / second=1 must hold".into(),
                        })
                    }
                }
            }
            if first_is_two != second_is_one {
                return Err(ClassError::StructureViolation {
                    witness: Permutation::identity(n),
                    rule: format!(
                        "orientation halves differ at n={n}: {first_is_two} vs {second_is_one}"
                    ),
                });
            }
            levels.push(StructureLevel {
                n,
                simple_count: simples.len() as u64,
                first_is_two,
                second_is_one,
                histogram: extreme_pattern_histogram(simples.iter()),
            });
        }
        Ok(StructureReport { levels })
    }

    /// Verifies the inflation profile both ways for lengths 5..=max_n: every
    /// member whose skeleton is simple of length >= 4 uses only blocks from
    /// the skeleton's allowed classes, and every such inflation of every
    /// simple member lands in the class.
    pub fn verify_inflation_profile(
        &mut self,
        max_n: usize,
    ) -> Result<InflationReport, ClassError> {
        let mut levels = Vec::new();
        let mut block_pool = BlockPool::default();
        for n in 5..=max_n {
            // forward: decompose members and check each block's class
            let mut from_members = BTreeSet::new();
            for p in &self.level(n)?.members.clone() {
                let d = p.decompose();
                if d.skeleton.len() < 4 {
                    continue;
                }
                let classes = allowed_block_classes(&d.skeleton)
                    .expect("skeletons of members are simple class members");
                for (block, class) in d.blocks.iter().zip(&classes) {
                    if !class.allows(block) {
                        return Err(ClassError::ProfileViolation {
                            witness: p.clone(),
                            detail: format!(
                                "block {block} at a {class:?} point of skeleton {}",
                                d.skeleton
                            ),
                        });
                    }
                }
                from_members.insert(p.clone());
            }

            // backward: inflate every simple member by every allowed choice
            let mut from_inflations = BTreeSet::new();
            for s in 4..=n {
                for skeleton in self.simple_members(s)? {
                    let classes = allowed_block_classes(&skeleton)
                        .expect("simple members admit block classes");
                    let mut blocks = Vec::with_capacity(s);
                    inflate_all(
                        &skeleton,
                        &classes,
                        n,
                        &mut blocks,
                        &mut block_pool,
                        &mut from_inflations,
                    );
                }
            }
            for p in &from_inflations {
                if !from_members.contains(p) {
                    return Err(ClassError::ProfileViolation {
                        witness: p.clone(),
                        detail: "allowed inflation is not a class member".into(),
                    });
                }
            }
            for p in &from_members {
                if !from_inflations.contains(p) {
                    return Err(ClassError::ProfileViolation {
                        witness: p.clone(),
                        detail: "class member not generated by allowed inflations".into(),
                    });
                }
            }
            levels.push(InflationLevel {
                n,
                inflation_count: from_members.len() as u64,
            });
        }
        Ok(InflationReport { levels })
    }
}

/// Expands `skeleton` by all allowed block choices of total size `n`.
fn inflate_all(
    skeleton: &Permutation,
    classes: &[BlockClass],
    n: usize,
    blocks: &mut Vec<Permutation>,
    pool: &mut BlockPool,
    out: &mut BTreeSet<Permutation>,
) {
    let filled = blocks.len();
    let used: usize = blocks.iter().map(Permutation::len).sum();
    let remaining_slots = skeleton.len() - filled;
    if remaining_slots == 0 {
        if used == n {
            out.insert(skeleton.inflate(blocks).expect("arity matches"));
        }
        return;
    }
    let budget = n - used;
    if budget < remaining_slots {
        return;
    }
    let max_here = budget - (remaining_slots - 1);
    for size in 1..=max_here {
        for block in pool.members(classes[filled], size).clone() {
            blocks.push(block);
            inflate_all(skeleton, classes, n, blocks, pool, out);
            blocks.pop();
        }
    }
}

/// Cached avoider lists per (class, size); sizes stay tiny at desk scale.
#[derive(Default)]
struct BlockPool {
    cache: BTreeMap<(u8, usize), Vec<Permutation>>,
}

impl BlockPool {
    fn members(&mut self, class: BlockClass, size: usize) -> &Vec<Permutation> {
        let key = (
            match class {
                BlockClass::Decreasing => 0,
                BlockClass::Av231 => 1,
                BlockClass::Av312 => 2,
            },
            size,
        );
        self.cache.entry(key).or_insert_with(|| {
            all_of_length(size)
                .into_iter()
                .filter(|p| class.allows(p))
                .collect()
        })
    }
}

/// Per-length statistics gathered by `verify_structure`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureLevel {
    pub n: usize,
    pub simple_count: u64,
    pub first_is_two: u64,
    pub second_is_one: u64,
    pub histogram: BTreeMap<Permutation, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub levels: Vec<StructureLevel>,
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for level in &self.levels {
            let histogram: Vec<String> = level
                .histogram
                .iter()
                .map(|(p, c)| format!("{p}:{c}"))
                .collect();
            writeln!(
                f,
                "n={} simples={} halves={}+{} extremes {}",
                level.n,
                level.simple_count,
                level.first_is_two,
                level.second_is_one,
                histogram.join(" ")
            )?;
        }
        Ok(())
    }
}

/// Per-length counts of members with a simple skeleton of length >= 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflationLevel {
    pub n: usize,
    pub inflation_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflationReport {
    pub levels: Vec<InflationLevel>,
}

impl fmt::Display for InflationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for level in &self.levels {
            writeln!(
                f,
                "n={} simple-skeleton members={}",
                level.n, level.inflation_count
            )?;
        }
        Ok(())
    }
}
