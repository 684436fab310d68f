//! Property suites for the library's structural invariants: pattern
//! idempotence, the two symmetries, decomposition round trips, codec round
//! trips on random valid words, and ring-axiom spot checks for the series
//! arithmetic.

mod common;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::{oracle_contains, to_perm};
use crenel::codec::{decode, encode, words_of_length, Word};
use crenel::perm::Permutation;
use crenel::series::{sqrt_one_plus, Series};

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|values| Permutation::new(values).expect("shuffled identity"))
    })
}

/// Distinct positive entries: a shuffled subset of a fixed range.
fn distinct_entries() -> impl Strategy<Value = Vec<u32>> {
    proptest::sample::subsequence((1..=60u32).collect::<Vec<u32>>(), 1..12).prop_shuffle()
}

fn cached_words(n: usize) -> &'static [Word] {
    static WORDS: OnceLock<Vec<Vec<Word>>> = OnceLock::new();
    &WORDS.get_or_init(|| (0..=13).map(words_of_length).collect())[n]
}

fn series_strategy(order: usize) -> impl Strategy<Value = Series> {
    proptest::collection::vec((-9i64..=9, 1u32..=5), order + 1).prop_map(|pairs| {
        Series::from_coeffs(
            pairs
                .into_iter()
                .map(|(num, den)| {
                    BigRational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pattern_of_is_idempotent(entries in distinct_entries()) {
        let once = Permutation::pattern_of(&entries).unwrap();
        let twice = Permutation::pattern_of(once.values()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn symmetries_are_involutions(p in perm_strategy(24)) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse_complement().reverse_complement(), p);
    }

    #[test]
    fn containment_respects_the_symmetries(p in perm_strategy(8), s in perm_strategy(5)) {
        let direct = p.contains(&s);
        prop_assert_eq!(direct, p.inverse().contains(&s.inverse()));
        prop_assert_eq!(
            direct,
            p.reverse_complement().contains(&s.reverse_complement())
        );
    }

    #[test]
    fn containment_matches_the_exhaustive_oracle(p in perm_strategy(8), s in perm_strategy(5)) {
        prop_assert_eq!(p.contains(&s), oracle_contains(p.values(), s.values()));
    }

    #[test]
    fn decomposition_round_trips(p in perm_strategy(24)) {
        prop_assert_eq!(p.decompose().reassemble(), p);
    }

    #[test]
    fn codec_round_trips_on_random_words(n in 4usize..=13, index in any::<prop::sample::Index>()) {
        let words = cached_words(n);
        let word = &words[index.index(words.len())];
        let q = decode(word).unwrap();
        prop_assert!(q.is_simple());
        prop_assert_eq!(q.values()[0], 2);
        prop_assert_eq!(&encode(&q).unwrap(), word);
        // the inverse is the other orientation and encodes only that way
        let inv = q.inverse();
        prop_assert_eq!(inv.values()[1], 1);
        prop_assert!(encode(&inv).is_err());
    }

    #[test]
    fn series_ring_axioms(
        a in series_strategy(12),
        b in series_strategy(12),
        c in series_strategy(12),
    ) {
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert!(left.ensure_equal(&right, "associativity").is_ok());
        let open = &a * &(&b + &c);
        let closed = &(&a * &b) + &(&a * &c);
        prop_assert!(open.ensure_equal(&closed, "distributivity").is_ok());
        prop_assert!((&a * &b).ensure_equal(&(&b * &a), "commutativity").is_ok());
    }

    #[test]
    fn sqrt_squares_back(mut s in series_strategy(12)) {
        // force a zero constant term
        let shift = Series::from_coeffs(
            std::iter::once(-s.coeff(0).clone())
                .chain(std::iter::repeat_n(BigRational::default(), 12))
                .collect(),
        );
        s = &s + &shift;
        let root = sqrt_one_plus(&s);
        let squared = &root * &root;
        let expect = &Series::one(12) + &s;
        prop_assert!(squared.ensure_equal(&expect, "sqrt").is_ok());
    }

    #[test]
    fn division_inverts_multiplication(a in series_strategy(12), b in series_strategy(12)) {
        prop_assume!(!b.coeff(0) .eq(&BigRational::default()));
        let product = &a * &b;
        let back = product.div(&b).unwrap();
        prop_assert!(back.ensure_equal(&a, "division").is_ok());
    }
}

#[test]
fn extension_parents_partition_the_next_level() {
    // every member of level n+1 arises from exactly one parent by deleting
    // its maximum
    use crenel::class::{extend_by_max, Enumerator};
    use crenel::perm::PatternSet;
    let mut e = Enumerator::new(PatternSet::default());
    for n in 1..=6usize {
        let parents = e.level(n).unwrap().members.clone();
        let next = e.level(n + 1).unwrap().members.clone();
        let mut generated: Vec<Permutation> = parents
            .iter()
            .flat_map(|p| extend_by_max(p, &PatternSet::default()))
            .collect();
        generated.sort_unstable();
        assert_eq!(generated, next, "n={n}");
        for q in &next {
            let max_pos = q
                .values()
                .iter()
                .position(|&v| v == (n as u32 + 1))
                .unwrap();
            let parent = q.delete(max_pos);
            assert!(parents.contains(&parent), "{q}");
        }
    }
}

#[test]
fn oracle_class_levels_agree_with_the_enumerator() {
    use crenel::class::Enumerator;
    use crenel::perm::PatternSet;
    let mut e = Enumerator::new(PatternSet::default());
    for n in 1..=6usize {
        let oracle: Vec<Permutation> = common::oracle_class_level(n, &common::oracle_basis())
            .iter()
            .map(|v| to_perm(v))
            .collect();
        assert_eq!(e.level(n).unwrap().members, oracle, "n={n}");
    }
}

#[test]
fn oscillation_oracle_matches_all_d_words() {
    for m in 4..=12usize {
        let word: Word = "d".repeat(m).parse().unwrap();
        let q = decode(&word).unwrap();
        assert_eq!(q.values(), common::oscillation(m), "m={m}");
    }
}
