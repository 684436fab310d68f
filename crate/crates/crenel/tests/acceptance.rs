//! Acceptance suite: the eight headline claims, one test each, every value
//! pinned exactly. Each test prints a single pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

mod common;

use std::process::Command;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use common::*;
use crenel::class::Enumerator;
use crenel::codec::{decode, encode, simples_via_words, words_of_length};
use crenel::perm::{all_of_length, PatternSet, Permutation};
use crenel::series::{
    catalan_series, class_series, int_coeff, simple_inflation_series, skew_series,
    word_count_series, Series,
};
use crenel::verify;

const CLASS_COUNTS: [u64; 10] = [1, 2, 6, 23, 101, 477, 2343, 11762, 59786, 306132];
const SIMPLE_COUNTS: [u64; 6] = [2, 4, 14, 40, 122, 364];
const WORD_COUNTS: [u64; 9] = [1, 2, 7, 20, 61, 182, 547, 1640, 4921];

fn shared() -> &'static Mutex<Enumerator> {
    static ENUM: OnceLock<Mutex<Enumerator>> = OnceLock::new();
    ENUM.get_or_init(|| Mutex::new(Enumerator::new(PatternSet::default()).with_limit(10)))
}

fn conclude(criterion: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("{criterion}: PASS"),
        Err(e) => {
            println!("{criterion}: FAIL — {e}");
            panic!("{criterion} failed: {e}");
        }
    }
}

#[test]
fn criterion_1_class_counts_via_cli() {
    conclude(
        "criterion 1 (class counts, `count --max-n 10`)",
        (|| {
            let output = Command::new(env!("CARGO_BIN_EXE_crenel"))
                .args(["count", "--max-n", "10"])
                .output()
                .map_err(|e| e.to_string())?;
            if !output.status.success() {
                return Err(format!("exit status {:?}", output.status.code()));
            }
            let stdout = String::from_utf8(output.stdout).map_err(|e| e.to_string())?;
            let mut got = Vec::new();
            for line in stdout.lines() {
                let mut fields = line.split('\t');
                let n: usize = fields.next().ok_or("missing n")?.parse().map_err(|_| "bad n")?;
                let count: u64 = fields
                    .next()
                    .ok_or("missing count")?
                    .parse()
                    .map_err(|_| "bad count")?;
                if n != got.len() + 1 {
                    return Err(format!("unexpected row order at n={n}"));
                }
                got.push(count);
            }
            if got != CLASS_COUNTS {
                return Err(format!("got {got:?}"));
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_2_simple_counts_and_recurrence() {
    conclude(
        "criterion 2 (simple counts and s_{n+1} = 3 s_n + 2(-1)^(n+1))",
        (|| {
            let mut e = shared().lock().unwrap();
            for (i, &expected) in SIMPLE_COUNTS.iter().enumerate() {
                let n = i + 4;
                let got = e.simple_members(n).map_err(|e| e.to_string())?.len() as u64;
                if got != expected {
                    return Err(format!("s_{n} = {got}, expected {expected}"));
                }
            }
            // extend by word counts: s_n = 2 |words(n)| for n = 10..12
            let s = |n: usize| -> i64 {
                if n <= 9 {
                    SIMPLE_COUNTS[n - 4] as i64
                } else {
                    2 * words_of_length(n).len() as i64
                }
            };
            for n in 4..=11 {
                let sign = if n % 2 == 0 { -2 } else { 2 };
                if s(n + 1) != 3 * s(n) + sign {
                    return Err(format!("recurrence fails at n={n}"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_3_word_language() {
    conclude(
        "criterion 3 (word counts and rule/automaton equivalence to length 12)",
        (|| {
            for (i, &expected) in WORD_COUNTS.iter().enumerate() {
                let n = i + 4;
                let got = words_of_length(n).len() as u64;
                if got != expected {
                    return Err(format!("{got} words at n={n}, expected {expected}"));
                }
            }
            verify::rule_dfa_equivalence(12).map(|_| ())
        })(),
    );
}

#[test]
fn criterion_4_codec_matches_brute_force() {
    conclude(
        "criterion 4 (words decode bijectively onto the simples, lengths 4..=10)",
        (|| {
            let mut e = shared().lock().unwrap();
            for n in 4..=10usize {
                let words = words_of_length(n);
                let mut decoded = Vec::with_capacity(words.len());
                for word in &words {
                    let q = decode(word).map_err(|err| format!("{word}: {err}"))?;
                    let back = encode(&q).map_err(|err| format!("{q}: {err}"))?;
                    if back != *word {
                        return Err(format!("round trip {word} -> {q} -> {back}"));
                    }
                    decoded.push(q);
                }
                let mut unique = decoded.clone();
                unique.sort_unstable();
                unique.dedup();
                if unique.len() != decoded.len() {
                    return Err(format!("decode not injective at n={n}"));
                }
                let via_words = simples_via_words(n);
                let brute = e.simple_members(n).map_err(|err| err.to_string())?;
                if via_words != brute {
                    return Err(format!(
                        "n={n}: {} via words vs {} brute-forced",
                        via_words.len(),
                        brute.len()
                    ));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_5_shape_claims_over_brute_forced_simples() {
    conclude(
        "criterion 5 (no 3412 extreme pattern; 2413 => N shape; 3142 => S shape)",
        (|| {
            let mut e = shared().lock().unwrap();
            let p3412: Permutation = "3412".parse().unwrap();
            let p2413: Permutation = "2413".parse().unwrap();
            let p3142: Permutation = "3142".parse().unwrap();
            for n in 4..=10usize {
                for q in e.simple_members(n).map_err(|err| err.to_string())? {
                    let extreme = q.extreme_pattern();
                    if extreme == p3412 {
                        return Err(format!("{q} has extreme pattern 3412"));
                    }
                    if extreme == p2413 && !q.is_n_shaped() {
                        return Err(format!("{q} is 2413-extreme but not N-shaped"));
                    }
                    if extreme == p3142 && !q.is_s_shaped() {
                        return Err(format!("{q} is 3142-extreme but not S-shaped"));
                    }
                }
            }
            // the two orientation halves are equinumerous, 182 each at n=9
            let report = e.verify_structure(10).map_err(|err| err.to_string())?;
            let at_nine = report
                .levels
                .iter()
                .find(|l| l.n == 9)
                .ok_or("missing level 9")?;
            if at_nine.first_is_two != 182 || at_nine.second_is_one != 182 {
                return Err(format!(
                    "halves at n=9: {}+{}",
                    at_nine.first_is_two, at_nine.second_is_one
                ));
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_6_series_identities() {
    conclude(
        "criterion 6 (series identities at order 30, anchored to brute force)",
        (|| {
            let order = 30;
            let f_cat = catalan_series(order);
            let one_plus = &Series::one(order) + &f_cat;
            let rhs = &Series::x(order) * &(&one_plus * &one_plus);
            f_cat
                .ensure_equal(&rhs, "catalan functional equation")
                .map_err(|e| e.to_string())?;

            // internal dual-route assertions run inside each constructor
            word_count_series(order).map_err(|e| e.to_string())?;
            simple_inflation_series(order).map_err(|e| e.to_string())?;
            let f = class_series(order).map_err(|e| e.to_string())?;

            let mut e = shared().lock().unwrap();
            for (n, count) in e.counts(10).map_err(|err| err.to_string())? {
                if int_coeff(&f, n) != BigInt::from(count) {
                    return Err(format!("class series differs from brute force at n={n}"));
                }
            }
            let skew = skew_series(order);
            let expected_skew = [1u64, 3, 10, 34];
            for (i, &expected) in expected_skew.iter().enumerate() {
                let n = i + 2;
                if int_coeff(&skew, n) != BigInt::from(expected) {
                    return Err(format!("skew coefficient off at n={n}"));
                }
                let brute = e
                    .skew_decomposable_members(n)
                    .map_err(|err| err.to_string())?
                    .len() as u64;
                if brute != expected {
                    return Err(format!("brute skew count off at n={n}: {brute}"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_7_inflation_profile() {
    conclude(
        "criterion 7 (inflation profile both ways to n=8; 264315 in, 263415 out)",
        (|| {
            let mut e = shared().lock().unwrap();
            let report = e.verify_inflation_profile(8).map_err(|err| err.to_string())?;
            let series = simple_inflation_series(8).map_err(|err| err.to_string())?;
            for level in &report.levels {
                if BigInt::from(level.inflation_count) != int_coeff(&series, level.n) {
                    return Err(format!("profile count differs from series at n={}", level.n));
                }
            }

            let members = &e.level(6).map_err(|err| err.to_string())?.members;
            let wanted: Permutation = "264315".parse().unwrap();
            let excluded: Permutation = "263415".parse().unwrap();
            if !members.contains(&wanted) {
                return Err("264315 missing from the class".into());
            }
            if members.contains(&excluded) {
                return Err("263415 wrongly admitted to the class".into());
            }
            let d = wanted.decompose();
            if d.skeleton != "25314".parse().unwrap() {
                return Err(format!("264315 decomposes to skeleton {}", d.skeleton));
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_8_oracle_property_suites() {
    conclude(
        "criterion 8 (containment oracle, decomposition round trip, symmetries)",
        (|| {
            // containment against the exhaustive-subsequence oracle, sampled
            let mut rng = Lcg::new(20260808);
            for n in 1..=8usize {
                for _ in 0..40 {
                    let hay = rng.perm(n);
                    let k = 1 + rng.below(n.min(6));
                    let needle = rng.perm(k);
                    let got = to_perm(&hay).contains(&to_perm(&needle));
                    let expected = oracle_contains(&hay, &needle);
                    if got != expected {
                        return Err(format!("containment mismatch: {hay:?} vs {needle:?}"));
                    }
                }
            }

            // decompose/inflate round trip, exhaustive through length 8
            for n in 1..=8usize {
                for q in all_of_length(n) {
                    if q.decompose().reassemble() != q {
                        return Err(format!("decomposition round trip fails for {q}"));
                    }
                }
            }

            // symmetry invariances: exhaustive on small lengths, sampled at 7 and 8
            for n in 1..=5usize {
                for hay in all_perms(n) {
                    for k in 1..=n {
                        for needle in all_perms(k) {
                            let h = to_perm(&hay);
                            let s = to_perm(&needle);
                            let direct = h.contains(&s);
                            if direct != h.inverse().contains(&s.inverse()) {
                                return Err(format!("inverse symmetry breaks: {h} vs {s}"));
                            }
                            if direct
                                != h.reverse_complement().contains(&s.reverse_complement())
                            {
                                return Err(format!("rc symmetry breaks: {h} vs {s}"));
                            }
                        }
                    }
                }
            }
            for n in 7..=8usize {
                for _ in 0..200 {
                    let h = to_perm(&rng.perm(n));
                    let k = 1 + rng.below(6);
                    let s = to_perm(&rng.perm(k));
                    let direct = h.contains(&s);
                    if direct != h.inverse().contains(&s.inverse())
                        || direct != h.reverse_complement().contains(&s.reverse_complement())
                    {
                        return Err(format!("sampled symmetry breaks: {h} vs {s}"));
                    }
                    if h.inverse().inverse() != h
                        || h.reverse_complement().reverse_complement() != h
                    {
                        return Err(format!("involution breaks for {h}"));
                    }
                }
            }
            Ok(())
        })(),
    );
}
