//! Named verification suites: each one turns a structural or enumerative
//! claim into a pass/fail check line, so the same machinery backs both the
//! command-line `verify` subcommand and the acceptance tests.
//!
//! Golden values in these suites assume the default basis; callers enforce
//! that before running them.

use num_bigint::BigInt;

use crate::class::Enumerator;
use crate::codec::{self, decode, encode, simples_via_words, words_of_length, Dfa, Letter, Word};
use crate::perm::Permutation;
use crate::series::{
    catalan_series, class_series, int_coeff, simple_inflation_series, skew_series,
    word_count_series, Series,
};

/// One verified claim.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &str, outcome: Result<String, String>) -> Check {
        match outcome {
            Ok(detail) => Check {
                name: name.to_string(),
                passed: true,
                detail,
            },
            Err(detail) => Check {
                name: name.to_string(),
                passed: false,
                detail,
            },
        }
    }
}

/// Published simple-member counts for lengths 4..=9.
pub const SIMPLE_COUNTS: [u64; 6] = [2, 4, 14, 40, 122, 364];

/// Published class counts for lengths 1..=10.
pub const CLASS_COUNTS: [u64; 10] = [1, 2, 6, 23, 101, 477, 2343, 11762, 59786, 306132];

/// Valid-word counts for lengths 4..=12: (3^(n-3) + (-1)^n) / 4.
pub fn expected_word_count(n: usize) -> u64 {
    assert!(n >= 4);
    ((3u64.pow(n as u32 - 3)) as i64 + if n % 2 == 0 { 1 } else { -1 }) as u64 / 4
}

/// Structural claims about simple members: no 3412 extreme pattern, the N
/// and S shapes, and the two equinumerous orientation halves.
pub fn structure_suite(enumerator: &mut Enumerator, max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(Check::from_result(
        "simple-member structure (extreme patterns, shapes, halves)",
        match enumerator.verify_structure(max_n) {
            Ok(report) => {
                let halves: Vec<String> = report
                    .levels
                    .iter()
                    .map(|l| format!("{}:{}+{}", l.n, l.first_is_two, l.second_is_one))
                    .collect();
                Ok(format!("lengths 4..={max_n}, halves {}", halves.join(" ")))
            }
            Err(e) => Err(e.to_string()),
        },
    ));
    checks.push(Check::from_result(
        "simple counts match the published table",
        (|| {
            let mut seen = Vec::new();
            for n in 4..=max_n.min(9) {
                let got = enumerator
                    .simple_members(n)
                    .map_err(|e| e.to_string())?
                    .len() as u64;
                let expected = SIMPLE_COUNTS[n - 4];
                if got != expected {
                    return Err(format!("n={n}: got {got}, expected {expected}"));
                }
                seen.push(got.to_string());
            }
            Ok(seen.join(", "))
        })(),
    ));
    checks
}

/// Word language, decoder and encoder checks.
pub fn codec_suite(enumerator: &mut Enumerator, max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(Check::from_result(
        "word counts follow x^4/((1-3x)(1+x))",
        (|| {
            let mut counts = Vec::new();
            for n in 4..=12usize {
                let got = words_of_length(n).len() as u64;
                let expected = expected_word_count(n);
                if got != expected {
                    return Err(format!("n={n}: got {got}, expected {expected}"));
                }
                counts.push(got.to_string());
            }
            Ok(counts.join(", "))
        })(),
    ));

    checks.push(Check::from_result(
        "rule checker agrees with the automaton on all strings of length <= 12",
        rule_dfa_equivalence(12),
    ));

    for n in 4..=max_n {
        checks.push(Check::from_result(
            &format!("words of length {n} decode bijectively onto the simples"),
            codec_level_check(enumerator, n),
        ));
    }
    checks
}

fn codec_level_check(enumerator: &mut Enumerator, n: usize) -> Result<String, String> {
    let words = words_of_length(n);
    let mut decoded = Vec::with_capacity(words.len());
    for word in &words {
        let q = decode(word).map_err(|e| format!("{word}: {e}"))?;
        if q.values()[0] != 2 || q.values()[1] == 1 || !q.is_simple() {
            return Err(format!("{word} decodes to ineligible {q}"));
        }
        let back = encode(&q).map_err(|e| format!("{q}: {e}"))?;
        if back != *word {
            return Err(format!("round trip failed: {word} -> {q} -> {back}"));
        }
        decoded.push(q);
    }
    let mut distinct = decoded.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != decoded.len() {
        return Err("decode is not injective".into());
    }
    let via_words = simples_via_words(n);
    let brute = enumerator.simple_members(n).map_err(|e| e.to_string())?;
    if via_words != brute {
        return Err(format!(
            "set mismatch: {} via words, {} brute-forced",
            via_words.len(),
            brute.len()
        ));
    }
    Ok(format!("{} words, {} simples", words.len(), brute.len()))
}

/// Compares the five-rule checker with the stripped-prefix automaton run on
/// every string over the alphabet up to `max_len`.
pub fn rule_dfa_equivalence(max_len: usize) -> Result<String, String> {
    let mut buffer = Vec::with_capacity(max_len);
    let mut compared = 0u64;
    fn walk(buffer: &mut Vec<Letter>, max_len: usize, compared: &mut u64) -> Result<(), String> {
        let by_rules = codec::validate_letters(buffer).is_ok();
        let by_dfa = buffer.len() >= 2
            && buffer[0] == Letter::D
            && buffer[1] == Letter::D
            && Dfa::accepts(&buffer[2..]);
        if by_rules != by_dfa {
            return Err(format!("disagreement on {}", Word::new(buffer.clone())));
        }
        *compared += 1;
        if buffer.len() == max_len {
            return Ok(());
        }
        for letter in Letter::ALL {
            buffer.push(letter);
            walk(buffer, max_len, compared)?;
            buffer.pop();
        }
        Ok(())
    }
    walk(&mut buffer, max_len, &mut compared)?;
    Ok(format!("{compared} strings compared"))
}

/// Inflation-profile fidelity in both directions.
pub fn inflation_suite(enumerator: &mut Enumerator, max_n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let report = match enumerator.verify_inflation_profile(max_n) {
        Ok(report) => report,
        Err(e) => {
            checks.push(Check::from_result(
                "inflation profile (both inclusions)",
                Err(e.to_string()),
            ));
            return checks;
        }
    };
    let counts: Vec<String> = report
        .levels
        .iter()
        .map(|l| format!("{}:{}", l.n, l.inflation_count))
        .collect();
    checks.push(Check::from_result(
        "inflation profile (both inclusions)",
        Ok(format!("simple-skeleton members {}", counts.join(" "))),
    ));
    checks.push(Check::from_result(
        "simple-skeleton member counts match the inflation series",
        (|| {
            let series = simple_inflation_series(max_n).map_err(|e| e.to_string())?;
            for level in &report.levels {
                let expected = int_coeff(&series, level.n);
                if BigInt::from(level.inflation_count) != expected {
                    return Err(format!(
                        "n={}: counted {}, series says {}",
                        level.n, level.inflation_count, expected
                    ));
                }
            }
            Ok(format!("lengths 5..={max_n}"))
        })(),
    ));
    checks
}

/// Series identities and their brute-force anchors.
pub fn series_suite(enumerator: &mut Enumerator, order: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let limit = enumerator.limit();

    checks.push(Check::from_result(
        "catalan series satisfies f = x(1+f)^2",
        (|| {
            let f = catalan_series(order);
            let one_plus = &Series::one(order) + &f;
            let rhs = &Series::x(order) * &(&one_plus * &one_plus);
            f.ensure_equal(&rhs, "catalan functional equation")
                .map_err(|e| e.to_string())?;
            Ok(format!("order {order}"))
        })(),
    ));

    checks.push(Check::from_result(
        "word series: closed form matches the automaton path count",
        word_count_series(order)
            .map(|_| format!("order {order}"))
            .map_err(|e| e.to_string()),
    ));

    checks.push(Check::from_result(
        "simple inflations: substitution matches both closed forms",
        (|| {
            let s = simple_inflation_series(order).map_err(|e| e.to_string())?;
            let spot: Vec<String> = (4..=6).map(|k| int_coeff(&s, k).to_string()).collect();
            if spot != ["2", "20", "140"] {
                return Err(format!("low coefficients {} off", spot.join(", ")));
            }
            Ok(format!("order {order}"))
        })(),
    ));

    checks.push(Check::from_result(
        "class series: compositional form matches the printed closed form",
        class_series(order)
            .map(|_| format!("order {order}"))
            .map_err(|e| e.to_string()),
    ));

    checks.push(Check::from_result(
        "class series reproduces the published coefficients",
        (|| {
            let f = class_series(order.max(10)).map_err(|e| e.to_string())?;
            for (i, &expected) in CLASS_COUNTS.iter().enumerate() {
                if int_coeff(&f, i + 1) != BigInt::from(expected) {
                    return Err(format!("x^{}: expected {expected}", i + 1));
                }
            }
            Ok("ten published coefficients".into())
        })(),
    ));

    checks.push(Check::from_result(
        "class series matches brute-force counts",
        (|| {
            let top = limit.min(10).min(order);
            let f = class_series(order).map_err(|e| e.to_string())?;
            for (n, count) in enumerator.counts(top).map_err(|e| e.to_string())? {
                if int_coeff(&f, n) != BigInt::from(count) {
                    return Err(format!("n={n}: enumerated {count}"));
                }
            }
            Ok(format!("lengths 1..={top}"))
        })(),
    ));

    checks.push(Check::from_result(
        "skew series matches brute-force skew-decomposable counts",
        (|| {
            let top = limit.min(8).min(order);
            let s = skew_series(order);
            let literal: Vec<BigInt> = (2..=5).map(|k| int_coeff(&s, k)).collect();
            if literal != [1, 3, 10, 34].map(BigInt::from) {
                return Err("low skew coefficients are off".into());
            }
            for n in 2..=top {
                let got = enumerator
                    .skew_decomposable_members(n)
                    .map_err(|e| e.to_string())?
                    .len();
                if int_coeff(&s, n) != BigInt::from(got) {
                    return Err(format!("n={n}: enumerated {got}"));
                }
            }
            Ok(format!("lengths 2..={top}"))
        })(),
    ));

    checks.push(Check::from_result(
        "doubled word series equals the simple counts and their recurrence",
        (|| {
            let w = word_count_series(order.max(12)).map_err(|e| e.to_string())?;
            let s = |n: usize| int_coeff(&w, n) * 2;
            let top = limit.min(9).min(order);
            for n in 4..=top {
                let brute = enumerator.simple_members(n).map_err(|e| e.to_string())?.len();
                if s(n) != BigInt::from(brute) {
                    return Err(format!("n={n}: enumerated {brute}"));
                }
            }
            for n in 4..=11usize {
                let sign = if n % 2 == 0 { -2 } else { 2 };
                if s(n + 1) != s(n) * 3 + BigInt::from(sign) {
                    return Err(format!("recurrence fails at n={n}"));
                }
            }
            Ok("recurrence holds for 4 <= n <= 11".into())
        })(),
    ));

    checks.push(Check::from_result(
        "sum-indecomposable counts match g = x + skew + inflations",
        (|| {
            let top = limit.min(8).min(order);
            let mut g = Series::x(order);
            g = &g + &skew_series(order);
            g = &g + &simple_inflation_series(order).map_err(|e| e.to_string())?;
            let literal: Vec<BigInt> = (1..=6).map(|k| int_coeff(&g, k)).collect();
            if literal != [1, 1, 3, 12, 54, 257].map(BigInt::from) {
                return Err("low sum-indecomposable coefficients are off".into());
            }
            for n in 1..=top {
                let census = enumerator.census(n).map_err(|e| e.to_string())?;
                if int_coeff(&g, n) != BigInt::from(census.sum_indec_count) {
                    return Err(format!("n={n}: census says {}", census.sum_indec_count));
                }
            }
            Ok(format!("lengths 1..={top}"))
        })(),
    ));

    checks
}

/// Runs a suite by name; `all` chains every suite.
pub fn run_suite(
    enumerator: &mut Enumerator,
    suite: &str,
    max_n: usize,
    order: usize,
) -> Vec<Check> {
    match suite {
        "structure" => structure_suite(enumerator, max_n),
        "codec" => codec_suite(enumerator, max_n),
        "inflation" => inflation_suite(enumerator, max_n),
        "series" => series_suite(enumerator, order),
        "all" => {
            let mut checks = structure_suite(enumerator, max_n);
            checks.extend(codec_suite(enumerator, max_n));
            checks.extend(inflation_suite(enumerator, max_n));
            checks.extend(series_suite(enumerator, order));
            checks
        }
        other => vec![Check {
            name: format!("suite {other}"),
            passed: false,
            detail: "unknown suite".into(),
        }],
    }
}

/// Brute-force oracle used by a few spot checks: all members of length `n`
/// of the class of an arbitrary pattern set, by direct filtering.
pub fn filter_all_of_length(n: usize, basis: &crate::perm::PatternSet) -> Vec<Permutation> {
    crate::perm::all_of_length(n)
        .into_iter()
        .filter(|p| p.avoids_all(basis))
        .collect()
}
