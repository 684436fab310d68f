//! The generating-function pipeline, each stage computed by at least two
//! independent routes that must agree coefficientwise:
//!
//! * the Catalan series f_cat = (1 - 2x - sqrt(1-4x)) / (2x),
//! * the code-word counting series x^4 / ((1-3x)(1+x)), cross-checked by a
//!   path count over the recognizer,
//! * the letter-weighted path sum over the recognizer, cross-checked against
//!   the closed multivariate rational function specialized at the weights,
//! * the simple-inflation series, the skew-decomposable series
//!   f_cat^2 (1-x), and the full class series.

use num_traits::Zero;

use crate::codec::{Dfa, Letter};

use super::{sqrt_one_plus, Series, SeriesError};

/// One weight series per letter, each with zero constant term (letters stand
/// for nonempty point sets).
#[derive(Debug, Clone)]
pub struct LetterWeights {
    a: Series,
    b: Series,
    c: Series,
    d: Series,
}

impl LetterWeights {
    pub fn new(a: Series, b: Series, c: Series, d: Series) -> Result<Self, SeriesError> {
        for (series, letter) in [(&a, 'a'), (&b, 'b'), (&c, 'c'), (&d, 'd')] {
            if !series.coeff(0).is_zero() {
                return Err(SeriesError::BadWeights(letter));
            }
        }
        Ok(LetterWeights { a, b, c, d })
    }

    /// The same weight for every letter.
    pub fn uniform(w: Series) -> Result<Self, SeriesError> {
        LetterWeights::new(w.clone(), w.clone(), w.clone(), w)
    }

    pub fn weight(&self, letter: Letter) -> &Series {
        match letter {
            Letter::A => &self.a,
            Letter::B => &self.b,
            Letter::C => &self.c,
            Letter::D => &self.d,
        }
    }

    fn order(&self) -> usize {
        self.a
            .order()
            .min(self.b.order())
            .min(self.c.order())
            .min(self.d.order())
    }
}

/// The weights under which the weighted path sum counts inflations of the
/// simple members with second entry != 1: Catalan weights on a, c and d,
/// x/(1-x) on b.
pub fn half_simple_weights(order: usize) -> LetterWeights {
    let cat = catalan_series(order);
    let b = Series::x(order + 1)
        .div(&(&Series::one(order + 1) - &Series::x(order + 1)))
        .expect("unit denominator")
        .truncated(order);
    LetterWeights::new(cat.clone(), b, cat.clone(), cat).expect("zero constant terms")
}

/// The Catalan generating function without its constant term: coefficient of
/// x^n is the n-th Catalan number for n >= 1.
pub fn catalan_series(order: usize) -> Series {
    assert!(order >= 1, "catalan_series needs order >= 1");
    let padded = order + 1;
    let root = sqrt_one_plus(&Series::monomial_int(-4, 1, padded));
    let numerator = &(&Series::one(padded) - &Series::monomial_int(2, 1, padded)) - &root;
    let result = numerator
        .div(&Series::monomial_int(2, 1, padded))
        .expect("numerator valuation covers the 2x denominator");
    debug_assert_eq!(result.order(), order);
    result
}

/// The number of valid words by length: x^4 / ((1-3x)(1+x)), asserted equal
/// to the accepted-path count over the recognizer shifted by the stripped
/// opening dd.
pub fn word_count_series(order: usize) -> Result<Series, SeriesError> {
    let closed = {
        let one = Series::one(order);
        let den = &(&one - &Series::monomial_int(3, 1, order)) * &(&one + &Series::x(order));
        Series::monomial_int(1, 4, order).div(&den)?
    };
    let by_paths = weighted_automaton_series(&LetterWeights::uniform(Series::x(order))?, order);
    closed.ensure_equal(&by_paths, "word count: closed form vs automaton paths")?;
    Ok(closed)
}

/// Sum over accepted paths of the product of letter weights, times the
/// d-weight squared for the stripped opening dd. With every weight x this
/// is exactly `word_count_series`.
pub fn weighted_automaton_series(weights: &LetterWeights, order: usize) -> Series {
    let order = order.min(weights.order());
    let zero = Series::zero(order);
    let mut current: Vec<Series> = vec![zero.clone(); 7];
    current[Dfa::START.index()] = Series::one(order);
    let mut accepted = zero.clone();

    // weights have zero constant term, so paths longer than the truncation
    // order cannot contribute
    for _ in 1..=order {
        let mut next: Vec<Series> = vec![zero.clone(); 7];
        for (from, letter, to) in Dfa::transitions() {
            if current[from.index()].is_zero() {
                continue;
            }
            let step = &current[from.index()] * weights.weight(letter);
            next[to.index()] = &next[to.index()] + &step;
        }
        accepted = &accepted + &next[Dfa::ACCEPT.index()];
        current = next;
    }
    let dd = weights.weight(Letter::D);
    &(dd * dd) * &accepted
}

/// The closed multivariate path generating function specialized at the given
/// letter weights: d^4 (1+b) / (1 - 2abc - ac - ab - bd - bc - bcd - cd - d).
pub fn eq1_series(weights: &LetterWeights, order: usize) -> Result<Series, SeriesError> {
    let order = order.min(weights.order());
    let a = weights.weight(Letter::A).truncated(order);
    let b = weights.weight(Letter::B).truncated(order);
    let c = weights.weight(Letter::C).truncated(order);
    let d = weights.weight(Letter::D).truncated(order);
    let one = Series::one(order);

    let d2 = &d * &d;
    let numerator = &(&d2 * &d2) * &(&one + &b);
    let abc = &(&a * &b) * &c;
    let mut denominator = &one - &abc.scale_int(2);
    denominator = &denominator - &(&a * &c);
    denominator = &denominator - &(&a * &b);
    denominator = &denominator - &(&b * &d);
    denominator = &denominator - &(&b * &c);
    denominator = &denominator - &(&(&b * &c) * &d);
    denominator = &denominator - &(&c * &d);
    denominator = &denominator - &d;
    numerator.div(&denominator)
}

/// Inflations of the simple members of length at least 4: twice the
/// Catalan-weighted path sum, asserted equal to the closed multivariate
/// form at those weights and to the printed univariate closed form
/// (1-2x-sqrt(1-4x))^4 / (8x^2 (x^2+3x-1+sqrt(1-4x)-x sqrt(1-4x))).
pub fn simple_inflation_series(order: usize) -> Result<Series, SeriesError> {
    let padded = order + 8;
    let weights = half_simple_weights(padded);
    let by_dp = weighted_automaton_series(&weights, padded).scale_int(2);
    let by_eq1 = eq1_series(&weights, padded)?.scale_int(2);
    by_dp.ensure_equal(
        &by_eq1,
        "simple inflations: automaton substitution vs closed path formula",
    )?;

    let root = sqrt_one_plus(&Series::monomial_int(-4, 1, padded));
    let one = Series::one(padded);
    let x = Series::x(padded);
    let base = &(&one - &Series::monomial_int(2, 1, padded)) - &root;
    let base2 = &base * &base;
    let numerator = &base2 * &base2;
    let mut inner = &(&x * &x) + &Series::monomial_int(3, 1, padded);
    inner = &inner - &one;
    inner = &inner + &root;
    inner = &inner - &(&x * &root);
    let denominator = &Series::monomial_int(8, 2, padded) * &inner;
    let closed = numerator.div(&denominator)?;
    by_eq1
        .truncated(closed.order().min(by_eq1.order()))
        .ensure_equal(&closed, "simple inflations: substitution vs printed closed form")?;
    Ok(closed.truncated(order))
}

/// The skew decomposable members: f_cat^2 (1 - x).
pub fn skew_series(order: usize) -> Series {
    let cat = catalan_series(order);
    let one_minus_x = &Series::one(order) - &Series::x(order);
    &(&cat * &cat) * &one_minus_x
}

/// The class generating function, computed both as g/(1-g) with
/// g = x + skew + simple inflations and from the printed closed form
/// (1-3x-2x^2-(1-x-2x^2) sqrt(1-4x)) / (1-3x-(1-x+2x^2) sqrt(1-4x)).
pub fn class_series(order: usize) -> Result<Series, SeriesError> {
    let padded = order + 4;
    let g = {
        let mut g = Series::x(padded);
        g = &g + &skew_series(padded);
        g = &g + &simple_inflation_series(padded)?;
        g
    };
    let compositional = g.div(&(&Series::one(padded) - &g))?;

    let root = sqrt_one_plus(&Series::monomial_int(-4, 1, padded));
    let one = Series::one(padded);
    let three_x = Series::monomial_int(3, 1, padded);
    let x2 = |k: i64| Series::monomial_int(k, 2, padded);
    let numerator = {
        let head = &(&one - &three_x) - &x2(2);
        let factor = &(&one - &Series::x(padded)) - &x2(2);
        &head - &(&factor * &root)
    };
    let denominator = {
        let head = &one - &three_x;
        let factor = &(&one - &Series::x(padded)) + &x2(2);
        &head - &(&factor * &root)
    };
    let closed = numerator.div(&denominator)?;
    compositional
        .truncated(closed.order().min(compositional.order()))
        .ensure_equal(&closed, "class series: compositional vs printed closed form")?;
    Ok(closed.truncated(order))
}
