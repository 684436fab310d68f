//! Truncated formal power series with exact big-rational coefficients.
//!
//! A `Series` stores coefficients c0..cN for a fixed truncation order N.
//! Binary operations truncate to the smaller operand's order and never
//! extend it; division by a denominator with positive valuation shifts the
//! order down by that valuation, as documented on [`Series::div`]. There is
//! no floating point anywhere: coefficient identities are the whole point.

mod pipeline;

pub use pipeline::{
    catalan_series, class_series, eq1_series, half_simple_weights, simple_inflation_series,
    skew_series, weighted_automaton_series, word_count_series, LetterWeights,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from series arithmetic and the pipeline self-checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division by a non-unit: {0}")]
    DivisionByNonUnit(String),
    #[error("series mismatch in {context} at x^{index}: {left} vs {right}")]
    Mismatch {
        context: String,
        index: usize,
        left: String,
        right: String,
    },
    #[error("letter weights must have zero constant term ({0})")]
    BadWeights(char),
}

/// A truncated power series: exact coefficients for x^0 through x^order.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " {c}*x^{k}")?;
            }
        }
        write!(f, " ] + O(x^{})", self.order() + 1)
    }
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::monomial_int(1, 0, order)
    }

    pub fn x(order: usize) -> Self {
        Series::monomial_int(1, 1, order)
    }

    /// `value * x^exponent`, silently zero if the exponent is beyond the order.
    pub fn monomial_int(value: i64, exponent: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = BigRational::from_integer(BigInt::from(value));
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "series carry at least the constant term");
        Series { coeffs }
    }

    /// Truncation order N: coefficients are exact for exponents 0..=N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k. Panics past the truncation order, where the
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, k: usize) -> &BigRational {
        assert!(
            k <= self.order(),
            "coefficient x^{k} requested from a series truncated at order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    /// Coefficient of x^k as an integer, if it is one.
    pub fn coeff_integer(&self, k: usize) -> Option<BigInt> {
        let c = self.coeff(k);
        c.is_integer().then(|| c.to_integer())
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Copy truncated to a smaller (or equal) order.
    pub fn truncated(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale_int(&self, factor: i64) -> Series {
        let factor = BigRational::from_integer(BigInt::from(factor));
        Series {
            coeffs: self.coeffs.iter().map(|c| c * &factor).collect(),
        }
    }

    /// Quotient q with q * den = self, to the common order. Unit
    /// denominators divide directly; a denominator of valuation v requires
    /// the numerator to have valuation at least v and the result's order
    /// drops by v.
    pub fn div(&self, den: &Series) -> Result<Series, SeriesError> {
        let vd = match den.valuation() {
            Some(v) => v,
            None => {
                return Err(SeriesError::DivisionByNonUnit(
                    "denominator is the zero series".into(),
                ))
            }
        };
        let order = self.order().min(den.order());
        if vd == 0 {
            return Ok(long_divide(
                &self.coeffs[..=order.min(self.order())],
                &den.coeffs[..=order],
                order,
            ));
        }
        if vd > order {
            return Err(SeriesError::DivisionByNonUnit(format!(
                "denominator valuation {vd} exceeds the truncation order {order}"
            )));
        }
        match self.valuation() {
            None => Ok(Series::zero(order - vd)),
            Some(vn) if vn >= vd => {
                let num: Vec<BigRational> = self.coeffs[vd..=order].to_vec();
                let den: Vec<BigRational> = den.coeffs[vd..=order].to_vec();
                Ok(long_divide(&num, &den, order - vd))
            }
            Some(vn) => Err(SeriesError::DivisionByNonUnit(format!(
                "numerator valuation {vn} is below denominator valuation {vd}"
            ))),
        }
    }

    /// Checks coefficient agreement up to the common order, reporting the
    /// first differing index.
    pub fn ensure_equal(&self, other: &Series, context: &str) -> Result<(), SeriesError> {
        let order = self.order().min(other.order());
        for k in 0..=order {
            if self.coeffs[k] != other.coeffs[k] {
                return Err(SeriesError::Mismatch {
                    context: context.to_string(),
                    index: k,
                    left: self.coeffs[k].to_string(),
                    right: other.coeffs[k].to_string(),
                });
            }
        }
        Ok(())
    }
}

fn long_divide(num: &[BigRational], den: &[BigRational], order: usize) -> Series {
    debug_assert!(!den[0].is_zero());
    let mut q = vec![BigRational::zero(); order + 1];
    for k in 0..=order {
        let mut acc = if k < num.len() {
            num[k].clone()
        } else {
            BigRational::zero()
        };
        for i in 0..k {
            if !q[i].is_zero() && k - i < den.len() {
                acc -= &q[i] * &den[k - i];
            }
        }
        q[k] = acc / &den[0];
    }
    Series { coeffs: q }
}

/// The principal square root of 1 + s: the series t with t^2 = 1 + s and
/// constant term 1. `s` must have zero constant term.
pub fn sqrt_one_plus(s: &Series) -> Series {
    assert!(
        s.coeff(0).is_zero(),
        "sqrt_one_plus expects a zero constant term"
    );
    let order = s.order();
    // write t = 1 + u; then u = (s - u^2) / 2 determines u degree by degree
    let mut u = vec![BigRational::zero(); order + 1];
    let two = BigRational::from_integer(BigInt::from(2));
    for k in 1..=order {
        let mut acc = s.coeffs[k].clone();
        for i in 1..k {
            acc -= &u[i] * &u[k - i];
        }
        u[k] = acc / &two;
    }
    u[0] = BigRational::one();
    Series { coeffs: u }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Convenience for tests and displays: the integer coefficient of x^k,
/// panicking if it is not an integer.
pub fn int_coeff(s: &Series, k: usize) -> BigInt {
    s.coeff_integer(k)
        .unwrap_or_else(|| panic!("coefficient of x^{k} is {} (not an integer)", s.coeff(k)))
}
