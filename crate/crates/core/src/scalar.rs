//! Exact scalar types used as edge weights.
//!
//! Every algorithm in this crate compares weights for exact equality (tree
//! identity under scaling and shifting, ties in Kruskal order), so the
//! scalar must be an ordered field with exact arithmetic. Floating point is
//! deliberately not supported: `f64` is not `Ord`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact, totally ordered field element.
pub trait Scalar: Clone + Ord + Hash + Debug + Display + Send + Sync + Signed + 'static {
    /// `numer / denom`. Panics when `denom == 0`.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Parses a decimal (`-12.375`) or a fraction (`3/8`) without rounding.
    fn parse_exact(text: &str) -> Option<Self>;

    fn from_int(value: i64) -> Self {
        Self::from_ratio(value, 1)
    }

    /// `2^exp`, used by threshold searches.
    fn pow2(exp: u32) -> Self {
        let two = Self::from_int(2);
        (0..exp).fold(Self::one(), |acc, _| acc * two.clone())
    }
}

impl Scalar for BigRational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn parse_exact(text: &str) -> Option<Self> {
        parse_big(text)
    }
}

impl Scalar for Ratio<i64> {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn parse_exact(text: &str) -> Option<Self> {
        let big = parse_big(text)?;
        Some(Ratio::new(big.numer().to_i64()?, big.denom().to_i64()?))
    }
}

fn parse_big(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((numer, denom)) = text.split_once('/') {
        let numer: BigInt = parse_integer(numer)?;
        let denom: BigInt = parse_integer(denom)?;
        if denom.is_zero() {
            return None;
        }
        return Some(BigRational::new(numer, denom));
    }

    let (negative, digits) = match text.as_bytes()[0] {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer: BigInt = all_digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(numer, denom);
    Some(if negative { -value } else { value })
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let text = text.trim();
    let body = text.strip_prefix('-').or_else(|| text.strip_prefix('+')).unwrap_or(text);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}
