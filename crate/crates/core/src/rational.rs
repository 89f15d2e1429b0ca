//! Exact rational arithmetic shared by every verdict path.
//!
//! Everything is backed by arbitrary-precision [`BigRational`]; there is no
//! floating point anywhere in the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `p`, `-p` or `p/q`. The denominator must be non-zero.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<BigInt>().ok()?,
            q.trim().parse::<BigInt>().ok()?,
        ),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Least common multiple of the denominators in `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Positive factor `s` such that `s * values` is an integer vector with gcd 1.
///
/// Returns one for an all-zero vector.
pub fn primitive_scale<'a>(values: impl IntoIterator<Item = &'a Rational> + Clone) -> Rational {
    let lcm = denominator_lcm(values.clone());
    let gcd = values
        .into_iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer().abs())
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
    if gcd.is_zero() {
        Rational::one()
    } else {
        Rational::new(lcm, gcd)
    }
}
