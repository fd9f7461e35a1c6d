//! Exact scalars: big rationals, factorials, multinomials and the ring
//! contract shared by every coefficient type in the crate.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// All scalar coefficients are exact rationals, normalized on construction.
pub type Rational = BigRational;

/// Commutative ring with unit.
///
/// Hyperdeterminants and the umbral substitution are written against this
/// trait so the same code runs over evaluated alphabets ([`Rational`]) and
/// formal symmetric functions ([`crate::SymFunc`]).
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, c: &Rational) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }

    fn from_rational(c: &Rational) -> Self {
        Self::one().scale(c)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Builds `num / den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `(-1)^e` as a rational.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Integer power with a possibly negative exponent. `base` must be nonzero
/// when `e < 0`.
pub fn pow(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), e.unsigned_abs() as usize)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `total! / prod(parts_i!)`.
pub fn multinomial(total: u64, parts: &[u64]) -> Result<BigInt> {
    let sum: u64 = parts.iter().sum();
    if sum != total {
        return Err(Error::MultinomialMismatch { total, sum });
    }
    let den = parts
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * factorial(p));
    Ok(factorial(total) / den)
}

/// The multinomial `(a*n; a, ..., a)` that recurs in the rectangular Jack
/// normalizations.
pub fn uniform_multinomial(a: u64, n: u64) -> BigInt {
    multinomial(a * n, &vec![a; n as usize]).expect("parts sum to total by construction")
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(big(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Returns `Some(n)` when `r` is a positive integer that fits in `u32`.
pub fn as_positive_integer(r: &Rational) -> Option<u32> {
    if !r.is_integer() || !r.is_positive() {
        return None;
    }
    u32::try_from(r.to_integer()).ok()
}

/// Serde adapter for rationals stored as `"p/q"` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// A rational that serializes as a `"p/q"` string, for config and report
/// fields.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub Rational);

impl serde::Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_rational::serialize(&self.0, s)
    }
}

impl<'de> serde::Deserialize<'de> for Q {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        serde_rational::deserialize(d).map(Q)
    }
}

impl From<Rational> for Q {
    fn from(r: Rational) -> Self {
        Q(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(multinomial(0, &[]).unwrap(), BigInt::from(1));
        assert_eq!(multinomial(6, &[2, 2, 2]).unwrap(), BigInt::from(90));
        assert_eq!(uniform_multinomial(2, 3), BigInt::from(90));
    }

    #[test]
    fn multinomial_rejects_bad_sum() {
        assert!(matches!(
            multinomial(3, &[1, 1]),
            Err(Error::MultinomialMismatch { total: 3, sum: 2 })
        ));
    }

    #[test]
    fn rational_text_format() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&rat(-4, 2)), "-2");
        assert_eq!(parse_rational(" -3/6 ").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn stored_in_lowest_terms() {
        let r = rat(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn addition_is_exact(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(a.plus(&b).minus(&b), a);
        }

        #[test]
        fn ring_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.plus(&b), b.plus(&a));
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.plus(&<Rational as Ring>::zero()), a.clone());
            prop_assert_eq!(a.times(&<Rational as Ring>::one()), a.clone());
            prop_assert!(Ring::is_zero(&a.plus(&a.negate())));
        }

        #[test]
        fn multinomial_symmetric(parts in proptest::collection::vec(0u64..5, 0..5), seed in any::<u64>()) {
            let total = parts.iter().sum();
            let mut shuffled = parts.clone();
            let len = shuffled.len();
            if len > 1 {
                shuffled.rotate_left((seed as usize) % len);
                shuffled.swap(0, len - 1);
            }
            prop_assert_eq!(multinomial(total, &parts).unwrap(), multinomial(total, &shuffled).unwrap());
        }
    }
}
