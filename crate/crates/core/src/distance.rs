//! Exact nonnegative rationals extended with `+∞`.
//!
//! Every verdict in this crate hinges on strict inequalities between
//! distances, so nothing here touches floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A distance value: a nonnegative exact rational or `INFINITY`.
///
/// The derived ordering puts every finite value below `Infinite`, and
/// `Infinite == Infinite`, so `INFINITY < INFINITY` is false.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtDistance {
    Finite(BigRational),
    Infinite,
}

impl ExtDistance {
    pub const INFINITY: ExtDistance = ExtDistance::Infinite;

    pub fn zero() -> Self {
        ExtDistance::Finite(BigRational::zero())
    }

    pub fn one() -> Self {
        ExtDistance::Finite(BigRational::one())
    }

    pub fn from_integer(n: u64) -> Self {
        ExtDistance::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn ratio(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        ExtDistance::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Wraps a rational, rejecting negative values.
    pub fn from_rational(value: BigRational) -> Result<Self, Error> {
        if value.is_negative() {
            return Err(Error::NegativeDistance(value.to_string()));
        }
        Ok(ExtDistance::Finite(value))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtDistance::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtDistance::Finite(v) if v.is_zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtDistance::Finite(v) => Some(v),
            ExtDistance::Infinite => None,
        }
    }

    /// Exact product; `0 · ∞` is taken to be `0`.
    pub fn mul(&self, other: &ExtDistance) -> ExtDistance {
        match (self, other) {
            (ExtDistance::Finite(a), ExtDistance::Finite(b)) => ExtDistance::Finite(a * b),
            (ExtDistance::Finite(a), ExtDistance::Infinite)
            | (ExtDistance::Infinite, ExtDistance::Finite(a))
                if a.is_zero() =>
            {
                ExtDistance::zero()
            }
            _ => ExtDistance::Infinite,
        }
    }

    /// Contraction ratio of an image distance over a domain distance.
    ///
    /// A finite image distance over an infinite domain distance contributes 0;
    /// two infinite distances contribute 1 (`∞ < ∞` fails, so the pair is not
    /// contracted). The domain distance must be positive.
    pub fn contraction_ratio(image: &ExtDistance, domain: &ExtDistance) -> ExtDistance {
        match (image, domain) {
            (_, ExtDistance::Finite(d)) if d.is_zero() => {
                panic!("contraction ratio over a zero distance")
            }
            (ExtDistance::Finite(a), _) if a.is_zero() => ExtDistance::zero(),
            (ExtDistance::Finite(a), ExtDistance::Finite(d)) => ExtDistance::Finite(a / d),
            (ExtDistance::Finite(_), ExtDistance::Infinite) => ExtDistance::zero(),
            (ExtDistance::Infinite, ExtDistance::Finite(_)) => ExtDistance::Infinite,
            (ExtDistance::Infinite, ExtDistance::Infinite) => ExtDistance::one(),
        }
    }
}

impl Add for &ExtDistance {
    type Output = ExtDistance;

    fn add(self, rhs: &ExtDistance) -> ExtDistance {
        match (self, rhs) {
            (ExtDistance::Finite(a), ExtDistance::Finite(b)) => ExtDistance::Finite(a + b),
            _ => ExtDistance::Infinite,
        }
    }
}

impl Add for ExtDistance {
    type Output = ExtDistance;

    fn add(self, rhs: ExtDistance) -> ExtDistance {
        &self + &rhs
    }
}

impl PartialEq<BigRational> for ExtDistance {
    fn eq(&self, other: &BigRational) -> bool {
        matches!(self, ExtDistance::Finite(v) if v == other)
    }
}

impl PartialOrd<BigRational> for ExtDistance {
    fn partial_cmp(&self, other: &BigRational) -> Option<Ordering> {
        Some(match self {
            ExtDistance::Finite(v) => v.cmp(other),
            ExtDistance::Infinite => Ordering::Greater,
        })
    }
}

impl fmt::Display for ExtDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDistance::Finite(v) if v.denom().is_one() => write!(f, "{}", v.numer()),
            ExtDistance::Finite(v) => write!(f, "{}/{}", v.numer(), v.denom()),
            ExtDistance::Infinite => f.write_str("inf"),
        }
    }
}

fn parse_unsigned(text: &str, whole: &str) -> Result<BigInt, Error> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidRational(whole.to_owned()));
    }
    text.parse::<BigInt>()
        .map_err(|_| Error::InvalidRational(whole.to_owned()))
}

/// Parses `"p"`, `"p/q"` or `"inf"`. Decimal and exponent notation is
/// rejected so that float-valued input never enters the analysis.
impl FromStr for ExtDistance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let text = s.trim();
        if text.eq_ignore_ascii_case("inf") || text == "∞" {
            return Ok(ExtDistance::Infinite);
        }
        if text.starts_with('-') {
            return Err(Error::NegativeDistance(text.to_owned()));
        }
        if text.contains(['.', 'e', 'E']) {
            return Err(Error::FloatRejected(text.to_owned()));
        }
        let (numer, denom) = match text.split_once('/') {
            Some((p, q)) => (parse_unsigned(p.trim(), text)?, parse_unsigned(q.trim(), text)?),
            None => (parse_unsigned(text, text)?, BigInt::one()),
        };
        if denom.is_zero() {
            return Err(Error::InvalidRational(text.to_owned()));
        }
        Ok(ExtDistance::Finite(BigRational::new(numer, denom)))
    }
}

impl Serialize for ExtDistance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtDistance {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a rational that must be finite, e.g. an `ε` or a modulus.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    match text.parse::<ExtDistance>()? {
        ExtDistance::Finite(v) => Ok(v),
        ExtDistance::Infinite => Err(Error::InvalidRational(text.to_owned())),
    }
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}
