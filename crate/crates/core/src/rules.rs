//! Registered distance rules on ℕ and registered self-map rules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::distance::ExtDistance;
use crate::error::Error;

/// Distance rules over pairs of nonnegative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceRule {
    /// `d(0,1) = 1`, every other distinct pair at distance 2.
    TwoLevel,
    /// `d(0,1) = 1`, otherwise `1 + 1/max(x,y)`.
    ReciprocalMax,
    /// `d(0,1) = 1`, `d(0,y) = 1 + 1/y`, `d(x,y) = 1 + 1/(x(y-x))` for `1 ≤ x < y`.
    ReciprocalGap,
    /// 0 and 1 at distance 1, both at distance 2 from 2, then a ray with
    /// consecutive steps `1 + 1/i` from `i` to `i + 1`.
    HarmonicRay,
}

impl SpaceRule {
    pub const ALL: [SpaceRule; 4] = [
        SpaceRule::TwoLevel,
        SpaceRule::ReciprocalMax,
        SpaceRule::ReciprocalGap,
        SpaceRule::HarmonicRay,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceRule::TwoLevel => "ex1_infinite",
            SpaceRule::ReciprocalMax => "ex2",
            SpaceRule::ReciprocalGap => "ex3",
            SpaceRule::HarmonicRay => "empty_fixed_point",
        }
    }

    pub fn distance(self, x: usize, y: usize) -> ExtDistance {
        if x == y {
            return ExtDistance::zero();
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        if (lo, hi) == (0, 1) {
            return ExtDistance::one();
        }
        let value = match self {
            SpaceRule::TwoLevel => BigRational::from_integer(2.into()),
            SpaceRule::ReciprocalMax => one_plus_reciprocal(hi as u128),
            SpaceRule::ReciprocalGap if lo == 0 => one_plus_reciprocal(hi as u128),
            SpaceRule::ReciprocalGap => one_plus_reciprocal(lo as u128 * (hi - lo) as u128),
            SpaceRule::HarmonicRay if lo <= 1 => {
                BigRational::from_integer(2.into()) + harmonic_steps(2, hi)
            }
            SpaceRule::HarmonicRay => harmonic_steps(lo, hi),
        };
        ExtDistance::Finite(value)
    }
}

fn one_plus_reciprocal(n: u128) -> BigRational {
    BigRational::new(BigInt::from(n) + 1, BigInt::from(n))
}

/// `(1 + 1/from) + … + (1 + 1/(to - 1))`, empty when `from >= to`.
pub(crate) fn harmonic_steps(from: usize, to: usize) -> BigRational {
    let mut sum = BigRational::zero();
    for i in from..to {
        sum += one_plus_reciprocal(i as u128);
    }
    sum
}

impl fmt::Display for SpaceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SpaceRule::ALL
            .into_iter()
            .find(|rule| rule.name() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_owned()))
    }
}

/// Self-map rules over nonnegative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapRule {
    /// `0, 1 ↦ 0`, `x ↦ x + 1` for `x > 1`.
    ShiftAboveOne,
    /// `2 ↦ 1`, everything else `↦ 0`.
    TwoValued,
    /// `0, 1 ↦ 2`, `x ↦ x + 1` for `x > 1`.
    ShiftOntoTwo,
    /// Indicator of the complement of `{0, 1}`.
    OutsideZeroOne,
    Identity,
}

impl MapRule {
    pub const ALL: [MapRule; 5] = [
        MapRule::ShiftAboveOne,
        MapRule::TwoValued,
        MapRule::ShiftOntoTwo,
        MapRule::OutsideZeroOne,
        MapRule::Identity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapRule::ShiftAboveOne => "shift-above-1",
            MapRule::TwoValued => "two-valued",
            MapRule::ShiftOntoTwo => "shift-onto-2",
            MapRule::OutsideZeroOne => "indicator-outside-01",
            MapRule::Identity => "identity",
        }
    }

    pub fn image(self, x: usize) -> usize {
        match self {
            MapRule::ShiftAboveOne if x <= 1 => 0,
            MapRule::ShiftOntoTwo if x <= 1 => 2,
            MapRule::ShiftAboveOne | MapRule::ShiftOntoTwo => x + 1,
            MapRule::TwoValued => usize::from(x == 2),
            MapRule::OutsideZeroOne => usize::from(x > 1),
            MapRule::Identity => x,
        }
    }
}

impl fmt::Display for MapRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MapRule::ALL
            .into_iter()
            .find(|rule| rule.name() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_owned()))
    }
}
