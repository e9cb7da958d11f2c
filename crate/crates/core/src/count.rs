use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision nonnegative count.
///
/// Serializes as a decimal string since homomorphism counts leave the
/// 64-bit range quickly.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn zero() -> Self {
        ExactCount(BigUint::zero())
    }

    pub fn one() -> Self {
        ExactCount(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(base: u64, exp: u32) -> Self {
        ExactCount(BigUint::from(base).pow(exp))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// Returns the value if it fits in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }

    /// `self - other`, or `None` when that would go negative.
    pub fn checked_sub(&self, other: &ExactCount) -> Option<ExactCount> {
        if self.0 >= other.0 {
            Some(ExactCount(&self.0 - &other.0))
        } else {
            None
        }
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<u128> for ExactCount {
    fn from(v: u128) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<usize> for ExactCount {
    fn from(v: usize) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

impl Add for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactCount> for &'a ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: &ExactCount) -> ExactCount {
        ExactCount(&self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactCount> for ExactCount {
    fn add_assign(&mut self, rhs: &ExactCount) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for ExactCount {
    fn add_assign(&mut self, rhs: ExactCount) {
        self.0 += rhs.0;
    }
}

impl Mul for ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a ExactCount> for &'a ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: &ExactCount) -> ExactCount {
        ExactCount(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for &ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: u64) -> ExactCount {
        ExactCount(&self.0 * rhs)
    }
}

impl MulAssign<&ExactCount> for ExactCount {
    fn mul_assign(&mut self, rhs: &ExactCount) {
        self.0 *= &rhs.0;
    }
}

impl Sum for ExactCount {
    fn sum<I: Iterator<Item = ExactCount>>(iter: I) -> Self {
        iter.fold(ExactCount::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactCount> for ExactCount {
    fn sum<I: Iterator<Item = &'a ExactCount>>(iter: I) -> Self {
        let mut acc = ExactCount::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl Product for ExactCount {
    fn product<I: Iterator<Item = ExactCount>>(iter: I) -> Self {
        iter.fold(ExactCount::one(), |acc, x| acc * x)
    }
}

impl PartialEq<u64> for ExactCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for ExactCount {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(ExactCount)
    }
}

impl Serialize for ExactCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ExactCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
