use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Num;

/// An exact, totally ordered coefficient ring.
///
/// Every algebraic type in the crate is generic over this; the concrete
/// aliases at the crate root pick [`BigInt`] or [`BigRational`]. Machine
/// integers (`i64`, `i128`) also qualify and are handy in tests.
pub trait Coefficient: Clone + Num + Ord + Debug + Display + Send + Sync {
    fn from_u64(v: u64) -> Self;

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn is_nonnegative(&self) -> bool {
        *self >= Self::zero()
    }

    fn abs_value(&self) -> Self {
        if self.is_negative() {
            Self::zero() - self.clone()
        } else {
            self.clone()
        }
    }
}

impl Coefficient for BigInt {
    fn from_u64(v: u64) -> Self {
        BigInt::from(v)
    }
}

impl Coefficient for BigRational {
    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Coefficient for i64 {
    fn from_u64(v: u64) -> Self {
        i64::try_from(v).expect("value fits in i64")
    }
}

impl Coefficient for i128 {
    fn from_u64(v: u64) -> Self {
        i128::from(v)
    }
}

/// Integer-valued rational.
pub fn rational(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Embeds integer coefficients into the rationals.
pub fn to_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Serde adapter writing a value through `Display` and reading it back
/// through `FromStr`, so big numbers travel as decimal strings.
pub mod as_string {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
