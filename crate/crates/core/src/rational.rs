//! Exact rational arithmetic.
//!
//! Everything in this crate that carries a weight carries a [`Rational`]:
//! an arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. There is no floating point anywhere; identities verified by
//! the library are equality assertions, not tolerance checks.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
///
/// The text form is `"p/q"`, or just `"p"` when the denominator is 1; that
/// is the form used by every JSON interface of this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Builds `numer/denom`, reducing to lowest terms. Fails on a zero
    /// denominator.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::InvalidRational {
                text: format!("{numer}/{denom}"),
                reason: "zero denominator".into(),
            });
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    /// Ratio of two counts, e.g. an empirical frequency.
    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self, Error> {
        Self::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::InvalidRational {
                text: "1/0".into(),
                reason: "division by zero".into(),
            });
        }
        Ok(Rational(self.0.recip()))
    }

    pub(crate) fn from_big_rational(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints "p/q", or "p" alone when q == 1.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"`. The numerator may be negative; the
    /// denominator must be a positive integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let fail = |reason: &str| Error::InvalidRational {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let (num_text, den_text) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let numer = BigInt::from_str(num_text.trim())
            .map_err(|_| fail("numerator is not an integer"))?;
        let denom = match den_text {
            Some(d) => {
                let d = BigInt::from_str(d.trim())
                    .map_err(|_| fail("denominator is not an integer"))?;
                if d.is_zero() {
                    return Err(fail("zero denominator"));
                }
                if d.is_negative() {
                    return Err(fail("denominator must be positive"));
                }
                d
            }
            None => BigInt::one(),
        };
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_reduces_to_lowest_terms() {
        assert_eq!(r("4/6"), r("2/3"));
        assert_eq!(r("4/6").to_string(), "2/3");
        assert_eq!(r("7").to_string(), "7");
        assert_eq!(r("-4/6").to_string(), "-2/3");
    }

    #[test]
    fn parse_rejects_bad_text() {
        assert!(Rational::from_str("1/0").is_err());
        assert!(Rational::from_str("1/-2").is_err());
        assert!(Rational::from_str("a/b").is_err());
        assert!(Rational::from_str("").is_err());
        assert!(Rational::from_str("1.5").is_err());
    }

    #[test]
    fn integer_display_omits_denominator() {
        assert_eq!((r("1/3") + r("2/3")).to_string(), "1");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic_spot_checks() {
        assert_eq!(r("2/3") + r("5/7"), r("29/21"));
        assert_eq!(r("2/3") * r("5/7"), r("10/21"));
        assert_eq!((r("1/2") - r("1/3")).to_string(), "1/6");
        assert_eq!(r("3/4").recip().unwrap(), r("4/3"));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn ordering_and_signs() {
        assert!(r("1/3") < r("1/2"));
        assert!(r("-1/2").is_negative());
        assert!(r("1/2").is_positive());
        assert_eq!(r("-3/5").abs(), r("3/5"));
    }

    #[test]
    fn serde_round_trip_as_string() {
        let v = r("29/21");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "\"29/21\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    prop_compose! {
        fn arb_rational()(n in -1000i64..1000, d in 1i64..1000) -> Rational {
            Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
        }
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_identity(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&(&(&a + &b) - &b), &a);
        }

        #[test]
        fn multiply_then_divide_is_identity(a in arb_rational(), b in arb_rational()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&(&a * &b) / &b), &a);
        }

        #[test]
        fn display_round_trips(a in arb_rational()) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
        }
    }
}
