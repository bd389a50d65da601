//! Arbitrary-precision rationals, always stored in lowest terms with a
//! positive denominator.
//!
//! Serialized form is the string `"p/q"`, with `/q` omitted when the
//! denominator is 1 (so `"3"`, `"-1/2"`, `"5/6"`).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number. `BigRational` keeps the gcd/positive-denominator
/// invariant on every operation, so arithmetic never needs renormalization
/// and never rounds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `numerator / denominator`, normalized. Fails on a zero denominator.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Structure("rational with zero denominator".into()));
        }
        Ok(Rational(BigRational::new(BigInt::from(numerator), BigInt::from(denominator))))
    }

    pub fn from_big(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Structure("rational with zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn try_invert(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::NotAUnit("0 has no inverse".into()))
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    /// 1/n!, the coefficient that exp and symmetrization need.
    pub fn inv_factorial(n: usize) -> Self {
        let mut f = BigInt::one();
        for k in 2..=n {
            f *= BigInt::from(k);
        }
        Rational(BigRational::new(BigInt::one(), f))
    }

    /// 2^(-n), the ultrametric radius of the order-n ball.
    pub fn two_pow_neg(n: usize) -> Self {
        Rational(BigRational::new(BigInt::one(), BigInt::one() << n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer();
        let d = self.0.denom();
        // Good enough for the magnitudes this engine handles.
        str_to_f64(&n.to_string()) / str_to_f64(&d.to_string())
    }
}

fn str_to_f64(s: &str) -> f64 {
    s.parse::<f64>().unwrap_or(f64::NAN)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational {s:?}, expected \"p\" or \"p/q\""));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let n = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("invalid rational {s:?}: zero denominator")));
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                Rational(self.0.$op(rhs.0))
            }
        }
        impl $Op<&Rational> for &Rational {
            type Output = Rational;
            fn $op(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$op(&rhs.0))
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $op(self, rhs: &Rational) -> Rational {
                Rational(self.0.$op(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_on_construction() {
        let r = Rational::new(2, 4).unwrap();
        assert_eq!(r, Rational::new(1, 2).unwrap());
        assert_eq!(r.to_string(), "1/2");
        // Negative denominators move the sign to the numerator.
        let r = Rational::new(3, -6).unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert!(r.denominator().is_positive());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(matches!(Rational::new(1, 0), Err(Error::Structure(_))));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "3", "-7", "5/6", "-1/2", "22/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn inv_factorial_values() {
        assert_eq!(Rational::inv_factorial(0), Rational::one());
        assert_eq!(Rational::inv_factorial(1), Rational::one());
        assert_eq!(Rational::inv_factorial(4), Rational::new(1, 24).unwrap());
    }
}
