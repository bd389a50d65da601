//! Coefficient rings: exact rationals, tolerance-compared floats, and
//! square-matrix algebras over either.
//!
//! Every consumer of coefficients goes through the [`Ring`] trait, a ring
//! *object* pattern: the ring instance carries context (matrix dimension,
//! float tolerance) that plain element types cannot. Two elements may only
//! meet in an operation when they come from the same ring instance; the
//! matrix ring asserts this.

mod matrix;
mod rational;
mod real64;

pub use matrix::{Matrix, MatrixRing};
pub use rational::Rational;
pub use real64::Real64Field;

use std::fmt;

use crate::error::{Error, Result};

/// Sign of an order-0 scalar, used to tell the two connected components
/// of a unit group apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A unital associative ring with enough extra structure to drive the
/// series calculus: embedding of rationals (characteristic zero),
/// inversion as a fallible operation, and exp/log of constants where the
/// ring can represent them.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Semantic equality. Exact for rational-based rings; absolute
    /// tolerance for `Real64Field`.
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Two-sided inverse, or `NotAUnit`.
    fn try_invert(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn from_integer(&self, n: i64) -> Self::Elem;

    /// Embed an exact rational. Total for every ring here (all have
    /// characteristic zero); matrix rings embed `q` as `q * identity`.
    fn from_rational(&self, q: &Rational) -> Self::Elem;

    /// Whether arithmetic in this ring is exact (no rounding).
    fn is_exact(&self) -> bool;

    /// Exponential of an order-0 coefficient. Exact rings only admit the
    /// zero element (result `one`); `Real64Field` computes `exp`.
    fn exp_scalar(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Logarithm of an order-0 coefficient. Exact rings only admit `one`
    /// (result `zero`); `Real64Field` requires a positive value.
    fn log_scalar(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Sign of a scalar for ordered coefficient rings; `None` where no
    /// canonical order exists (matrix rings).
    fn sign(&self, a: &Self::Elem) -> Option<Sign>;

    /// Hint for pivot selection in elimination: a magnitude for inexact
    /// rings, `None` for exact ones (any nonzero pivot is fine there).
    fn magnitude_hint(&self, _a: &Self::Elem) -> Option<f64> {
        None
    }
}

/// The field of arbitrary-precision rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn eq(&self, a: &Rational, b: &Rational) -> bool {
        a == b
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a.clone()
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn try_invert(&self, a: &Rational) -> Result<Rational> {
        a.try_invert()
    }

    fn from_integer(&self, n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn exp_scalar(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            Ok(Rational::one())
        } else {
            Err(Error::InexactScalar(format!(
                "exp({a}) is not rational; use the real64 ring or a zero constant term"
            )))
        }
    }

    fn log_scalar(&self, a: &Rational) -> Result<Rational> {
        if !a.is_positive() {
            Err(Error::Domain(format!("log({a}) needs a positive constant term")))
        } else if a.is_one() {
            Ok(Rational::zero())
        } else {
            Err(Error::InexactScalar(format!(
                "log({a}) is not rational; use the real64 ring or a unit constant term"
            )))
        }
    }

    fn sign(&self, a: &Rational) -> Option<Sign> {
        if a.is_negative() {
            Some(Sign::Minus)
        } else {
            Some(Sign::Plus)
        }
    }
}
