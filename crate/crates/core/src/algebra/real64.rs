//! 64-bit floating coefficients with tolerance-based equality.
//!
//! Series coefficients must stay finite; the io layer rejects NaN and
//! infinities on input, and `exp_scalar` refuses to overflow silently.

use crate::error::{Error, Result};

use super::{Rational, Ring, Sign};

/// The real numbers as `f64`, compared with a configurable absolute
/// tolerance. Storage pruning (`is_zero`) is exact so that a series keeps
/// every computed coefficient; only comparisons are tolerant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real64Field {
    tolerance: f64,
}

impl Default for Real64Field {
    fn default() -> Self {
        Real64Field { tolerance: 1e-9 }
    }
}

impl Real64Field {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_tolerance(tolerance: f64) -> Self {
        assert!(tolerance >= 0.0 && tolerance.is_finite(), "tolerance must be finite and >= 0");
        Real64Field { tolerance }
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Admit a value as a coefficient; NaN and infinities are rejected.
    pub fn element(&self, value: f64) -> Result<f64> {
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Structure(format!("non-finite coefficient {value}")))
        }
    }
}

impl Ring for Real64Field {
    type Elem = f64;

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn is_zero(&self, a: &f64) -> bool {
        *a == 0.0
    }

    fn eq(&self, a: &f64, b: &f64) -> bool {
        (a - b).abs() <= self.tolerance
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn neg(&self, a: &f64) -> f64 {
        -a
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }

    fn try_invert(&self, a: &f64) -> Result<f64> {
        if *a == 0.0 {
            Err(Error::NotAUnit("0.0 has no inverse".into()))
        } else {
            Ok(1.0 / a)
        }
    }

    fn from_integer(&self, n: i64) -> f64 {
        n as f64
    }

    fn from_rational(&self, q: &Rational) -> f64 {
        q.to_f64()
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn exp_scalar(&self, a: &f64) -> Result<f64> {
        let e = a.exp();
        if e.is_finite() {
            Ok(e)
        } else {
            Err(Error::Domain(format!("exp({a}) overflows f64")))
        }
    }

    fn log_scalar(&self, a: &f64) -> Result<f64> {
        if *a > 0.0 {
            Ok(a.ln())
        } else {
            Err(Error::Domain(format!("log({a}) needs a positive constant term")))
        }
    }

    fn sign(&self, a: &f64) -> Option<Sign> {
        if *a < 0.0 {
            Some(Sign::Minus)
        } else {
            Some(Sign::Plus)
        }
    }

    fn magnitude_hint(&self, a: &f64) -> Option<f64> {
        Some(a.abs())
    }
}
