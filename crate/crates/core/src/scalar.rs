//! Coefficient fields shared by the exact and floating-point code paths.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive};

/// Exact rational scalar.
pub type Q = BigRational;

/// A field usable as a coefficient ring for multivectors, polynomials and
/// the classical recurrences.
pub trait Coefficient: Clone + fmt::Debug + PartialEq + Num + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;
    fn from_q(v: &Q) -> Self;
}

impl Coefficient for Q {
    fn from_i64(v: i64) -> Self {
        Q::from_integer(BigInt::from(v))
    }
    fn from_q(v: &Q) -> Self {
        v.clone()
    }
}

impl Coefficient for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_q(v: &Q) -> Self {
        q_to_f64(v)
    }
}

impl Coefficient for Complex64 {
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_q(v: &Q) -> Self {
        Complex64::new(q_to_f64(v), 0.0)
    }
}

/// `n / d` as an exact rational.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_to_f64(v: &Q) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 only fails on overflow of both parts; fall back to
        // a quotient of the parts.
        let n = v.numer().to_f64().unwrap_or(f64::NAN);
        let d = v.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational from an `f64` (every finite double is a dyadic rational).
pub fn q_from_f64(v: f64) -> Option<Q> {
    Q::from_float(v)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub fn is_integer_valued(v: f64) -> bool {
    v.is_finite() && v.fract() == 0.0
}
