//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. Two fields are
//! provided: [`Rational`] (arbitrary precision) and
//! [`AlgNum`](crate::numberfield::AlgNum), elements of a small number field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::factor::FactoredPoly;
use crate::poly::Poly;

pub type Rational = BigRational;

/// An exact field of characteristic zero.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_rational(q: Rational) -> Self;

    /// `Some(q)` when the element lies in the prime field Q.
    fn as_rational(&self) -> Option<Rational>;

    /// Coordinates over Q (power basis for number fields).
    fn rational_coords(&self) -> Vec<Rational>;

    /// Factor a nonzero polynomial into monic irreducibles.
    fn factor_poly(p: &Poly<Self>, max_degree: usize) -> Result<FactoredPoly<Self>>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn quo(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents allowed for nonzero elements.
    fn powi(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().pow(e.unsigned_abs())
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn rational_coords(&self) -> Vec<Rational> {
        vec![self.clone()]
    }

    fn factor_poly(p: &Poly<Self>, max_degree: usize) -> Result<FactoredPoly<Self>> {
        crate::factor::factor_rational(p, max_degree)
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Writes a rational coefficient the way the equation grammar reads it back.
pub(crate) fn fmt_rational(q: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}
