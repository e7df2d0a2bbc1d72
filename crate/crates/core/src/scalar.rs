//! Scalars: exact rationals with an opt-in `f64` backend.
//!
//! Every component of a bicomplex number is a [`Scalar`]. The default
//! [`Scalar::Exact`] variant is an arbitrary-precision rational, so
//! equality tests in tables and verification runs are decisive. The
//! [`Scalar::Float`] variant exists for quick numeric exploration; it
//! is contagious, meaning any operation with at least one float operand
//! yields a float.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// An exact rational or a double-precision float.
#[derive(Clone, Debug)]
pub enum Scalar {
    /// Arbitrary-precision rational. The default everywhere.
    Exact(BigRational),
    /// IEEE 754 double. Propagates through mixed expressions.
    Float(f64),
}

impl Scalar {
    /// The additive identity, exact.
    pub fn zero() -> Self {
        Scalar::Exact(BigRational::zero())
    }

    /// The multiplicative identity, exact.
    pub fn one() -> Self {
        Scalar::Exact(BigRational::one())
    }

    /// Exact integer.
    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact ratio `numer / denom`. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Exact rational from big integers. Panics if `denom` is zero.
    pub fn from_big_ratio(numer: BigInt, denom: BigInt) -> Self {
        Scalar::Exact(BigRational::new(numer, denom))
    }

    /// Float scalar.
    pub fn from_f64(x: f64) -> Self {
        Scalar::Float(x)
    }

    /// True for the exact backend.
    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// True for zero. Exact test on rationals, bit-exact test on floats.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    /// True for one.
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_one(),
            Scalar::Float(x) => *x == 1.0,
        }
    }

    /// True for values strictly below zero.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_negative(),
            Scalar::Float(x) => *x < 0.0,
        }
    }

    /// The underlying rational, when exact.
    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Numeric value as `f64`, lossy for large exact values.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    /// Absolute value.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    /// Multiplicative inverse. Zero has none.
    pub fn recip(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::NonInvertible);
        }
        Ok(match self {
            Scalar::Exact(r) => Scalar::Exact(r.recip()),
            Scalar::Float(x) => Scalar::Float(1.0 / x),
        })
    }

    /// Checked division.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &rhs.recip()?)
    }

    /// Nonnegative integer power.
    pub fn pow(&self, n: u32) -> Scalar {
        match self {
            Scalar::Exact(r) => {
                Scalar::Exact(num_traits::pow::pow(r.clone(), n as usize))
            }
            Scalar::Float(x) => Scalar::Float(x.powi(n as i32)),
        }
    }

    /// Exact square root, if one exists in the rationals.
    ///
    /// Returns `None` for negative values, for rationals that are not
    /// squares, and for all floats (a float carries no exactness to
    /// certify a root with).
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        let r = self.as_exact()?;
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Scalar::zero());
        }
        let numer = exact_bigint_sqrt(r.numer())?;
        let denom = exact_bigint_sqrt(r.denom())?;
        Some(Scalar::Exact(BigRational::new(numer, denom)))
    }

    /// True when the two values differ by at most `tol` as `f64`.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        (self.to_f64() - other.to_f64()).abs() <= tol
    }

    /// Total order for canonical sorting. Exact pairs compare
    /// exactly; anything involving a float compares numerically.
    pub fn cmp_for_sort(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => self
                .to_f64()
                .partial_cmp(&other.to_f64())
                .unwrap_or(Ordering::Equal),
        }
    }
}

/// Square root of a nonnegative big integer, only if it is a perfect square.
fn exact_bigint_sqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a + b),
            _ => Scalar::Float(self.to_f64() + rhs.to_f64()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a - b),
            _ => Scalar::Float(self.to_f64() - rhs.to_f64()),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            _ => Scalar::Float(self.to_f64() * rhs.to_f64()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}
