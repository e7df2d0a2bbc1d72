//! Complex numbers over the first imaginary unit `i1`.
//!
//! These appear in two roles: as the Cartesian components `z1`, `z2` of
//! a bicomplex number `z1 + z2*i2`, and as the idempotent components
//! `ze1`, `ze2` after splitting along `e1`, `e2`. Both live in the same
//! ring `C(i1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::scalar::Scalar;

/// A complex number `re + im*i1` with [`Scalar`] coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    /// Real part.
    pub re: Scalar,
    /// Coefficient of `i1`.
    pub im: Scalar,
}

impl Complex {
    /// Build from parts.
    pub fn new(re: Scalar, im: Scalar) -> Self {
        Complex { re, im }
    }

    /// The zero element.
    pub fn zero() -> Self {
        Complex::new(Scalar::zero(), Scalar::zero())
    }

    /// The unit element.
    pub fn one() -> Self {
        Complex::new(Scalar::one(), Scalar::zero())
    }

    /// The imaginary unit `i1`.
    pub fn i() -> Self {
        Complex::new(Scalar::zero(), Scalar::one())
    }

    /// Embed a scalar as `re + 0*i1`.
    pub fn from_real(re: Scalar) -> Self {
        Complex::new(re, Scalar::zero())
    }

    /// True when both parts are zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True when both parts use the exact backend.
    pub fn is_exact(&self) -> bool {
        self.re.is_exact() && self.im.is_exact()
    }

    /// Complex conjugate `re - im*i1`.
    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    /// Squared modulus `re^2 + im^2`, a nonnegative scalar.
    pub fn norm_sqr(&self) -> Scalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiply both parts by a scalar.
    pub fn scale(&self, k: &Scalar) -> Complex {
        Complex::new(&self.re * k, &self.im * k)
    }

    /// Multiplicative inverse `conj / norm_sqr`.
    pub fn recip(&self) -> Result<Complex, Error> {
        if self.is_zero() {
            return Err(Error::NonInvertible);
        }
        let inv_norm = self.norm_sqr().recip()?;
        Ok(self.conj().scale(&inv_norm))
    }

    /// Both square roots, exactly, when they exist in `Q(i1)`.
    ///
    /// The principal root (positive real part, or positive imaginary
    /// part on the imaginary axis) comes first; zero has the single
    /// root zero. Fails with [`Error::NotRepresentable`] when a needed
    /// scalar square root is irrational, and for float-backed inputs,
    /// which carry no exactness to certify a root with.
    pub fn sqrt_exact(&self) -> Result<Vec<Complex>, Error> {
        if !self.is_exact() {
            return Err(Error::NotRepresentable(
                "exact square roots require exact-rational input".into(),
            ));
        }
        if self.is_zero() {
            return Ok(vec![Complex::zero()]);
        }
        if self.im.is_zero() {
            let root = rational_sqrt(&self.re.abs())?;
            let principal = if self.re.is_negative() {
                Complex::new(Scalar::zero(), root)
            } else {
                Complex::from_real(root)
            };
            let negated = -&principal;
            return Ok(vec![principal, negated]);
        }
        // General case: for re + im*i1 with im != 0, solve x^2 - y^2 = re,
        // 2xy = im. With r the modulus, x = sqrt((re + r)/2) is nonzero
        // and y = im/(2x).
        let modulus = rational_sqrt(&self.norm_sqr())?;
        let x = rational_sqrt(&(&self.re + &modulus).div(&Scalar::from_int(2))?)?;
        let y = self.im.div(&(&Scalar::from_int(2) * &x))?;
        let principal = Complex::new(x, y);
        let negated = -&principal;
        Ok(vec![principal, negated])
    }
}

/// Exact square root of a nonnegative scalar, or [`Error::NotRepresentable`].
fn rational_sqrt(value: &Scalar) -> Result<Scalar, Error> {
    value.sqrt_exact().ok_or_else(|| {
        Error::NotRepresentable(format!("square root of {value} is irrational"))
    })
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        &self + &rhs
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        &self - &rhs
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        &self * &rhs
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            format_terms(&[(&self.re, ""), (&self.im, "i1")])
        )
    }
}

/// Render a sum of `coefficient * unit` terms, suppressing zero terms
/// and unit coefficients, with `0` for the empty sum. The empty unit
/// name marks the real term.
pub(crate) fn format_terms(terms: &[(&Scalar, &str)]) -> String {
    let mut out = String::new();
    for (coeff, unit) in terms {
        if coeff.is_zero() {
            continue;
        }
        if out.is_empty() {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = coeff.abs();
        if unit.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(unit);
        } else {
            out.push_str(&format!("{magnitude}*{unit}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> Complex {
        Complex::new(Scalar::from_int(re), Scalar::from_int(im))
    }

    #[test]
    fn i_squares_to_minus_one() {
        assert_eq!(&Complex::i() * &Complex::i(), c(-1, 0));
    }

    #[test]
    fn product_formula() {
        assert_eq!(&c(1, 2) * &c(3, -1), c(5, 5));
    }

    #[test]
    fn conjugation_is_an_involution_and_gives_the_norm() {
        let z = c(3, -4);
        assert_eq!(z.conj().conj(), z);
        assert_eq!(&z * &z.conj(), c(25, 0));
        assert_eq!(z.norm_sqr(), Scalar::from_int(25));
    }

    #[test]
    fn recip_inverts() {
        let z = Complex::new(Scalar::ratio(1, 2), Scalar::from_int(-3));
        assert_eq!(&z * &z.recip().unwrap(), Complex::one());
        assert_eq!(Complex::zero().recip(), Err(Error::NonInvertible));
    }

    #[test]
    fn sqrt_of_real_values() {
        assert_eq!(
            c(9, 0).sqrt_exact().unwrap(),
            vec![c(3, 0), c(-3, 0)]
        );
        assert_eq!(
            c(-1, 0).sqrt_exact().unwrap(),
            vec![c(0, 1), c(0, -1)]
        );
        assert_eq!(c(0, 0).sqrt_exact().unwrap(), vec![c(0, 0)]);
    }

    #[test]
    fn sqrt_of_general_values() {
        // (2 + i1)^2 = 3 + 4 i1
        assert_eq!(
            c(3, 4).sqrt_exact().unwrap(),
            vec![c(2, 1), c(-2, -1)]
        );
        // (1 - i1)^2 = -2 i1; principal root has positive real part
        assert_eq!(
            c(0, -2).sqrt_exact().unwrap(),
            vec![c(1, -1), c(-1, 1)]
        );
    }

    #[test]
    fn sqrt_rejects_irrational_roots() {
        assert!(matches!(
            c(2, 0).sqrt_exact(),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(
            c(1, 1).sqrt_exact(),
            Err(Error::NotRepresentable(_))
        ));
        let float_input = Complex::new(Scalar::from_f64(4.0), Scalar::from_f64(0.0));
        assert!(matches!(
            float_input.sqrt_exact(),
            Err(Error::NotRepresentable(_))
        ));
    }

    #[test]
    fn display_suppresses_zero_terms() {
        assert_eq!(c(0, 0).to_string(), "0");
        assert_eq!(c(3, 0).to_string(), "3");
        assert_eq!(c(0, 1).to_string(), "i1");
        assert_eq!(c(0, -1).to_string(), "-i1");
        assert_eq!(c(3, -2).to_string(), "3 - 2*i1");
        assert_eq!(
            Complex::new(Scalar::ratio(-1, 2), Scalar::ratio(3, 4)).to_string(),
            "-1/2 + 3/4*i1"
        );
    }
}
