//! Bicomplex numbers and their three interchangeable representations.
//!
//! A value `s` can be viewed as:
//!
//! - Cartesian: `z1 + z2*i2` with `z1, z2` complex over `i1` ([`Bicomplex`]);
//! - real coordinates: `x1 + xi1*i1 + xi2*i2 + xj1*j1` ([`Vec4`]);
//! - idempotent: `ze1*e1 + ze2*e2` with `e1 = (1 + j1)/2`,
//!   `e2 = (1 - j1)/2` ([`IdempotentForm`]).
//!
//! The idempotent view is the workhorse: multiplication acts
//! componentwise there, so invertibility, inverses, and square roots
//! all reduce to the complex case. An element is a zero divisor
//! exactly when one (and only one) idempotent component vanishes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::complex::{format_terms, Complex};
use crate::error::Error;
use crate::scalar::Scalar;

/// A bicomplex number `z1 + z2*i2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bicomplex {
    /// Component along `1`.
    pub z1: Complex,
    /// Component along `i2`.
    pub z2: Complex,
}

/// Real-coordinate view `(x1, xi1, xi2, xj1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Vec4 {
    /// Coefficient of `1`.
    pub x1: Scalar,
    /// Coefficient of `i1`.
    pub xi1: Scalar,
    /// Coefficient of `i2`.
    pub xi2: Scalar,
    /// Coefficient of `j1`.
    pub xj1: Scalar,
}

/// Idempotent view `ze1*e1 + ze2*e2`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentForm {
    /// Component along `e1 = (1 + j1)/2`.
    pub ze1: Complex,
    /// Component along `e2 = (1 - j1)/2`.
    pub ze2: Complex,
}

impl Bicomplex {
    /// Build from Cartesian components.
    pub fn new(z1: Complex, z2: Complex) -> Self {
        Bicomplex { z1, z2 }
    }

    /// The zero element.
    pub fn zero() -> Self {
        Bicomplex::new(Complex::zero(), Complex::zero())
    }

    /// The unit element.
    pub fn one() -> Self {
        Bicomplex::new(Complex::one(), Complex::zero())
    }

    /// The first imaginary unit.
    pub fn i1() -> Self {
        Bicomplex::new(Complex::i(), Complex::zero())
    }

    /// The second imaginary unit.
    pub fn i2() -> Self {
        Bicomplex::new(Complex::zero(), Complex::one())
    }

    /// The hyperbolic unit `j1 = i1*i2`, squaring to `+1`.
    pub fn j1() -> Self {
        Bicomplex::new(Complex::zero(), Complex::i())
    }

    /// The idempotent `e1 = (1 + j1)/2`.
    pub fn e1() -> Self {
        Bicomplex::new(
            Complex::from_real(Scalar::ratio(1, 2)),
            Complex::new(Scalar::zero(), Scalar::ratio(1, 2)),
        )
    }

    /// The idempotent `e2 = (1 - j1)/2`.
    pub fn e2() -> Self {
        Bicomplex::new(
            Complex::from_real(Scalar::ratio(1, 2)),
            Complex::new(Scalar::zero(), Scalar::ratio(-1, 2)),
        )
    }

    /// Embed a scalar.
    pub fn from_real(x: Scalar) -> Self {
        Bicomplex::new(Complex::from_real(x), Complex::zero())
    }

    /// Embed an integer.
    pub fn from_int(n: i64) -> Self {
        Bicomplex::from_real(Scalar::from_int(n))
    }

    /// True when all four coordinates are zero.
    pub fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z2.is_zero()
    }

    /// True when all four coordinates use the exact backend.
    pub fn is_exact(&self) -> bool {
        self.z1.is_exact() && self.z2.is_exact()
    }

    /// Multiply all four coordinates by a scalar.
    pub fn scale(&self, k: &Scalar) -> Bicomplex {
        Bicomplex::new(self.z1.scale(k), self.z2.scale(k))
    }

    /// Nonnegative integer power by repeated multiplication.
    pub fn pow(&self, n: u32) -> Bicomplex {
        let mut acc = Bicomplex::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Convert every coordinate to the float backend.
    pub fn to_float(&self) -> Bicomplex {
        let f = |s: &Scalar| Scalar::from_f64(s.to_f64());
        Bicomplex::new(
            Complex::new(f(&self.z1.re), f(&self.z1.im)),
            Complex::new(f(&self.z2.re), f(&self.z2.im)),
        )
    }

    /// Split along the idempotents: `ze1 = z1 - z2*i1`, `ze2 = z1 + z2*i1`.
    pub fn to_idempotent(&self) -> IdempotentForm {
        let z2_i1 = &self.z2 * &Complex::i();
        IdempotentForm::new(&self.z1 - &z2_i1, &self.z1 + &z2_i1)
    }

    /// Reassemble from idempotent components:
    /// `z1 = (ze1 + ze2)/2`, `z2 = (ze1 - ze2)*i1/2`.
    pub fn from_idempotent(f: &IdempotentForm) -> Bicomplex {
        let half = Scalar::ratio(1, 2);
        let z1 = (&f.ze1 + &f.ze2).scale(&half);
        let z2 = (&(&f.ze1 - &f.ze2) * &Complex::i()).scale(&half);
        Bicomplex::new(z1, z2)
    }

    /// Read off the four real coordinates.
    pub fn to_vec4(&self) -> Vec4 {
        Vec4 {
            x1: self.z1.re.clone(),
            xi1: self.z1.im.clone(),
            xi2: self.z2.re.clone(),
            xj1: self.z2.im.clone(),
        }
    }

    /// Rebuild from real coordinates.
    pub fn from_vec4(v: &Vec4) -> Bicomplex {
        Bicomplex::new(
            Complex::new(v.x1.clone(), v.xi1.clone()),
            Complex::new(v.xi2.clone(), v.xj1.clone()),
        )
    }

    /// The scalar value, when the `i1`, `i2`, `j1` coordinates all vanish.
    pub fn as_real_scalar(&self) -> Option<Scalar> {
        if self.z1.im.is_zero() && self.z2.is_zero() {
            Some(self.z1.re.clone())
        } else {
            None
        }
    }

    /// True when neither idempotent component is zero.
    ///
    /// Equivalently: `s` is neither zero nor a zero divisor.
    pub fn is_invertible(&self) -> bool {
        let f = self.to_idempotent();
        !f.ze1.is_zero() && !f.ze2.is_zero()
    }

    /// Inverse computed componentwise in the idempotent representation.
    pub fn inverse_idempotent(&self) -> Result<Bicomplex, Error> {
        let f = self.to_idempotent();
        let inv = IdempotentForm::new(f.ze1.recip()?, f.ze2.recip()?);
        Ok(Bicomplex::from_idempotent(&inv))
    }

    /// All square roots, exactly.
    ///
    /// Each idempotent component contributes its complex square roots
    /// (a zero component contributes the single root zero), and every
    /// sign combination is reassembled. The result is sorted in
    /// descending coordinate order, so for `-1` it reads
    /// `[i1, i2, -i2, -i1]` and for `1` it reads `[1, j1, -j1, -1]`.
    pub fn square_roots(&self) -> Result<Vec<Bicomplex>, Error> {
        let f = self.to_idempotent();
        let roots1 = f.ze1.sqrt_exact()?;
        let roots2 = f.ze2.sqrt_exact()?;
        let mut roots = Vec::with_capacity(roots1.len() * roots2.len());
        for r1 in &roots1 {
            for r2 in &roots2 {
                let form = IdempotentForm::new(r1.clone(), r2.clone());
                roots.push(Bicomplex::from_idempotent(&form));
            }
        }
        roots.sort_by(|s, t| t.to_vec4().lex_cmp(&s.to_vec4()));
        Ok(roots)
    }
}

impl Add for &Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: &Bicomplex) -> Bicomplex {
        Bicomplex::new(&self.z1 + &rhs.z1, &self.z2 + &rhs.z2)
    }
}

impl Sub for &Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: &Bicomplex) -> Bicomplex {
        Bicomplex::new(&self.z1 - &rhs.z1, &self.z2 - &rhs.z2)
    }
}

impl Mul for &Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: &Bicomplex) -> Bicomplex {
        Bicomplex::new(
            &(&self.z1 * &rhs.z1) - &(&self.z2 * &rhs.z2),
            &(&self.z1 * &rhs.z2) + &(&self.z2 * &rhs.z1),
        )
    }
}

impl Neg for &Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-&self.z1, -&self.z2)
    }
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: Bicomplex) -> Bicomplex {
        &self + &rhs
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: Bicomplex) -> Bicomplex {
        &self - &rhs
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        &self * &rhs
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        -&self
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_vec4();
        write!(
            f,
            "{}",
            format_terms(&[
                (&v.x1, ""),
                (&v.xi1, "i1"),
                (&v.xi2, "i2"),
                (&v.xj1, "j1"),
            ])
        )
    }
}

impl Vec4 {
    /// Build from coordinates.
    pub fn new(x1: Scalar, xi1: Scalar, xi2: Scalar, xj1: Scalar) -> Self {
        Vec4 { x1, xi1, xi2, xj1 }
    }

    /// Build from integers.
    pub fn from_ints(x1: i64, xi1: i64, xi2: i64, xj1: i64) -> Self {
        Vec4::new(
            Scalar::from_int(x1),
            Scalar::from_int(xi1),
            Scalar::from_int(xi2),
            Scalar::from_int(xj1),
        )
    }

    /// The zero vector.
    pub fn zero() -> Self {
        Vec4::from_ints(0, 0, 0, 0)
    }

    /// True when all coordinates are zero.
    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    /// Coordinates in the fixed order `(x1, xi1, xi2, xj1)`.
    pub fn coords(&self) -> [&Scalar; 4] {
        [&self.x1, &self.xi1, &self.xi2, &self.xj1]
    }

    /// Euclidean dot product.
    pub fn dot(&self, other: &Vec4) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, b) in self.coords().iter().zip(other.coords()) {
            acc = &acc + &(*a * b);
        }
        acc
    }

    /// Multiply every coordinate by a scalar.
    pub fn scale(&self, k: &Scalar) -> Vec4 {
        Vec4::new(&self.x1 * k, &self.xi1 * k, &self.xi2 * k, &self.xj1 * k)
    }

    /// Coordinatewise difference.
    pub fn sub(&self, other: &Vec4) -> Vec4 {
        Vec4::new(
            &self.x1 - &other.x1,
            &self.xi1 - &other.xi1,
            &self.xi2 - &other.xi2,
            &self.xj1 - &other.xj1,
        )
    }

    /// True when all coordinates agree within `tol` as `f64`.
    pub fn approx_eq(&self, other: &Vec4, tol: f64) -> bool {
        self.coords()
            .iter()
            .zip(other.coords())
            .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Lexicographic coordinate order, for canonical sorting.
    pub fn lex_cmp(&self, other: &Vec4) -> Ordering {
        for (a, b) in self.coords().iter().zip(other.coords()) {
            let ord = a.cmp_for_sort(b);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Vec4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x1, self.xi1, self.xi2, self.xj1)
    }
}

impl IdempotentForm {
    /// Build from components.
    pub fn new(ze1: Complex, ze2: Complex) -> Self {
        IdempotentForm { ze1, ze2 }
    }

    /// Reassemble the bicomplex value.
    pub fn to_bicomplex(&self) -> Bicomplex {
        Bicomplex::from_idempotent(self)
    }

    /// Componentwise product, the shape multiplication takes here.
    pub fn mul(&self, other: &IdempotentForm) -> IdempotentForm {
        IdempotentForm::new(&self.ze1 * &other.ze1, &self.ze2 * &other.ze2)
    }
}

impl fmt::Display for IdempotentForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*e1 + ({})*e2", self.ze1, self.ze2)
    }
}
