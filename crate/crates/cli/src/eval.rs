//! Evaluation of parsed expressions on the exact or float scalar backend.

use std::fmt;

use bicx_core::involution::apply;
use bicx_core::{Bicomplex, Scalar};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::expr::{Expr, UnitSym};

/// Arithmetic backend selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Arbitrary-precision rationals.
    Exact,
    /// Double-precision floats.
    Float,
}

/// Representation the final value is printed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisplayForm {
    /// `x1 + xi1*i1 + xi2*i2 + xj1*j1`.
    Cartesian,
    /// `(ze1)*e1 + (ze2)*e2`.
    Idempotent,
    /// `(x1, xi1, xi2, xj1)`.
    Vector,
}

impl DisplayForm {
    /// Lowercase name for structured output.
    pub fn name(self) -> &'static str {
        match self {
            DisplayForm::Cartesian => "cartesian",
            DisplayForm::Idempotent => "idempotent",
            DisplayForm::Vector => "vector",
        }
    }
}

/// Failure while evaluating a well-formed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// `inv(..)` applied to zero or a zero divisor.
    NotInvertible,
    /// A float-mode result left the finite range.
    Overflow,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::NotInvertible => {
                write!(f, "not invertible: an idempotent component is zero")
            }
            EvalError::Overflow => write!(f, "overflow: float result is not finite"),
        }
    }
}

impl std::error::Error for EvalError {}

/// The display transform requested at the root of the tree, if any.
pub fn display_form(expr: &Expr) -> DisplayForm {
    match expr {
        Expr::Idem(_) => DisplayForm::Idempotent,
        Expr::Vec(_) => DisplayForm::Vector,
        _ => DisplayForm::Cartesian,
    }
}

/// Evaluate `expr`. In float mode every literal is a double and the
/// result is converted coordinate by coordinate, then screened for
/// non-finite values so overflow is reported rather than silent.
pub fn eval(expr: &Expr, mode: Mode) -> Result<Bicomplex, EvalError> {
    let value = walk(expr, mode)?;
    match mode {
        Mode::Exact => Ok(value),
        Mode::Float => {
            let value = value.to_float();
            if all_finite(&value) {
                Ok(value)
            } else {
                Err(EvalError::Overflow)
            }
        }
    }
}

fn literal(value: &BigRational, mode: Mode) -> Scalar {
    match mode {
        Mode::Exact => Scalar::from_big_ratio(value.numer().clone(), value.denom().clone()),
        Mode::Float => Scalar::from_f64(value.to_f64().unwrap_or(f64::NAN)),
    }
}

fn unit_value(unit: UnitSym) -> Bicomplex {
    match unit {
        UnitSym::I1 => Bicomplex::i1(),
        UnitSym::I2 => Bicomplex::i2(),
        UnitSym::J1 => Bicomplex::j1(),
        UnitSym::E1 => Bicomplex::e1(),
        UnitSym::E2 => Bicomplex::e2(),
    }
}

fn all_finite(value: &Bicomplex) -> bool {
    value.to_vec4().coords().iter().all(|s| match s {
        Scalar::Float(x) => x.is_finite(),
        Scalar::Exact(_) => true,
    })
}

fn walk(expr: &Expr, mode: Mode) -> Result<Bicomplex, EvalError> {
    Ok(match expr {
        Expr::Literal(value) => Bicomplex::from_real(literal(value, mode)),
        Expr::Unit(unit) => unit_value(*unit),
        Expr::Neg(inner) => -&walk(inner, mode)?,
        Expr::Add(a, b) => &walk(a, mode)? + &walk(b, mode)?,
        Expr::Sub(a, b) => &walk(a, mode)? - &walk(b, mode)?,
        Expr::Mul(a, b) => &walk(a, mode)? * &walk(b, mode)?,
        Expr::Pow(base, n) => walk(base, mode)?.pow(*n),
        Expr::Conj(tag, inner) => apply(*tag, &walk(inner, mode)?),
        Expr::Inv(inner) => walk(inner, mode)?
            .inverse_idempotent()
            .map_err(|_| EvalError::NotInvertible)?,
        // Display transforms do not change the value.
        Expr::Idem(inner) | Expr::Vec(inner) => walk(inner, mode)?,
    })
}
