//! Exact arithmetic for bicomplex numbers and their conjugation group.
//!
//! A bicomplex number is `z1 + z2*i2` where `z1` and `z2` are complex
//! numbers over a first imaginary unit `i1`, and `i2` is a second,
//! independent imaginary unit. The product `j1 = i1*i2` squares to `+1`,
//! so the ring contains real, complex, and split-complex (hyperbolic)
//! subrings. Multiplication is commutative but the ring has zero
//! divisors: the idempotents `e1 = (1 + j1)/2` and `e2 = (1 - j1)/2`
//! satisfy `e1*e2 = 0`, and splitting along them turns multiplication
//! into two independent complex multiplications.
//!
//! The crate models the eight ring homomorphisms of the bicomplex
//! numbers that fix the reals and permute the imaginary units: six are
//! involutions (applying one twice gives the identity) and two have
//! order four. Under composition they form a group isomorphic to the
//! dihedral group of order eight. On top of that sit the conjugate
//! products used to express inverses, and the realization of every
//! conjugation as a composition of hyperplane reflections of real
//! four-dimensional space.
//!
//! # Layout
//!
//! - [`scalar`], [`complex`], [`bicomplex`]: the number tower. Scalars
//!   are arbitrary-precision rationals by default, with an opt-in `f64`
//!   backend that propagates through any operation touching it.
//! - [`mat4`]: small exact 4x4 matrices acting on coordinate vectors.
//! - [`involution`]: the eight conjugations, in Cartesian, idempotent,
//!   and matrix form, plus the enumeration showing there are no others.
//! - [`group`]: composition tables, group-axiom checking, subgroup
//!   enumeration, and the explicit isomorphism onto the dihedral group.
//! - [`invert`]: products of conjugates and the inverse formulas they
//!   yield.
//! - [`geometry`]: hyperplane reflections of `R^4` and the
//!   factorization of each conjugation into reflections.
//! - [`verify`]: a registry of named checks that re-derive every table
//!   and identity from scratch, for the command-line `verify` front end.
//!
//! All claims the crate verifies are checked in exact rational
//! arithmetic; no tolerance is involved unless the float backend is
//! explicitly selected.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod bicomplex;
pub mod complex;
pub mod error;
pub mod geometry;
pub mod group;
pub mod invert;
pub mod involution;
pub mod mat4;
pub mod scalar;
pub mod verify;

pub use bicomplex::{Bicomplex, IdempotentForm, Vec4};
pub use complex::Complex;
pub use error::Error;
pub use geometry::Hyperplane;
pub use group::{CayleyTable, D8Element, D8Table};
pub use invert::ConjugateProductKind;
pub use involution::{BasisUnit, ConjTag, UnitAssignment};
pub use mat4::Mat4;
pub use scalar::Scalar;
