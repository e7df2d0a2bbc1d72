//! The eight conjugations of the bicomplex numbers.
//!
//! A conjugation here is a real-linear ring homomorphism that fixes
//! the reals. Six of them are involutions (self-inverse) and two have
//! order four; the crate tags them `dag0`..`dag5`, `pdag6`, `pdag7`.
//! Because such a map is determined by where it sends `i1` and `i2`,
//! each tag exists in three equivalent presentations, all implemented
//! independently so they can be checked against each other:
//!
//! - [`apply`]: closed Cartesian formulas on `z1 + z2*i2`;
//! - [`apply_idempotent`]: the componentwise action on `(ze1, ze2)`,
//!   where each map either swaps the components, conjugates them, or
//!   both;
//! - [`as_matrix`]: the induced signed permutation of the real
//!   coordinates `(x1, xi1, xi2, xj1)`.
//!
//! [`enumerate_unit_homomorphisms`] re-derives the classification from
//! scratch: it tries all 64 ways of sending `i1` and `i2` to signed
//! basis units and keeps the assignments that extend to an invertible
//! multiplicative map. Exactly the eight tagged maps survive.

use std::fmt;

use crate::bicomplex::{Bicomplex, IdempotentForm};
use crate::complex::Complex;
use crate::mat4::Mat4;

/// Tag of one of the eight conjugation maps.
///
/// `Dag0` is the identity. `Dag1`..`Dag5` are the remaining
/// involutions. `Pdag6` and `Pdag7` are the pseudoconjugates of order
/// four.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConjTag {
    /// Identity map.
    Dag0,
    /// `z1 - z2*i2` (negates `i2`).
    Dag1,
    /// `conj(z1) + conj(z2)*i2` (negates `i1`).
    Dag2,
    /// `conj(z1) - conj(z2)*i2` (negates both imaginary units).
    Dag3,
    /// Swaps `i1` and `i2` with a sign: `i1 -> -i2`, `i2 -> -i1`.
    Dag4,
    /// Swaps `i1` and `i2`: `i1 -> i2`, `i2 -> i1`.
    Dag5,
    /// Order-four map `i1 -> i2 -> -i1`.
    Pdag6,
    /// Order-four map `i1 -> -i2 -> -i1`, inverse of `Pdag6`.
    Pdag7,
}

impl ConjTag {
    /// All eight tags in canonical order.
    pub const ALL: [ConjTag; 8] = [
        ConjTag::Dag0,
        ConjTag::Dag1,
        ConjTag::Dag2,
        ConjTag::Dag3,
        ConjTag::Dag4,
        ConjTag::Dag5,
        ConjTag::Pdag6,
        ConjTag::Pdag7,
    ];

    /// Position in [`ConjTag::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    /// Inverse of [`ConjTag::index`]. Panics outside `0..8`.
    pub fn from_index(index: usize) -> ConjTag {
        ConjTag::ALL[index]
    }

    /// Serialized name: `"dag0"`..`"dag5"`, `"pdag6"`, `"pdag7"`.
    pub fn name(self) -> &'static str {
        match self {
            ConjTag::Dag0 => "dag0",
            ConjTag::Dag1 => "dag1",
            ConjTag::Dag2 => "dag2",
            ConjTag::Dag3 => "dag3",
            ConjTag::Dag4 => "dag4",
            ConjTag::Dag5 => "dag5",
            ConjTag::Pdag6 => "pdag6",
            ConjTag::Pdag7 => "pdag7",
        }
    }

    /// Parse a serialized name (case-insensitive).
    pub fn from_name(name: &str) -> Option<ConjTag> {
        let lower = name.to_ascii_lowercase();
        ConjTag::ALL.into_iter().find(|t| t.name() == lower)
    }

    /// True for the two order-four maps.
    pub fn is_pseudo(self) -> bool {
        matches!(self, ConjTag::Pdag6 | ConjTag::Pdag7)
    }
}

impl fmt::Display for ConjTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Apply the tagged conjugation using its Cartesian formula.
pub fn apply(tag: ConjTag, s: &Bicomplex) -> Bicomplex {
    let z1 = &s.z1;
    let z2 = &s.z2;
    match tag {
        ConjTag::Dag0 => s.clone(),
        ConjTag::Dag1 => Bicomplex::new(z1.clone(), -z2),
        ConjTag::Dag2 => Bicomplex::new(z1.conj(), z2.conj()),
        ConjTag::Dag3 => Bicomplex::new(z1.conj(), -&z2.conj()),
        // Re(z1) - Re(z2) i1 + (-Im(z1) + Im(z2) i1) i2
        ConjTag::Dag4 => Bicomplex::new(
            Complex::new(z1.re.clone(), -&z2.re),
            Complex::new(-&z1.im, z2.im.clone()),
        ),
        // Re(z1) + Re(z2) i1 + (Im(z1) + Im(z2) i1) i2
        ConjTag::Dag5 => Bicomplex::new(
            Complex::new(z1.re.clone(), z2.re.clone()),
            Complex::new(z1.im.clone(), z2.im.clone()),
        ),
        // Re(z1) - Re(z2) i1 + Im(z1) i2 - Im(z2) j1
        ConjTag::Pdag6 => Bicomplex::new(
            Complex::new(z1.re.clone(), -&z2.re),
            Complex::new(z1.im.clone(), -&z2.im),
        ),
        // Re(z1) + Re(z2) i1 - Im(z1) i2 - Im(z2) j1
        ConjTag::Pdag7 => Bicomplex::new(
            Complex::new(z1.re.clone(), z2.re.clone()),
            Complex::new(-&z1.im, -&z2.im),
        ),
    }
}

/// Apply the tagged conjugation to the idempotent components.
///
/// Each map acts by optionally swapping `(ze1, ze2)` and optionally
/// conjugating one or both components.
pub fn apply_idempotent(tag: ConjTag, f: &IdempotentForm) -> IdempotentForm {
    let a = &f.ze1;
    let b = &f.ze2;
    let (ze1, ze2) = match tag {
        ConjTag::Dag0 => (a.clone(), b.clone()),
        ConjTag::Dag1 => (b.clone(), a.clone()),
        ConjTag::Dag2 => (b.conj(), a.conj()),
        ConjTag::Dag3 => (a.conj(), b.conj()),
        ConjTag::Dag4 => (a.clone(), b.conj()),
        ConjTag::Dag5 => (a.conj(), b.clone()),
        ConjTag::Pdag6 => (b.conj(), a.clone()),
        ConjTag::Pdag7 => (b.clone(), a.conj()),
    };
    IdempotentForm::new(ze1, ze2)
}

/// The signed permutation matrix of the tagged map on `(x1, xi1, xi2, xj1)`.
pub fn as_matrix(tag: ConjTag) -> Mat4 {
    let rows = match tag {
        ConjTag::Dag0 => [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        ConjTag::Dag1 => [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
        ConjTag::Dag2 => [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
        ConjTag::Dag3 => [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
        ConjTag::Dag4 => [[1, 0, 0, 0], [0, 0, -1, 0], [0, -1, 0, 0], [0, 0, 0, 1]],
        ConjTag::Dag5 => [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
        ConjTag::Pdag6 => [[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, -1]],
        ConjTag::Pdag7 => [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, -1]],
    };
    Mat4::from_ints(rows)
}

/// One of `1`, `i1`, `i2`, `j1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitBase {
    /// The real unit.
    One,
    /// First imaginary unit.
    I1,
    /// Second imaginary unit.
    I2,
    /// Hyperbolic unit `i1*i2`.
    J1,
}

impl UnitBase {
    /// All four bases, in coordinate order.
    pub const ALL: [UnitBase; 4] = [UnitBase::One, UnitBase::I1, UnitBase::I2, UnitBase::J1];

    /// Coordinate index in `(x1, xi1, xi2, xj1)`.
    pub fn coord_index(self) -> usize {
        self as usize
    }

    /// Product of two bases, with the sign it picks up.
    ///
    /// The defining relations are `i1^2 = i2^2 = -1` and `j1 = i1*i2`,
    /// from which `j1^2 = +1`, `i1*j1 = -i2`, `i2*j1 = -i1`.
    pub fn mul(self, other: UnitBase) -> (UnitBase, bool) {
        use UnitBase::*;
        match (self, other) {
            (One, x) | (x, One) => (x, false),
            (I1, I1) | (I2, I2) => (One, true),
            (J1, J1) => (One, false),
            (I1, I2) | (I2, I1) => (J1, false),
            (I1, J1) | (J1, I1) => (I2, true),
            (I2, J1) | (J1, I2) => (I1, true),
        }
    }
}

/// A signed basis unit: one of `{+1, -1, +i1, -i1, +i2, -i2, +j1, -j1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisUnit {
    /// Which basis element.
    pub base: UnitBase,
    /// True for the negated unit.
    pub negative: bool,
}

impl BasisUnit {
    /// All eight signed units.
    pub const ALL: [BasisUnit; 8] = [
        BasisUnit::plus(UnitBase::One),
        BasisUnit::minus(UnitBase::One),
        BasisUnit::plus(UnitBase::I1),
        BasisUnit::minus(UnitBase::I1),
        BasisUnit::plus(UnitBase::I2),
        BasisUnit::minus(UnitBase::I2),
        BasisUnit::plus(UnitBase::J1),
        BasisUnit::minus(UnitBase::J1),
    ];

    /// Positive unit.
    pub const fn plus(base: UnitBase) -> BasisUnit {
        BasisUnit { base, negative: false }
    }

    /// Negated unit.
    pub const fn minus(base: UnitBase) -> BasisUnit {
        BasisUnit { base, negative: true }
    }

    /// Product of signed units.
    pub fn mul(self, other: BasisUnit) -> BasisUnit {
        let (base, flips_sign) = self.base.mul(other.base);
        BasisUnit {
            base,
            negative: self.negative ^ other.negative ^ flips_sign,
        }
    }

    /// Negation.
    pub fn neg(self) -> BasisUnit {
        BasisUnit {
            base: self.base,
            negative: !self.negative,
        }
    }

    /// The unit as a bicomplex value.
    pub fn as_bicomplex(&self) -> Bicomplex {
        let positive = match self.base {
            UnitBase::One => Bicomplex::one(),
            UnitBase::I1 => Bicomplex::i1(),
            UnitBase::I2 => Bicomplex::i2(),
            UnitBase::J1 => Bicomplex::j1(),
        };
        if self.negative {
            -&positive
        } else {
            positive
        }
    }
}

impl fmt::Display for BasisUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(match self.base {
            UnitBase::One => "1",
            UnitBase::I1 => "i1",
            UnitBase::I2 => "i2",
            UnitBase::J1 => "j1",
        })
    }
}

/// Where a candidate map sends the two imaginary units.
///
/// Extending with `f(1) = 1` and `f(j1) = f(i1)*f(i2)` determines a
/// real-linear candidate on the whole basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnitAssignment {
    /// Image of `i1`.
    pub f_i1: BasisUnit,
    /// Image of `i2`.
    pub f_i2: BasisUnit,
}

impl UnitAssignment {
    /// The identity assignment.
    pub fn identity() -> UnitAssignment {
        UnitAssignment {
            f_i1: BasisUnit::plus(UnitBase::I1),
            f_i2: BasisUnit::plus(UnitBase::I2),
        }
    }

    /// Image of `j1`, forced by multiplicativity.
    pub fn f_j1(&self) -> BasisUnit {
        self.f_i1.mul(self.f_i2)
    }

    /// Image of an arbitrary signed unit under the linear extension.
    pub fn apply_unit(&self, u: BasisUnit) -> BasisUnit {
        let image = match u.base {
            UnitBase::One => BasisUnit::plus(UnitBase::One),
            UnitBase::I1 => self.f_i1,
            UnitBase::I2 => self.f_i2,
            UnitBase::J1 => self.f_j1(),
        };
        if u.negative {
            image.neg()
        } else {
            image
        }
    }

    /// True when `f(u*v) = f(u)*f(v)` for all 16 basis pairs.
    pub fn is_multiplicative(&self) -> bool {
        UnitBase::ALL.into_iter().all(|u| {
            UnitBase::ALL.into_iter().all(|v| {
                let (product, flips_sign) = u.mul(v);
                let lhs = self.apply_unit(BasisUnit {
                    base: product,
                    negative: flips_sign,
                });
                let rhs = self
                    .apply_unit(BasisUnit::plus(u))
                    .mul(self.apply_unit(BasisUnit::plus(v)));
                lhs == rhs
            })
        })
    }

    /// Matrix of the linear extension on `(x1, xi1, xi2, xj1)`:
    /// column `k` holds the coordinates of the image of basis unit `k`.
    pub fn to_matrix(&self) -> Mat4 {
        let mut rows = [[0i64; 4]; 4];
        for (col, base) in UnitBase::ALL.into_iter().enumerate() {
            let image = self.apply_unit(BasisUnit::plus(base));
            rows[image.base.coord_index()][col] = if image.negative { -1 } else { 1 };
        }
        Mat4::from_ints(rows)
    }

    /// True when the linear extension is a bijection.
    pub fn is_invertible(&self) -> bool {
        !self.to_matrix().det().is_zero()
    }

    /// Composition `self` after `other`.
    pub fn compose(&self, other: &UnitAssignment) -> UnitAssignment {
        UnitAssignment {
            f_i1: self.apply_unit(other.f_i1),
            f_i2: self.apply_unit(other.f_i2),
        }
    }

    /// Least `k >= 1` with the `k`-fold self-composition the identity.
    pub fn order(&self) -> u32 {
        let mut power = *self;
        for k in 1..=8 {
            if power == UnitAssignment::identity() {
                return k;
            }
            power = self.compose(&power);
        }
        unreachable!("every valid assignment has order dividing 8")
    }

    /// The tag acting identically on the units, if any.
    pub fn identify(&self) -> Option<ConjTag> {
        ConjTag::ALL.into_iter().find(|&t| unit_action(t) == *self)
    }
}

impl fmt::Display for UnitAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i1 -> {}, i2 -> {}", self.f_i1, self.f_i2)
    }
}

/// The tagged map's action on the imaginary units.
pub fn unit_action(tag: ConjTag) -> UnitAssignment {
    use UnitBase::{I1, I2};
    let (f_i1, f_i2) = match tag {
        ConjTag::Dag0 => (BasisUnit::plus(I1), BasisUnit::plus(I2)),
        ConjTag::Dag1 => (BasisUnit::plus(I1), BasisUnit::minus(I2)),
        ConjTag::Dag2 => (BasisUnit::minus(I1), BasisUnit::plus(I2)),
        ConjTag::Dag3 => (BasisUnit::minus(I1), BasisUnit::minus(I2)),
        ConjTag::Dag4 => (BasisUnit::minus(I2), BasisUnit::minus(I1)),
        ConjTag::Dag5 => (BasisUnit::plus(I2), BasisUnit::plus(I1)),
        ConjTag::Pdag6 => (BasisUnit::plus(I2), BasisUnit::minus(I1)),
        ConjTag::Pdag7 => (BasisUnit::minus(I2), BasisUnit::plus(I1)),
    };
    UnitAssignment { f_i1, f_i2 }
}

/// Brute-force search for all unit assignments that extend to ring
/// homomorphisms fixing the reals.
///
/// Tries all 64 pairs of signed basis units as `(f(i1), f(i2))` and
/// keeps a candidate only if its linear extension is multiplicative on
/// every basis product and invertible. Both filters matter: sending
/// `i1` to `1` or `j1` breaks `f(i1)^2 = -1`, while the collapsing
/// assignment `(i1, -i1)` is multiplicative but not a bijection.
/// Exactly eight candidates survive, one per [`ConjTag`].
pub fn enumerate_unit_homomorphisms() -> Vec<UnitAssignment> {
    let mut found = Vec::new();
    for f_i1 in BasisUnit::ALL {
        for f_i2 in BasisUnit::ALL {
            let candidate = UnitAssignment { f_i1, f_i2 };
            if candidate.is_multiplicative() && candidate.is_invertible() {
                found.push(candidate);
            }
        }
    }
    found
}

/// Least `k >= 1` with the `k`-fold composition of the map the identity.
pub fn order(tag: ConjTag) -> u32 {
    unit_action(tag).order()
}

/// All tags whose order divides `n`, i.e. the maps `f` with `f^n = id`.
pub fn classify_n_involutions(n: u32) -> Vec<ConjTag> {
    ConjTag::ALL
        .into_iter()
        .filter(|&t| n % order(t) == 0)
        .collect()
}
