//! Products of conjugates and the inverse formulas they yield.
//!
//! Multiplying `s` by its images under all members of a subgroup of
//! conjugations collapses the idempotent components into moduli:
//!
//! - `full` (all eight maps) gives `|ze1|^4 * |ze2|^4`, a real scalar;
//! - `sub123` (`{dag0, dag1, dag2, dag3}`) and `sub367`
//!   (`{dag0, dag3, pdag6, pdag7}`) give `|ze1|^2 * |ze2|^2`, also real;
//! - `sub345` (`{dag0, dag3, dag4, dag5}`) gives
//!   `|ze1|^4 * e1 + |ze2|^4 * e2`, which is hyperbolic rather than
//!   real whenever the two component moduli differ.
//!
//! In every case the product is invertible exactly when `s` is, and
//! dividing the product of the non-identity conjugates by it recovers
//! `1/s`. All moduli are squared moduli `z * conj(z)`, kept inside the
//! scalar ring; no square roots are taken.

use crate::bicomplex::{Bicomplex, IdempotentForm};
use crate::error::Error;
use crate::involution::{apply, ConjTag};

/// Which set of conjugations to multiply over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjugateProductKind {
    /// All eight maps.
    Full,
    /// The subgroup `{dag0, dag1, dag2, dag3}`.
    Sub123,
    /// The subgroup `{dag0, dag3, dag4, dag5}`.
    Sub345,
    /// The subgroup `{dag0, dag3, pdag6, pdag7}`.
    Sub367,
}

impl ConjugateProductKind {
    /// All four kinds.
    pub const ALL: [ConjugateProductKind; 4] = [
        ConjugateProductKind::Full,
        ConjugateProductKind::Sub123,
        ConjugateProductKind::Sub345,
        ConjugateProductKind::Sub367,
    ];

    /// The tags multiplied over, identity first.
    pub fn tags(self) -> &'static [ConjTag] {
        use ConjTag::*;
        match self {
            ConjugateProductKind::Full => &ConjTag::ALL,
            ConjugateProductKind::Sub123 => &[Dag0, Dag1, Dag2, Dag3],
            ConjugateProductKind::Sub345 => &[Dag0, Dag3, Dag4, Dag5],
            ConjugateProductKind::Sub367 => &[Dag0, Dag3, Pdag6, Pdag7],
        }
    }

    /// Serialized name.
    pub fn name(self) -> &'static str {
        match self {
            ConjugateProductKind::Full => "full",
            ConjugateProductKind::Sub123 => "sub123",
            ConjugateProductKind::Sub345 => "sub345",
            ConjugateProductKind::Sub367 => "sub367",
        }
    }

    /// Parse a serialized name (case-insensitive).
    pub fn from_name(name: &str) -> Option<ConjugateProductKind> {
        let lower = name.to_ascii_lowercase();
        ConjugateProductKind::ALL
            .into_iter()
            .find(|k| k.name() == lower)
    }
}

impl std::fmt::Display for ConjugateProductKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The product of `apply(tag, s)` over every tag in the kind.
pub fn conjugate_product(s: &Bicomplex, kind: ConjugateProductKind) -> Bicomplex {
    let mut product = Bicomplex::one();
    for &tag in kind.tags() {
        product = &product * &apply(tag, s);
    }
    product
}

/// True when the kind's conjugate product is invertible.
///
/// For every kind this is equivalent to `s` itself being invertible:
/// the product's idempotent components are powers of `|ze1|^2` and
/// `|ze2|^2`, which vanish exactly when the corresponding component of
/// `s` does. For the three kinds with real products it is also
/// equivalent to the product being nonzero; the `sub345` product can
/// be a nonzero zero divisor (for example `s = e1` reproduces itself),
/// which is why invertibility rather than nonzeroness is the test.
pub fn invertibility_condition(s: &Bicomplex, kind: ConjugateProductKind) -> bool {
    conjugate_product(s, kind).is_invertible()
}

/// Invert `s` as (product of non-identity conjugates) / (full product
/// of the kind).
///
/// The denominator is a real scalar for `full`, `sub123`, and
/// `sub367`, and division is multiplication by its rational
/// reciprocal. The `sub345` denominator is hyperbolic in general, so
/// that case divides componentwise in the idempotent representation.
/// Either way the result equals `1/s` and no bicomplex division
/// operator is involved.
pub fn inverse_via_conjugates(
    s: &Bicomplex,
    kind: ConjugateProductKind,
) -> Result<Bicomplex, Error> {
    let denominator = conjugate_product(s, kind);
    let mut numerator = Bicomplex::one();
    for &tag in kind.tags() {
        if tag != ConjTag::Dag0 {
            numerator = &numerator * &apply(tag, s);
        }
    }
    if let Some(r) = denominator.as_real_scalar() {
        Ok(numerator.scale(&r.recip()?))
    } else {
        let num = numerator.to_idempotent();
        let den = denominator.to_idempotent();
        let quotient = IdempotentForm::new(
            &num.ze1 * &den.ze1.recip()?,
            &num.ze2 * &den.ze2.recip()?,
        );
        Ok(Bicomplex::from_idempotent(&quotient))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::Vec4;
    use crate::complex::Complex;
    use crate::scalar::Scalar;

    fn bc(x1: i64, xi1: i64, xi2: i64, xj1: i64) -> Bicomplex {
        Bicomplex::from_vec4(&Vec4::from_ints(x1, xi1, xi2, xj1))
    }

    fn samples() -> Vec<Bicomplex> {
        vec![bc(1, -2, 3, 5), bc(2, 0, -1, 1), bc(0, 1, 1, -3), bc(7, 0, 0, 0)]
    }

    /// The product each kind should collapse to, built directly from
    /// the component moduli.
    fn expected_product(s: &Bicomplex, kind: ConjugateProductKind) -> Bicomplex {
        let f = s.to_idempotent();
        let n1 = f.ze1.norm_sqr();
        let n2 = f.ze2.norm_sqr();
        match kind {
            ConjugateProductKind::Full => {
                Bicomplex::from_real(&n1.pow(2) * &n2.pow(2))
            }
            ConjugateProductKind::Sub123 | ConjugateProductKind::Sub367 => {
                Bicomplex::from_real(&n1 * &n2)
            }
            ConjugateProductKind::Sub345 => {
                Bicomplex::from_idempotent(&IdempotentForm::new(
                    Complex::from_real(n1.pow(2)),
                    Complex::from_real(n2.pow(2)),
                ))
            }
        }
    }

    #[test]
    fn products_collapse_to_component_moduli()  {
        for s in samples() {
            for kind in ConjugateProductKind::ALL {
                assert_eq!(
                    conjugate_product(&s, kind),
                    expected_product(&s, kind),
                    "kind {kind} on {s}"
                );
            }
        }
    }

    #[test]
    fn product_examples() {
        assert_eq!(
            conjugate_product(&Bicomplex::i2(), ConjugateProductKind::Sub123),
            Bicomplex::one()
        );
        assert_eq!(
            conjugate_product(&Bicomplex::one(), ConjugateProductKind::Full),
            Bicomplex::one()
        );
        for kind in [
            ConjugateProductKind::Full,
            ConjugateProductKind::Sub123,
            ConjugateProductKind::Sub367,
        ] {
            assert_eq!(
                conjugate_product(&Bicomplex::e1(), kind),
                Bicomplex::zero(),
                "kind {kind}"
            );
        }
        // The sub345 product of a zero divisor is not annihilated: the
        // dag3/dag4/dag5 images of e1 are all e1 again.
        assert_eq!(
            conjugate_product(&Bicomplex::e1(), ConjugateProductKind::Sub345),
            Bicomplex::e1()
        );
    }

    #[test]
    fn sub345_product_is_hyperbolic_when_component_moduli_differ() {
        // s = e1 + 2*e2 has |ze1|^2 = 1 and |ze2|^2 = 4, so the sub345
        // product is e1 + 16*e2 = 17/2 - 15/2*j1, with a j1 part.
        let s = &Bicomplex::e1() + &Bicomplex::e2().scale(&Scalar::from_int(2));
        let product = conjugate_product(&s, ConjugateProductKind::Sub345);
        let expected = Bicomplex::from_vec4(&Vec4::new(
            Scalar::ratio(17, 2),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::ratio(-15, 2),
        ));
        assert_eq!(product, expected);
        assert_eq!(product.as_real_scalar(), None);
        // The other three kinds stay real on the same input.
        for kind in [
            ConjugateProductKind::Full,
            ConjugateProductKind::Sub123,
            ConjugateProductKind::Sub367,
        ] {
            assert!(conjugate_product(&s, kind).as_real_scalar().is_some());
        }
    }

    #[test]
    fn full_is_the_square_of_sub123() {
        for s in samples() {
            let full = conjugate_product(&s, ConjugateProductKind::Full);
            let sub = conjugate_product(&s, ConjugateProductKind::Sub123);
            assert_eq!(full, &sub * &sub);
            assert_eq!(sub, conjugate_product(&s, ConjugateProductKind::Sub367));
        }
    }

    #[test]
    fn invertibility_conditions_agree_with_the_idempotent_criterion() {
        let zero_divisors = vec![
            Bicomplex::e1(),
            Bicomplex::e2(),
            Bicomplex::e1().scale(&Scalar::ratio(-7, 3)),
            Bicomplex::e2().scale(&Scalar::from_int(5)),
        ];
        for s in samples().into_iter().chain(zero_divisors).chain([Bicomplex::zero()]) {
            for kind in ConjugateProductKind::ALL {
                assert_eq!(
                    invertibility_condition(&s, kind),
                    s.is_invertible(),
                    "kind {kind} on {s}"
                );
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            inverse_via_conjugates(&Bicomplex::i2(), ConjugateProductKind::Sub123).unwrap(),
            -&Bicomplex::i2()
        );
        for kind in ConjugateProductKind::ALL {
            assert_eq!(
                inverse_via_conjugates(&Bicomplex::from_int(2), kind).unwrap(),
                Bicomplex::from_real(Scalar::ratio(1, 2)),
                "kind {kind}"
            );
            assert_eq!(
                inverse_via_conjugates(&Bicomplex::e1(), kind),
                Err(Error::NonInvertible),
                "kind {kind}"
            );
        }
        assert_eq!(
            inverse_via_conjugates(&Bicomplex::zero(), ConjugateProductKind::Full),
            Err(Error::NonInvertible)
        );
    }

    #[test]
    fn all_inverse_routes_match_the_idempotent_inverse() {
        for s in samples() {
            if !s.is_invertible() {
                continue;
            }
            let reference = s.inverse_idempotent().unwrap();
            for kind in ConjugateProductKind::ALL {
                let inv = inverse_via_conjugates(&s, kind).unwrap();
                assert_eq!(inv, reference, "kind {kind} on {s}");
                assert_eq!(&s * &inv, Bicomplex::one(), "kind {kind} on {s}");
            }
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in ConjugateProductKind::ALL {
            assert_eq!(ConjugateProductKind::from_name(kind.name()), Some(kind));
        }
        assert_eq!(
            ConjugateProductKind::from_name("SUB123"),
            Some(ConjugateProductKind::Sub123)
        );
        assert_eq!(ConjugateProductKind::from_name("sub999"), None);
    }

    #[test]
    fn kind_tag_sets_are_subgroups() {
        let table = crate::group::cayley_table().unwrap();
        let lattice = crate::group::subgroups(&table);
        for kind in ConjugateProductKind::ALL {
            let mut tags = kind.tags().to_vec();
            tags.sort();
            assert!(lattice.contains(&tags), "kind {kind} is not a subgroup");
        }
    }
}
