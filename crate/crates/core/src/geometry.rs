//! Reflections of `R^4` realizing the conjugations.
//!
//! Viewing a bicomplex number through its real coordinates
//! `(x1, xi1, xi2, xj1)`, every conjugation is a composition of
//! hyperplane reflections: the three coordinate reflections `R(i1)`,
//! `R(i2)`, `R(j1)` negate one imaginary coordinate each, and the two
//! diagonal hyperplanes with normals `a4 = (0, 1, 1, 0)` and
//! `a5 = (0, 1, -1, 0)` swap the `i1` and `i2` coordinates with and
//! without a sign change. [`factorization_check`] verifies the full
//! list of factorizations as exact matrix identities.
//!
//! The general reflection about the hyperplane with normal `a` is
//! `v - 2 (v.a)/(a.a) a`. The factor 2 is what makes the map an
//! involution that fixes the hyperplane pointwise; dropping it gives a
//! projection onto the hyperplane instead, which reproduces neither
//! the coordinate reflections nor the stated images of `a4` and `a5`.

use std::fmt;

use crate::bicomplex::Vec4;
use crate::error::Error;
use crate::involution::{as_matrix, ConjTag};
use crate::mat4::Mat4;
use crate::scalar::Scalar;

/// One of the three reflection axes named by an imaginary unit.
///
/// `Axis::I1` reflects about the hyperplane `xi1 = 0`, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Negate the `i1` coordinate.
    I1,
    /// Negate the `i2` coordinate.
    I2,
    /// Negate the `j1` coordinate.
    J1,
}

impl Axis {
    /// All three axes.
    pub const ALL: [Axis; 3] = [Axis::I1, Axis::I2, Axis::J1];

    /// Serialized name.
    pub fn name(self) -> &'static str {
        match self {
            Axis::I1 => "i1",
            Axis::I2 => "i2",
            Axis::J1 => "j1",
        }
    }

    /// Parse a serialized name (case-insensitive).
    pub fn from_name(name: &str) -> Option<Axis> {
        let lower = name.to_ascii_lowercase();
        Axis::ALL.into_iter().find(|a| a.name() == lower)
    }

    /// Index of the coordinate the axis negates.
    pub fn coord_index(self) -> usize {
        match self {
            Axis::I1 => 1,
            Axis::I2 => 2,
            Axis::J1 => 3,
        }
    }

    /// The coordinate basis vector normal to the fixed hyperplane.
    pub fn basis_normal(self) -> Vec4 {
        let mut coords = [0i64; 4];
        coords[self.coord_index()] = 1;
        Vec4::from_ints(coords[0], coords[1], coords[2], coords[3])
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A hyperplane through the origin, `{ v : v . normal = 0 }`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hyperplane {
    normal: Vec4,
}

impl Hyperplane {
    /// Build from a normal vector.
    ///
    /// Rejects normals whose self dot product is zero; for exact
    /// scalars that means the zero vector, and for floats it also
    /// covers vectors so small the squared norm underflows.
    pub fn new(normal: Vec4) -> Result<Hyperplane, Error> {
        if normal.is_zero() || normal.dot(&normal).is_zero() {
            return Err(Error::ZeroNormal);
        }
        Ok(Hyperplane { normal })
    }

    /// The defining normal vector.
    pub fn normal(&self) -> &Vec4 {
        &self.normal
    }
}

/// The diagonal normal `a4 = (0, 1, 1, 0)`; reflecting about its
/// hyperplane sends `(x1, xi1, xi2, xj1)` to `(x1, -xi2, -xi1, xj1)`.
pub fn normal_a4() -> Vec4 {
    Vec4::from_ints(0, 1, 1, 0)
}

/// The diagonal normal `a5 = (0, 1, -1, 0)`; reflecting about its
/// hyperplane sends `(x1, xi1, xi2, xj1)` to `(x1, xi2, xi1, xj1)`.
pub fn normal_a5() -> Vec4 {
    Vec4::from_ints(0, 1, -1, 0)
}

/// Reflect about the axis hyperplane: negate one coordinate.
pub fn reflect_axis(axis: Axis, v: &Vec4) -> Vec4 {
    let mut out = v.clone();
    match axis {
        Axis::I1 => out.xi1 = -&out.xi1,
        Axis::I2 => out.xi2 = -&out.xi2,
        Axis::J1 => out.xj1 = -&out.xj1,
    }
    out
}

/// Reflect about an arbitrary hyperplane: `v - 2 (v.a)/(a.a) a`.
pub fn reflect_hyperplane(h: &Hyperplane, v: &Vec4) -> Vec4 {
    let a = h.normal();
    let coefficient = (&Scalar::from_int(2) * &v.dot(a))
        .div(&a.dot(a))
        .expect("constructor rejects normals with zero squared norm");
    v.sub(&a.scale(&coefficient))
}

/// Matrix of the axis reflection.
pub fn axis_matrix(axis: Axis) -> Mat4 {
    let mut rows = [[0i64; 4]; 4];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = if i == axis.coord_index() { -1 } else { 1 };
    }
    Mat4::from_ints(rows)
}

/// Matrix of the hyperplane reflection, column by column.
pub fn hyperplane_matrix(h: &Hyperplane) -> Mat4 {
    let mut rows = std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()));
    let out: &mut [[Scalar; 4]; 4] = &mut rows;
    for col in 0..4 {
        let mut basis = [0i64; 4];
        basis[col] = 1;
        let image = reflect_hyperplane(
            h,
            &Vec4::from_ints(basis[0], basis[1], basis[2], basis[3]),
        );
        for (row, coord) in image.coords().into_iter().enumerate() {
            out[row][col] = coord.clone();
        }
    }
    Mat4::new(rows)
}

/// One factor in a reflection factorization.
#[derive(Clone, Debug)]
pub enum Reflection {
    /// A coordinate-axis reflection.
    Axis(Axis),
    /// A reflection about the hyperplane with the given normal.
    Plane(Vec4),
}

impl Reflection {
    /// The factor's matrix.
    pub fn matrix(&self) -> Mat4 {
        match self {
            Reflection::Axis(axis) => axis_matrix(*axis),
            Reflection::Plane(normal) => {
                let h = Hyperplane::new(normal.clone())
                    .expect("factorization normals are nonzero");
                hyperplane_matrix(&h)
            }
        }
    }

    /// Short display name, `R(i1)` for axes and `R(a4)`, `R(a5)`, or
    /// `R((a, b, c, d))` for mirrors given by a normal vector.
    pub fn label(&self) -> String {
        match self {
            Reflection::Axis(axis) => format!("R({axis})"),
            Reflection::Plane(normal) => {
                if *normal == normal_a4() {
                    "R(a4)".to_string()
                } else if *normal == normal_a5() {
                    "R(a5)".to_string()
                } else {
                    format!("R({normal})")
                }
            }
        }
    }
}

/// The factorizations of the non-identity conjugations into
/// reflections, rightmost factor applied first. `pdag6` and `pdag7`
/// each have two.
pub fn reflection_factorizations() -> Vec<(ConjTag, Vec<Reflection>)> {
    use Reflection::{Axis as Ax, Plane};
    vec![
        (ConjTag::Dag1, vec![Ax(Axis::I2), Ax(Axis::J1)]),
        (ConjTag::Dag2, vec![Ax(Axis::I1), Ax(Axis::J1)]),
        (ConjTag::Dag3, vec![Ax(Axis::I1), Ax(Axis::I2)]),
        (ConjTag::Dag4, vec![Plane(normal_a4())]),
        (ConjTag::Dag5, vec![Plane(normal_a5())]),
        (ConjTag::Pdag6, vec![Ax(Axis::I1), Ax(Axis::J1), Plane(normal_a5())]),
        (ConjTag::Pdag6, vec![Ax(Axis::I2), Ax(Axis::J1), Plane(normal_a4())]),
        (ConjTag::Pdag7, vec![Ax(Axis::I1), Ax(Axis::J1), Plane(normal_a4())]),
        (ConjTag::Pdag7, vec![Ax(Axis::I2), Ax(Axis::J1), Plane(normal_a5())]),
    ]
}

/// Outcome of verifying one factorization identity.
#[derive(Clone, Debug)]
pub struct FactorizationResult {
    /// The conjugation being factored.
    pub tag: ConjTag,
    /// Rendering like `dag1 = R(i2)*R(j1)`.
    pub label: String,
    /// Whether the matrix identity holds exactly.
    pub passed: bool,
}

/// Outcome of [`factorization_check`].
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    /// One entry per stated identity, in the listing order.
    pub results: Vec<FactorizationResult>,
}

impl FactorizationReport {
    /// True when every identity holds.
    pub fn all_ok(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

/// Verify every stated factorization as an exact matrix identity.
pub fn factorization_check() -> FactorizationReport {
    let results = reflection_factorizations()
        .into_iter()
        .map(|(tag, factors)| {
            let mut product = Mat4::identity();
            for factor in &factors {
                product = product.mul(&factor.matrix());
            }
            let labels: Vec<String> = factors.iter().map(Reflection::label).collect();
            FactorizationResult {
                tag,
                label: format!("{tag} = {}", labels.join("*")),
                passed: product == as_matrix(tag),
            }
        })
        .collect();
    FactorizationReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x1: i64, xi1: i64, xi2: i64, xj1: i64) -> Vec4 {
        Vec4::from_ints(x1, xi1, xi2, xj1)
    }

    #[test]
    fn axis_reflections_negate_one_coordinate() {
        assert_eq!(reflect_axis(Axis::J1, &v(1, 2, 3, 4)), v(1, 2, 3, -4));
        assert_eq!(reflect_axis(Axis::I2, &v(0, 0, 1, 0)), v(0, 0, -1, 0));
        let sample = v(5, -1, 2, 7);
        assert_eq!(
            reflect_axis(Axis::I1, &reflect_axis(Axis::I1, &sample)),
            sample
        );
    }

    #[test]
    fn diagonal_hyperplane_examples() {
        let a4 = Hyperplane::new(normal_a4()).unwrap();
        let a5 = Hyperplane::new(normal_a5()).unwrap();
        assert_eq!(reflect_hyperplane(&a4, &v(1, 2, 3, 4)), v(1, -3, -2, 4));
        assert_eq!(reflect_hyperplane(&a5, &v(1, 2, 3, 4)), v(1, 3, 2, 4));
    }

    #[test]
    fn hyperplane_fixed_points_and_normal_negation() {
        let a4 = Hyperplane::new(normal_a4()).unwrap();
        // (5, 1, -1, 2) . a4 = 0, so the reflection fixes it.
        let on_plane = v(5, 1, -1, 2);
        assert_eq!(reflect_hyperplane(&a4, &on_plane), on_plane);
        assert_eq!(
            reflect_hyperplane(&a4, &normal_a4()),
            v(0, -1, -1, 0)
        );
    }

    #[test]
    fn hyperplane_reflections_are_involutions() {
        let normals = [v(1, 2, 3, 4), v(0, 1, 1, 0), v(2, -1, 0, 5), v(1, 0, 0, 0)];
        let sample = v(3, -2, 7, 1);
        for normal in normals {
            let h = Hyperplane::new(normal).unwrap();
            let twice = reflect_hyperplane(&h, &reflect_hyperplane(&h, &sample));
            assert_eq!(twice, sample, "normal {}", h.normal());
        }
    }

    #[test]
    fn zero_normals_are_rejected() {
        assert_eq!(Hyperplane::new(Vec4::zero()), Err(Error::ZeroNormal));
        let underflow = Vec4::new(
            Scalar::from_f64(1e-200),
            Scalar::from_f64(0.0),
            Scalar::from_f64(0.0),
            Scalar::from_f64(0.0),
        );
        assert_eq!(Hyperplane::new(underflow), Err(Error::ZeroNormal));
    }

    #[test]
    fn axis_reflection_is_the_basis_normal_hyperplane_reflection() {
        let sample = v(3, -2, 7, 1);
        for axis in Axis::ALL {
            let h = Hyperplane::new(axis.basis_normal()).unwrap();
            assert_eq!(
                reflect_axis(axis, &sample),
                reflect_hyperplane(&h, &sample),
                "axis {axis}"
            );
            assert_eq!(axis_matrix(axis), hyperplane_matrix(&h));
        }
    }

    #[test]
    fn reflection_matrices_have_determinant_minus_one() {
        for axis in Axis::ALL {
            assert_eq!(axis_matrix(axis).det(), Scalar::from_int(-1));
        }
        for normal in [normal_a4(), normal_a5(), v(1, 2, 3, 4)] {
            let h = Hyperplane::new(normal).unwrap();
            assert_eq!(hyperplane_matrix(&h).det(), Scalar::from_int(-1));
        }
    }

    #[test]
    fn all_stated_factorizations_hold() {
        let report = factorization_check();
        assert_eq!(report.results.len(), 9);
        for result in &report.results {
            assert!(result.passed, "failed identity: {}", result.label);
        }
        assert!(report.all_ok());
    }

    #[test]
    fn conjugation_determinants_count_reflection_factors() {
        for (tag, factors) in reflection_factorizations() {
            let expected = if factors.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                as_matrix(tag).det(),
                Scalar::from_int(expected),
                "tag {tag}"
            );
        }
    }

    #[test]
    fn both_pseudoconjugate_factorizations_agree() {
        for tag in [ConjTag::Pdag6, ConjTag::Pdag7] {
            let matrices: Vec<Mat4> = reflection_factorizations()
                .into_iter()
                .filter(|(t, _)| *t == tag)
                .map(|(_, factors)| {
                    factors
                        .iter()
                        .fold(Mat4::identity(), |acc, f| acc.mul(&f.matrix()))
                })
                .collect();
            assert_eq!(matrices.len(), 2);
            assert_eq!(matrices[0], matrices[1], "tag {tag}");
        }
    }

    #[test]
    fn float_mode_reflection_stays_within_tolerance() {
        let normal = Vec4::new(
            Scalar::from_f64(1.0),
            Scalar::from_f64(2.0),
            Scalar::from_f64(3.0),
            Scalar::from_f64(4.0),
        );
        let h = Hyperplane::new(normal).unwrap();
        let sample = Vec4::new(
            Scalar::from_f64(0.5),
            Scalar::from_f64(-1.25),
            Scalar::from_f64(2.0),
            Scalar::from_f64(7.5),
        );
        let twice = reflect_hyperplane(&h, &reflect_hyperplane(&h, &sample));
        assert!(twice.approx_eq(&sample, 1e-12));
    }
}
