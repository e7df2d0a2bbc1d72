//! Exact 4x4 matrices acting on [`Vec4`] coordinates.
//!
//! Every conjugation and every reflection in this crate is a linear
//! map of the real coordinates `(x1, xi1, xi2, xj1)`, and all of them
//! happen to be signed permutation matrices. Having them as concrete
//! matrices lets composition identities be checked as exact equalities.

use std::fmt;

use crate::bicomplex::Vec4;
use crate::scalar::Scalar;

/// A 4x4 matrix of scalars, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat4 {
    /// Rows, each acting on `(x1, xi1, xi2, xj1)`.
    pub rows: [[Scalar; 4]; 4],
}

impl Mat4 {
    /// Build from rows.
    pub fn new(rows: [[Scalar; 4]; 4]) -> Self {
        Mat4 { rows }
    }

    /// Build from integer rows.
    pub fn from_ints(rows: [[i64; 4]; 4]) -> Self {
        Mat4::new(rows.map(|row| row.map(Scalar::from_int)))
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        Mat4::from_ints([
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ])
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &Mat4) -> Mat4 {
        let mut rows = std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()));
        let out: &mut [[Scalar; 4]; 4] = &mut rows;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = Scalar::zero();
                for k in 0..4 {
                    acc = &acc + &(&self.rows[i][k] * &rhs.rows[k][j]);
                }
                *cell = acc;
            }
        }
        Mat4::new(rows)
    }

    /// Nonnegative matrix power.
    pub fn pow(&self, n: u32) -> Mat4 {
        let mut acc = Mat4::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Apply to a coordinate vector.
    pub fn apply(&self, v: &Vec4) -> Vec4 {
        let coords = v.coords();
        let component = |row: &[Scalar; 4]| {
            let mut acc = Scalar::zero();
            for (entry, coord) in row.iter().zip(coords) {
                acc = &acc + &(entry * coord);
            }
            acc
        };
        Vec4::new(
            component(&self.rows[0]),
            component(&self.rows[1]),
            component(&self.rows[2]),
            component(&self.rows[3]),
        )
    }

    /// Determinant by cofactor expansion, exact.
    pub fn det(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for j in 0..4 {
            if self.rows[0][j].is_zero() {
                continue;
            }
            let minor = self.minor3(0, j);
            let term = &self.rows[0][j] * &det3(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// True when every row and every column contains exactly one
    /// nonzero entry and that entry is `1` or `-1`.
    pub fn is_signed_permutation(&self) -> bool {
        let mut column_hits = [0usize; 4];
        for row in &self.rows {
            let mut row_hits = 0;
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                if !entry.abs().is_one() {
                    return false;
                }
                row_hits += 1;
                column_hits[j] += 1;
            }
            if row_hits != 1 {
                return false;
            }
        }
        column_hits.iter().all(|&hits| hits == 1)
    }

    fn minor3(&self, skip_row: usize, skip_col: usize) -> [[Scalar; 3]; 3] {
        let mut minor = std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()));
        let out: &mut [[Scalar; 3]; 3] = &mut minor;
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip_row).collect();
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip_col).collect();
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out[i][j] = self.rows[r][c].clone();
            }
        }
        minor
    }
}

fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    let det2 = |a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar| &(a * d) - &(b * c);
    let t0 = &m[0][0] * &det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let t1 = &m[0][1] * &det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let t2 = &m[0][2] * &det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    &(&t0 - &t1) + &t2
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_acts_trivially() {
        let v = Vec4::from_ints(1, -2, 3, 4);
        assert_eq!(Mat4::identity().apply(&v), v);
        assert_eq!(Mat4::identity().det(), Scalar::from_int(1));
    }

    #[test]
    fn multiplication_applies_right_factor_first() {
        // One matrix swaps the first two coordinates, the other negates
        // the first; composing in the two orders differs.
        let swap = Mat4::from_ints([
            [0, 1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ]);
        let negate = Mat4::from_ints([
            [-1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ]);
        let v = Vec4::from_ints(1, 2, 0, 0);
        let swap_then_negate = negate.mul(&swap);
        assert_eq!(swap_then_negate.apply(&v), Vec4::from_ints(-2, 1, 0, 0));
        let negate_then_swap = swap.mul(&negate);
        assert_eq!(negate_then_swap.apply(&v), Vec4::from_ints(2, -1, 0, 0));
    }

    #[test]
    fn determinant_of_a_generic_matrix() {
        let m = Mat4::from_ints([
            [2, 0, 1, 3],
            [1, 1, 0, -1],
            [0, 2, 1, 0],
            [1, 0, 0, 1],
        ]);
        // Computed by row reduction by hand.
        assert_eq!(m.det(), Scalar::from_int(3));
    }

    #[test]
    fn signed_permutation_detection() {
        let perm = Mat4::from_ints([
            [1, 0, 0, 0],
            [0, 0, -1, 0],
            [0, -1, 0, 0],
            [0, 0, 0, 1],
        ]);
        assert!(perm.is_signed_permutation());
        assert_eq!(perm.det(), Scalar::from_int(-1));

        let not_perm = Mat4::from_ints([
            [1, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
        ]);
        assert!(!not_perm.is_signed_permutation());
        assert!(!Mat4::from_ints([[2, 0, 0, 0]; 4]).is_signed_permutation());
    }

    #[test]
    fn pow_iterates_multiplication() {
        let rot = Mat4::from_ints([
            [0, -1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ]);
        assert_eq!(rot.pow(4), Mat4::identity());
        assert_ne!(rot.pow(2), Mat4::identity());
    }
}
