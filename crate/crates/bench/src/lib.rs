//! Deterministic input builders shared by the benchmarks.

use bicx_core::{Bicomplex, Scalar, Vec4};

/// Deterministic stream of rational bicomplex numbers with small
/// numerators and denominators, no randomness involved.
pub fn sample_values(count: usize) -> Vec<Bicomplex> {
    (0..count as i64)
        .map(|k| {
            Bicomplex::from_vec4(&Vec4::new(
                Scalar::ratio(k % 17 - 8, k % 5 + 1),
                Scalar::ratio(3 * k % 13 - 6, k % 7 + 1),
                Scalar::ratio(5 * k % 11 - 5, k % 3 + 1),
                Scalar::ratio(7 * k % 19 - 9, k % 9 + 1),
            ))
        })
        .collect()
}

/// The invertible prefix of [`sample_values`], `count` entries long.
pub fn invertible_samples(count: usize) -> Vec<Bicomplex> {
    sample_values(count * 4)
        .into_iter()
        .filter(Bicomplex::is_invertible)
        .take(count)
        .collect()
}
