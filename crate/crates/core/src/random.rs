//! Haar-distributed random unitaries (enabled by the `rand` feature).

use alloc::vec::Vec;

use rand::Rng;

use crate::numkit::{ComplexMatrix, C64};
#[allow(unused_imports)]
use num_traits::Float;

fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // Box-Muller; 1 − u keeps the logarithm finite.
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * core::f64::consts::PI * u2).cos()
}

/// Samples from the Haar measure on `U(n)`: QR of a complex Ginibre matrix
/// with the diagonal of `R` made positive.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<C64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| C64::new(standard_normal(rng), standard_normal(rng)))
                .collect()
        })
        .collect();
    for j in 0..n {
        let (done, rest) = cols.split_at_mut(j);
        let v = &mut rest[0];
        for _ in 0..2 {
            for q in done.iter() {
                let coeff: C64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= coeff * y;
                }
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
    }
    ComplexMatrix::from_fn(n, |r, c| cols[c][r])
}
