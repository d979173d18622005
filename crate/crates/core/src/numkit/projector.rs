//! Projectors onto computational basis states and the exponential identity
//! for sums of orthogonal projectors.

use alloc::vec::Vec;

use super::bitstring::BitString;
use super::gates::projector;
use super::matrix::{tensor_all, ComplexMatrix, C64};
use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// `P_va = P_{a_{n−1}} ⊗ … ⊗ P_{a_0}`: diagonal with a single 1 at `d(va)`.
pub fn build_projector(va: BitString) -> ComplexMatrix {
    let factors: Vec<ComplexMatrix> = (0..va.nbits()).rev().map(|p| projector(va.bit(p))).collect();
    tensor_all(&factors)
}

const ORTHOGONALITY_TOL: f64 = 1e-10;

/// `exp(Σ α_i P_i)` for mutually orthogonal projectors, computed as
/// `Σ exp(α_i) P_i + (1 − Σ P_i)`.
pub fn exp_projector_sum(projectors: &[ComplexMatrix], alphas: &[C64]) -> Result<ComplexMatrix> {
    if projectors.len() != alphas.len() {
        return Err(Error::LengthMismatch {
            projectors: projectors.len(),
            alphas: alphas.len(),
        });
    }
    let Some(first) = projectors.first() else {
        return Err(Error::EmptyDirectSum);
    };
    let dim = first.dim();
    let mut worst: f64 = 0.0;
    for (i, pi) in projectors.iter().enumerate() {
        if pi.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: pi.dim(),
            });
        }
        for (j, pj) in projectors.iter().enumerate() {
            let prod = pi * pj;
            let expected = if i == j { pj.clone() } else { ComplexMatrix::zeros(dim) };
            worst = worst.max(prod.max_abs_diff(&expected));
        }
    }
    if worst > ORTHOGONALITY_TOL {
        return Err(Error::NonOrthogonalProjectors(worst));
    }

    let mut out = ComplexMatrix::identity(dim);
    for (p, &alpha) in projectors.iter().zip(alphas) {
        let coeff = alpha.exp() - C64::new(1.0, 0.0);
        out = &out + &p.scale(coeff);
    }
    Ok(out)
}
