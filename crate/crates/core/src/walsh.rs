//! Sylvester-Hadamard matrices and the angle transforms between physical
//! angles `φ` and emission angles `θ` (`φ = H θ`, `θ = H φ / 2^r`).

use alloc::vec::Vec;
use core::ops::Index;

use crate::numkit::{BitString, ComplexMatrix, C64};
use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// `2^order` angles in radians, indexed by bit strings in increasing `d(·)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleVector {
    order: usize,
    values: Vec<f64>,
}

impl AngleVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::BadAngleLength(n));
        }
        Ok(AngleVector {
            order: n.trailing_zeros() as usize,
            values,
        })
    }

    pub fn zeros(order: usize) -> Self {
        AngleVector {
            order,
            values: alloc::vec![0.0; 1 << order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, index: BitString) -> f64 {
        self.values[index.decimal()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (BitString, f64)> + '_ {
        BitString::all(self.order).zip(self.values.iter().copied())
    }
}

impl Index<usize> for AngleVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

/// `H_r` with entries `(−1)^{va·vb}`.
pub fn hadamard_matrix(order: usize) -> Result<ComplexMatrix> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok(ComplexMatrix::from_fn(1 << order, |r, c| {
        if (r & c).count_ones() % 2 == 0 {
            C64::new(1.0, 0.0)
        } else {
            C64::new(-1.0, 0.0)
        }
    }))
}

/// `H_r·v` by in-place butterflies over strides 1, 2, …, 2^{r−1}.
pub fn fast_transform(v: &AngleVector) -> AngleVector {
    let mut out = v.values.clone();
    let n = out.len();
    let mut stride = 1;
    while stride < n {
        for block in out.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a, b) in lo.iter_mut().zip(hi) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        stride *= 2;
    }
    AngleVector {
        order: v.order,
        values: out,
    }
}

pub fn phi_to_theta(phi: &AngleVector) -> AngleVector {
    let mut t = fast_transform(phi);
    let scale = 1.0 / t.values.len() as f64;
    t.values.iter_mut().for_each(|x| *x *= scale);
    t
}

pub fn theta_to_phi(theta: &AngleVector) -> AngleVector {
    fast_transform(theta)
}
