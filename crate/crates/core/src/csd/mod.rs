//! Cosine-sine decomposition of an even-dimensional unitary:
//!
//! ```text
//! U = [L0  0 ] [ C  S] [R0  0 ]
//!     [0   L1] [−S  C] [0   R1]
//! ```
//!
//! with `C = diag(cos φ_i)`, `S = diag(sin φ_i)` and `φ_i ∈ [0, π/2]` sorted so
//! that the cosines are non-increasing.
//!
//! `L0, C, R0` start from an SVD of the top-left block. Cosines close to 1
//! (sines close to 0) are poorly resolved by that SVD, so the right basis of
//! the `cos ≥ 1/√2` half is re-diagonalized against `U10`, and symmetrically
//! the `cos < 1/√2` half against `U00` in the complement of the first half's
//! left vectors. Each angle is thus read from the block where it is large.
//! Rows of `R1` follow from `L1†U11 = C·R1` or `L0†U01 = S·R1`.

pub mod svd;

use alloc::vec::Vec;

use core::f64::consts::FRAC_1_SQRT_2;

use crate::numkit::{direct_sum, frobenius_distance, ComplexMatrix, C64, ZERO};
use crate::{Error, Result};
use svd::{jacobi_svd, orthonormalize, COMPLETION_TOL};
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Debug, Clone)]
pub struct CsdFactors {
    pub l0: ComplexMatrix,
    pub l1: ComplexMatrix,
    pub r0: ComplexMatrix,
    pub r1: ComplexMatrix,
    /// Angles in radians, `cos` non-increasing.
    pub phi: Vec<f64>,
}

impl CsdFactors {
    pub fn half(&self) -> usize {
        self.phi.len()
    }

    pub fn cosines(&self) -> Vec<f64> {
        self.phi.iter().map(|p| p.cos()).collect()
    }

    pub fn sines(&self) -> Vec<f64> {
        self.phi.iter().map(|p| p.sin()).collect()
    }

    /// The D matrix `[[C, S], [−S, C]]`.
    pub fn d_matrix(&self) -> ComplexMatrix {
        d_matrix(&self.phi)
    }

    pub fn left(&self) -> ComplexMatrix {
        direct_sum(&[self.l0.clone(), self.l1.clone()]).expect("two blocks")
    }

    pub fn right(&self) -> ComplexMatrix {
        direct_sum(&[self.r0.clone(), self.r1.clone()]).expect("two blocks")
    }

    /// `(L0 ⊕ L1)·D·(R0 ⊕ R1)`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        &(&self.left() * &self.d_matrix()) * &self.right()
    }
}

/// Builds `[[C, S], [−S, C]]` from the angles.
pub fn d_matrix(phi: &[f64]) -> ComplexMatrix {
    let h = phi.len();
    let mut d = ComplexMatrix::zeros(2 * h);
    for (i, &p) in phi.iter().enumerate() {
        let (s, c) = (C64::new(p.sin(), 0.0), C64::new(p.cos(), 0.0));
        d[(i, i)] = c;
        d[(h + i, h + i)] = c;
        d[(i, h + i)] = s;
        d[(h + i, i)] = -s;
    }
    d
}

/// Decomposes `u`, failing when it is not unitary within `tol·N` or when the
/// factors do not reproduce it within `tol·N`.
pub fn cs_decompose(u: &ComplexMatrix, tol: f64) -> Result<CsdFactors> {
    let n = u.dim();
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    u.check_unitary(tol)?;
    let f = cs_decompose_unchecked(u);
    let residual = frobenius_distance(u, &f.reconstruct())?;
    let bound = tol * n as f64;
    if residual > bound {
        return Err(Error::Residual { residual, bound });
    }
    Ok(f)
}

pub(crate) fn cs_decompose_unchecked(u: &ComplexMatrix) -> CsdFactors {
    let h = u.dim() / 2;
    let u00 = u.block(0, 0, h);
    let u01 = u.block(0, h, h);
    let u10 = u.block(h, 0, h);
    let u11 = u.block(h, h, h);

    let svd = jacobi_svd(&u00);
    // J = indices with cos ≥ 1/√2 (sorted first), K = the rest.
    let p = svd.sigma.iter().take_while(|&&s| s >= FRAC_1_SQRT_2).count();
    let v_cols: Vec<Vec<C64>> = (0..h).map(|i| svd.v.column(i)).collect();
    let (mut v_j, mut v_k) = (v_cols[..p].to_vec(), v_cols[p..].to_vec());

    // Small sines of J: re-diagonalize U10 on span(V_J), in the complement of
    // the well-conditioned span(U10·V_K).
    let t_k: Vec<Vec<C64>> = v_k.iter().map(|v| u10.mul_vec(v)).collect();
    let b_j = complement(&orthonormal_of(&t_k), h);
    let t_j: Vec<Vec<C64>> = v_j.iter().map(|v| u10.mul_vec(v)).collect();
    let (y, sin_j, z) = small_svd(&b_j, &t_j);
    v_j = rotate_basis(&v_j, &z);
    let l1_j: Vec<Vec<C64>> = rotate_basis(&b_j, &y)
        .into_iter()
        .zip(&sin_j)
        .map(|(col, &s)| if s > 0.0 { neg(&col) } else { col })
        .collect();
    let a_j: Vec<Vec<C64>> = v_j.iter().map(|v| u00.mul_vec(v)).collect();
    let cos_j: Vec<f64> = a_j.iter().map(|a| vec_norm(a)).collect();
    let l0_j = orthonormal_of(&a_j);

    // Small cosines of K: the same on U00, in the complement of span(L0_J).
    let b_k = complement(&l0_j, h);
    let a_k: Vec<Vec<C64>> = v_k.iter().map(|v| u00.mul_vec(v)).collect();
    let (y, cos_k, z) = small_svd(&b_k, &a_k);
    v_k = rotate_basis(&v_k, &z);
    let l0_k = rotate_basis(&b_k, &y);
    let t_k: Vec<Vec<C64>> = v_k.iter().map(|v| neg(&u10.mul_vec(v))).collect();
    let sin_k: Vec<f64> = t_k.iter().map(|t| vec_norm(t)).collect();
    let mut seeds = l1_j;
    seeds.extend(t_k);
    let order: Vec<usize> = (0..h).collect();
    let l1_cols: Vec<Vec<C64>> = orthonormalize(&seeds, &order, h, COMPLETION_TOL)
        .into_iter()
        .map(|(q, _)| q)
        .collect();

    let l0 = from_columns(&[l0_j, l0_k].concat());
    let l1 = from_columns(&l1_cols);
    let r0 = from_columns(&[v_j, v_k].concat()).adjoint();
    let cos: Vec<f64> = [cos_j, cos_k].concat();
    let sin: Vec<f64> = [sin_j, sin_k].concat();

    // L1†U11 = C·R1 on J, L0†U01 = S·R1 on K.
    let x = &l0.adjoint() * &u01;
    let w = &l1.adjoint() * &u11;
    let mut r1 = ComplexMatrix::zeros(h);
    for i in 0..h {
        let (src, scale) = if i < p { (&w, cos[i]) } else { (&x, sin[i]) };
        for c in 0..h {
            r1[(i, c)] = src[(i, c)] / scale;
        }
    }

    let phi: Vec<f64> = cos.iter().zip(&sin).map(|(&c, &s)| s.atan2(c)).collect();
    let mut perm: Vec<usize> = (0..h).collect();
    perm.sort_by(|&a, &b| phi[a].total_cmp(&phi[b]));
    if perm.iter().enumerate().all(|(i, &p)| i == p) {
        return CsdFactors { l0, l1, r0, r1, phi };
    }
    CsdFactors {
        l0: permute_columns(&l0, &perm),
        l1: permute_columns(&l1, &perm),
        r0: permute_rows(&r0, &perm),
        r1: permute_rows(&r1, &perm),
        phi: perm.iter().map(|&p| phi[p]).collect(),
    }
}

fn neg(v: &[C64]) -> Vec<C64> {
    v.iter().map(|&x| -x).collect()
}

fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

fn from_columns(cols: &[Vec<C64>]) -> ComplexMatrix {
    ComplexMatrix::from_fn(cols.len(), |r, c| cols[c][r])
}

fn orthonormal_of(cols: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let Some(dim) = cols.first().map(Vec::len) else {
        return Vec::new();
    };
    let order: Vec<usize> = (0..cols.len()).collect();
    orthonormalize(cols, &order, dim, COMPLETION_TOL)
        .into_iter()
        .map(|(q, _)| q)
        .collect()
}

/// An orthonormal basis of the orthogonal complement of the orthonormal
/// `basis` in `C^dim`, completed from standard basis vectors.
fn complement(basis: &[Vec<C64>], dim: usize) -> Vec<Vec<C64>> {
    let mut seeds = basis.to_vec();
    seeds.resize(dim, alloc::vec![ZERO; dim]);
    let order: Vec<usize> = (0..dim).collect();
    orthonormalize(&seeds, &order, dim, COMPLETION_TOL)
        .into_iter()
        .skip(basis.len())
        .map(|(q, _)| q)
        .collect()
}

/// SVD `Y·diag(σ)·Z†` of the square matrix `m[(i, j)] = ⟨b_i, a_j⟩`.
fn small_svd(b: &[Vec<C64>], a: &[Vec<C64>]) -> (ComplexMatrix, Vec<f64>, ComplexMatrix) {
    let n = a.len();
    if n == 0 {
        let empty = ComplexMatrix::identity(1);
        return (empty.clone(), Vec::new(), empty);
    }
    let m = ComplexMatrix::from_fn(n, |i, j| b[i].iter().zip(&a[j]).map(|(x, y)| x.conj() * y).sum());
    let svd = jacobi_svd(&m);
    (svd.u, svd.sigma, svd.v)
}

/// Columns of `[basis]·m`.
fn rotate_basis(basis: &[Vec<C64>], m: &ComplexMatrix) -> Vec<Vec<C64>> {
    let Some(dim) = basis.first().map(Vec::len) else {
        return Vec::new();
    };
    (0..basis.len())
        .map(|j| {
            (0..dim)
                .map(|r| basis.iter().enumerate().map(|(i, b)| b[r] * m[(i, j)]).sum())
                .collect()
        })
        .collect()
}

fn permute_columns(m: &ComplexMatrix, perm: &[usize]) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.dim(), |r, c| m[(r, perm[c])])
}

fn permute_rows(m: &ComplexMatrix, perm: &[usize]) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.dim(), |r, c| m[(perm[r], c)])
}
