//! One-sided (Hestenes) Jacobi SVD for small dense complex matrices.

use alloc::vec::Vec;

use crate::numkit::{ComplexMatrix, C64, ONE, ZERO};
#[allow(unused_imports)]
use num_traits::Float;

const MAX_SWEEPS: usize = 80;
const EPS: f64 = f64::EPSILON;

/// `A = U·diag(sigma)·V†` with `sigma` sorted in non-increasing order.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub v: ComplexMatrix,
}

impl Svd {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.u.dim();
        let us = ComplexMatrix::from_fn(n, |r, c| self.u[(r, c)] * self.sigma[c]);
        &us * &self.v.adjoint()
    }
}

pub fn jacobi_svd(a: &ComplexMatrix) -> Svd {
    let n = a.dim();
    // Work on columns; cols[j] is column j of A·V.
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| a.column(j)).collect();
    let mut vcols: Vec<Vec<C64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { ONE } else { ZERO }).collect())
        .collect();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|x| x.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|x| x.norm_sqr()).sum();
                let gamma: C64 = cols[p].iter().zip(&cols[q]).map(|(x, y)| x.conj() * y).sum();
                let g = gamma.norm();
                if g == 0.0 || g <= EPS * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta.abs() > 1e150 {
                    0.5 / zeta
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // [a_p, a_q·e^{-iθ}]·[[c, s], [−s, c]]
                let w = phase.conj();
                rotate(&mut cols, p, q, c, s, w);
                rotate(&mut vcols, p, q, c, s, w);
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = cols
        .iter()
        .map(|col| col.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let sigma: Vec<f64> = order.iter().map(|&i| norms[i]).collect();
    let seeds: Vec<Vec<C64>> = order.iter().map(|&i| cols[i].clone()).collect();
    let all: Vec<usize> = (0..n).collect();
    let u_cols = orthonormalize(&seeds, &all, n, COMPLETION_TOL);
    let mut u = ComplexMatrix::zeros(n);
    let mut v = ComplexMatrix::zeros(n);
    for (k, &i) in order.iter().enumerate() {
        u.set_column(k, &u_cols[k].0);
        v.set_column(k, &vcols[i]);
    }
    Svd { u, sigma, v }
}

fn rotate(cols: &mut [Vec<C64>], p: usize, q: usize, c: f64, s: f64, w: C64) {
    let (head, tail) = cols.split_at_mut(q);
    let (cp, cq) = (&mut head[p], &mut tail[0]);
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let yw = *y * w;
        let nx = *x * c - yw * s;
        let ny = *x * s + yw * c;
        *x = nx;
        *y = ny;
    }
}

/// Residual norm below which a seed vector is treated as numerically zero
/// and replaced by a standard basis vector.
pub(crate) const COMPLETION_TOL: f64 = 1e-14;

/// Gram-Schmidt (with one re-orthogonalization pass) over `seeds`, visited in
/// `order`.
///
/// Returns, for every seed (indexed as in `seeds`), the orthonormal vector and
/// the residual norm of the seed after projecting out the vectors visited
/// before it.  Seeds whose residual falls below `tol` are completed afterwards,
/// in increasing seed index, by the standard basis vector with the largest
/// remaining component (scanned from index 0); their reported residual is 0.
pub(crate) fn orthonormalize(
    seeds: &[Vec<C64>],
    order: &[usize],
    dim: usize,
    tol: f64,
) -> Vec<(Vec<C64>, f64)> {
    let mut basis: Vec<Vec<C64>> = Vec::with_capacity(seeds.len());
    let mut out: Vec<Option<(Vec<C64>, f64)>> = alloc::vec![None; seeds.len()];
    for &i in order {
        let mut v = seeds[i].clone();
        project_out(&mut v, &basis);
        project_out(&mut v, &basis);
        let norm = vec_norm(&v);
        if norm > tol {
            v.iter_mut().for_each(|x| *x /= norm);
            basis.push(v.clone());
            out[i] = Some((v, norm));
        }
    }
    for slot in out.iter_mut().filter(|s| s.is_none()) {
        let mut best: Option<(Vec<C64>, f64)> = None;
        for k in 0..dim {
            let mut e: Vec<C64> = (0..dim).map(|i| if i == k { ONE } else { ZERO }).collect();
            project_out(&mut e, &basis);
            project_out(&mut e, &basis);
            let en = vec_norm(&e);
            if best.as_ref().map_or(true, |(_, b)| en > *b + 1e-12) {
                best = Some((e, en));
            }
        }
        let (mut e, en) = best.expect("dimension is positive");
        e.iter_mut().for_each(|x| *x /= en);
        basis.push(e.clone());
        *slot = Some((e, 0.0));
    }
    out.into_iter().map(|s| s.expect("filled")).collect()
}

fn project_out(v: &mut [C64], basis: &[Vec<C64>]) {
    for b in basis {
        let coeff: C64 = b.iter().zip(v.iter()).map(|(x, y)| x.conj() * y).sum();
        for (x, y) in v.iter_mut().zip(b) {
            *x -= coeff * y;
        }
    }
}

fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
