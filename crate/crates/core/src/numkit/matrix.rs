use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

/// Dense square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        ComplexMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.data[r * dim + c] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// perfect square.
    pub fn from_row_major(entries: Vec<C64>) -> Result<Self> {
        let n = entries.len();
        let dim = isqrt(n);
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if dim * dim != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: dim * dim,
            });
        }
        Ok(ComplexMatrix { dim, data: entries })
    }

    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        Self::from_fn(N, |r, c| rows[r][c])
    }

    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(N, |r, c| C64::new(rows[r][c], 0.0))
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[C64] {
        &self.data[r * self.dim..(r + 1) * self.dim]
    }

    pub fn column(&self, c: usize) -> Vec<C64> {
        (0..self.dim).map(|r| self[(r, c)]).collect()
    }

    pub fn set_column(&mut self, c: usize, values: &[C64]) {
        for (r, &v) in values.iter().enumerate() {
            self[(r, c)] = v;
        }
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)])
    }

    pub fn scale(&self, s: C64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_dim(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                let rhs_row = &rhs.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|r| self.row(r).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    /// `‖U†U − I‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let g = self.adjoint().mul_unchecked(self);
        let mut acc = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let target = if r == c { ONE } else { ZERO };
                acc += (g[(r, c)] - target).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Fails with [`Error::NotUnitary`] when `‖U†U − I‖_F > tol·dim`.
    pub fn check_unitary(&self, tol: f64) -> Result<()> {
        let defect = self.unitarity_defect();
        let bound = tol * self.dim as f64;
        if defect <= bound {
            Ok(())
        } else {
            Err(Error::NotUnitary { defect, bound })
        }
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.check_unitary(tol).is_ok()
    }

    /// Top-left block of size `size` starting at `(row, col)`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> Self {
        Self::from_fn(size, |r, c| self[(row + r, col + c)])
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Self) {
        for r in 0..block.dim {
            for c in 0..block.dim {
                self[(row + r, col + c)] = block[(r, c)];
            }
        }
    }

    /// Largest entrywise modulus of the difference; handy in assertions.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        assert!(r < self.dim && c < self.dim);
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        assert!(r < self.dim && c < self.dim);
        &mut self.data[r * self.dim + c]
    }
}

// The operator impls panic on dimension mismatch; use the checked_* / free
// functions where the dimensions come from user input.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for r in 0..self.dim {
            write!(f, "  ")?;
            for c in 0..self.dim {
                let z = self[(r, c)];
                write!(f, "{:>9.5}{:+.5}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product; the left factor indexes the more significant bits.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.dim, b.dim);
    ComplexMatrix::from_fn(na * nb, |r, c| a[(r / nb, c / nb)] * b[(r % nb, c % nb)])
}

/// Tensor product of a list of factors, leftmost factor most significant.
pub fn tensor_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> ComplexMatrix {
    factors
        .into_iter()
        .fold(ComplexMatrix::identity(1), |acc, f| tensor(&acc, f))
}

/// `M(β)`: the 2×2 matrix `m` acting on bit `bit` of an `nbits`-bit register.
pub fn embed(m: &ComplexMatrix, bit: usize, nbits: usize) -> Result<ComplexMatrix> {
    if m.dim != 2 {
        return Err(Error::DimensionMismatch {
            left: m.dim,
            right: 2,
        });
    }
    if bit >= nbits {
        return Err(Error::BitOutOfRange { bit, nbits });
    }
    let mask = 1usize << bit;
    Ok(ComplexMatrix::from_fn(1 << nbits, |r, c| {
        if (r & !mask) != (c & !mask) {
            ZERO
        } else {
            m[((r >> bit) & 1, (c >> bit) & 1)]
        }
    }))
}

pub fn direct_sum(blocks: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    if blocks.is_empty() {
        return Err(Error::EmptyDirectSum);
    }
    let dim = blocks.iter().map(|b| b.dim).sum();
    let mut out = ComplexMatrix::zeros(dim);
    let mut offset = 0;
    for b in blocks {
        out.set_block(offset, offset, b);
        offset += b.dim;
    }
    Ok(out)
}

/// The `⊙` product `A·B·A†`.
pub fn conjugate(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.same_dim(b)?;
    Ok(a.mul_unchecked(b).mul_unchecked(&a.adjoint()))
}

pub fn frobenius_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    a.same_dim(b)?;
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// Embeds a unitary into the smallest power-of-two dimension as `U ⊕ I_r`.
///
/// Returns the padded matrix together with the original dimension.
pub fn pad_to_power_of_two(u: &ComplexMatrix, tol: f64) -> Result<(ComplexMatrix, usize)> {
    u.check_unitary(tol)?;
    let n = u.dim;
    let padded = n.next_power_of_two().max(2);
    if padded == n {
        return Ok((u.clone(), n));
    }
    let mut out = ComplexMatrix::identity(padded);
    out.set_block(0, 0, u);
    Ok((out, n))
}

/// The `2^nbits`-dimensional discrete Fourier transform with entries
/// `exp(2πi·a·b/N)/√N`.
pub fn dft_matrix(nbits: usize) -> ComplexMatrix {
    let n = 1usize << nbits;
    let norm = 1.0 / (n as f64).sqrt();
    ComplexMatrix::from_fn(n, |r, c| {
        let k = (r * c) % n;
        C64::from_polar(norm, 2.0 * core::f64::consts::PI * k as f64 / n as f64)
    })
}
