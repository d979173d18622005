//! Recursive cosine-sine decomposition of a `2^nb`-dimensional unitary into
//! an ordered product of central matrices.
//!
//! Every node of the tree decomposes a block-diagonal matrix with `2^k` equal
//! blocks. The CSD of each block contributes one D matrix to the node's
//! direct sum; the left factors of all blocks form the block-diagonal matrix
//! handed to the node on the left of the product, the right factors the one
//! on the right. Blocks of size 1 end the recursion as a diagonal unitary.
//!
//! The sequence is listed leftmost factor first, so `U = items[0]·items[1]⋯`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::bits::alias_permutation;
use crate::csd::{cs_decompose_unchecked, CsdFactors};
use crate::numkit::{frobenius_distance, ComplexMatrix, C64, ZERO};
use crate::walsh::AngleVector;
use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Debug, Clone, PartialEq)]
pub enum CentralMatrix {
    /// A direct sum of `2^level` D matrices. `phi` has order `nbits − 1` and
    /// is indexed in the frame where the rotation sits on bit `nbits − 1`.
    DType {
        nbits: usize,
        level: usize,
        phi: AngleVector,
    },
    /// `diag(e^{iφ_va})`.
    Diagonal { nbits: usize, phases: AngleVector },
}

impl CentralMatrix {
    pub fn nbits(&self) -> usize {
        match self {
            CentralMatrix::DType { nbits, .. } | CentralMatrix::Diagonal { nbits, .. } => *nbits,
        }
    }

    pub fn is_dtype(&self) -> bool {
        matches!(self, CentralMatrix::DType { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralSequence {
    pub nbits: usize,
    pub items: Vec<CentralMatrix>,
}

impl CentralSequence {
    /// Ordered product of the central matrices.
    pub fn product(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::identity(1 << self.nbits);
        for c in self.items.iter().rev() {
            apply_central_left(c, &mut m);
        }
        m
    }
}

/// `m ← c·m` without forming `c`; every row of a central matrix has at most
/// two nonzeros.
pub fn apply_central_left(c: &CentralMatrix, m: &mut ComplexMatrix) {
    let n = m.dim();
    match c {
        CentralMatrix::DType { nbits, level, phi } => {
            for (va, &angle) in phi.values().iter().enumerate() {
                let (x0, x1) = rotation_block(va, *level, *nbits);
                let (s, co) = (angle.sin(), angle.cos());
                for col in 0..n {
                    let (a, b) = (m[(x0, col)], m[(x1, col)]);
                    m[(x0, col)] = a * co + b * s;
                    m[(x1, col)] = b * co - a * s;
                }
            }
        }
        CentralMatrix::Diagonal { phases, .. } => {
            for (row, &p) in phases.values().iter().enumerate() {
                let z = C64::from_polar(1.0, p);
                for col in 0..n {
                    m[(row, col)] *= z;
                }
            }
        }
    }
}

/// Index pair `(x0, x1)` of the 2×2 rotation block that angle `va` of a level
/// `level` node occupies: the states whose rotation bit is 0 resp. 1 and whose
/// remaining bits spell `va` after alias renaming.
fn rotation_block(va: usize, level: usize, nbits: usize) -> (usize, usize) {
    let alias = alias_permutation(level, nbits).expect("level < nbits");
    let x0 = alias.map_state(va);
    (x0, x0 | 1 << alias.apply(nbits - 1))
}

/// The explicit matrix of a central matrix.
pub fn expand_central(c: &CentralMatrix) -> ComplexMatrix {
    match c {
        CentralMatrix::DType { nbits, level, phi } => {
            let mut m = ComplexMatrix::zeros(1 << *nbits);
            for (va, &angle) in phi.values().iter().enumerate() {
                let (x0, x1) = rotation_block(va, *level, *nbits);
                let (s, co) = (C64::new(angle.sin(), 0.0), C64::new(angle.cos(), 0.0));
                m[(x0, x0)] = co;
                m[(x1, x1)] = co;
                m[(x0, x1)] = s;
                m[(x1, x0)] = -s;
            }
            m
        }
        CentralMatrix::Diagonal { phases, .. } => {
            let d: Vec<C64> = phases.values().iter().map(|&p| C64::from_polar(1.0, p)).collect();
            ComplexMatrix::diagonal(&d)
        }
    }
}

/// Reduces an angle to `(−π, π]`.
pub(crate) fn principal_angle(a: f64) -> f64 {
    let r = a - 2.0 * PI * (a / (2.0 * PI)).round();
    if r <= -PI {
        r + 2.0 * PI
    } else if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Expands `u` (dimension `2^nbits`) into `2^{nbits+1} − 1` central matrices.
///
/// Fails when `u` is not unitary within `tol·2^nbits`, or when the ordered
/// product misses `u` by more than `tol·2^nbits`.
pub fn decompose(u: &ComplexMatrix, nbits: usize, tol: f64) -> Result<CentralSequence> {
    let n = u.dim();
    if !n.is_power_of_two() || n < 2 {
        return Err(Error::NotPowerOfTwo(n));
    }
    if n != 1 << nbits {
        return Err(Error::DimensionMismatch {
            left: n,
            right: 1 << nbits,
        });
    }
    u.check_unitary(tol)?;

    let mut items = Vec::with_capacity(2 * n - 1);
    expand_node(alloc::vec![u.clone()], 0, nbits, &mut items);
    let seq = CentralSequence { nbits, items };

    let residual = frobenius_distance(u, &seq.product())?;
    let bound = tol * n as f64;
    if residual > bound {
        return Err(Error::Residual { residual, bound });
    }
    Ok(seq)
}

fn expand_node(blocks: Vec<ComplexMatrix>, level: usize, nbits: usize, out: &mut Vec<CentralMatrix>) {
    if blocks[0].dim() == 1 {
        let phases: Vec<f64> = blocks.iter().map(|b| principal_angle(b[(0, 0)].arg())).collect();
        out.push(CentralMatrix::Diagonal {
            nbits,
            phases: AngleVector::new(phases).expect("2^nbits leaves"),
        });
        return;
    }
    let factors: Vec<CsdFactors> = blocks.iter().map(cs_decompose_unchecked).collect();
    let phi = read_node_angles(&factors, level, nbits);

    let mut lefts = Vec::with_capacity(2 * factors.len());
    let mut rights = Vec::with_capacity(2 * factors.len());
    for f in factors {
        lefts.push(f.l0);
        lefts.push(f.l1);
        rights.push(f.r0);
        rights.push(f.r1);
    }
    expand_node(lefts, level + 1, nbits, out);
    out.push(CentralMatrix::DType { nbits, level, phi });
    expand_node(rights, level + 1, nbits, out);
}

/// Reads every `φ_va` of the node as `atan2(S, C)` from the 2×2 rotation block
/// that the projector form assigns to `va`, looking the entries up in the
/// node's block-diagonal D matrix.
fn read_node_angles(factors: &[CsdFactors], level: usize, nbits: usize) -> AngleVector {
    let block = 1usize << (nbits - level);
    let entry = |r: usize, c: usize| -> C64 {
        let (j, rl, cl) = (r / block, r % block, c % block);
        if c / block != j {
            return ZERO;
        }
        let phi = &factors[j].phi;
        let h = phi.len();
        let (i, k) = (rl % h, cl % h);
        if i != k {
            return ZERO;
        }
        match (rl < h, cl < h) {
            (true, true) | (false, false) => C64::new(phi[i].cos(), 0.0),
            (true, false) => C64::new(phi[i].sin(), 0.0),
            (false, true) => C64::new(-phi[i].sin(), 0.0),
        }
    };
    let angles: Vec<f64> = (0..1usize << (nbits - 1))
        .map(|va| {
            let (x0, x1) = rotation_block(va, level, nbits);
            entry(x0, x1).re.atan2(entry(x0, x0).re)
        })
        .collect();
    AngleVector::new(angles).expect("2^(nbits-1) angles")
}
