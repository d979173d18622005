//! Central matrices to elementary operations.
//!
//! A central matrix is a product of commuting factors `A_vb`, one per bit
//! string `vb`, each a rotation conjugated by c-nots:
//!
//! * D-type: `A_vb = exp(i θ_vb σy(nb−1) Π_j σz(β_j))` over the 1-bits `β_j`
//!   of `vb`, where `θ = H φ / 2^{nb−1}`. A level-`k` node uses the same
//!   construction followed by alias renaming of every bit.
//! * Diagonal: `A_vb = exp(i θ_vb Π_j σz(β_j))` with `θ = H φ / 2^nb`. The
//!   `vb = 0` factor is a global phase, which [`compile`] collects into one
//!   trailing `PHAS`.

use alloc::vec::Vec;

use crate::bits::alias_permutation;
use crate::numkit::{frobenius_distance, pad_to_power_of_two, ComplexMatrix};
use crate::seo::{program_matrix, Instruction, SeoProgram};
use crate::treedec::{decompose, principal_angle, CentralMatrix};
use crate::walsh::{phi_to_theta, AngleVector};
use crate::{BitString, Error, Result, DEFAULT_TOL, DEFAULT_ZERO_ANGLE};
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Y,
    Z,
    Phase,
}

/// One factor `A_vb`: `cnot chain · rotation · reversed chain`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorPlan {
    pub vb: BitString,
    /// Radians.
    pub theta: f64,
    /// Strictly decreasing bit positions.
    pub cnot_controls: Vec<usize>,
    pub rotation_bit: usize,
    pub axis: Axis,
}

impl FactorPlan {
    fn new(vb: BitString, theta: f64, mut controls: Vec<usize>, rotation_bit: usize, axis: Axis) -> Self {
        controls.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(!controls.contains(&rotation_bit));
        FactorPlan {
            vb,
            theta,
            cnot_controls: controls,
            rotation_bit,
            axis,
        }
    }

    /// Controls ascend on the way in and descend on the way out.
    pub fn instructions(&self) -> Vec<Instruction> {
        let rot = match self.axis {
            Axis::Y => Instruction::roty_radians(self.rotation_bit, self.theta),
            Axis::Z => Instruction::rotz_radians(self.rotation_bit, self.theta),
            Axis::Phase => return alloc::vec![Instruction::phase_radians(self.theta)],
        };
        let cnot = |c: usize| Instruction::cnot(c, true, self.rotation_bit);
        let mut out = Vec::with_capacity(2 * self.cnot_controls.len() + 1);
        out.extend(self.cnot_controls.iter().rev().map(|&c| cnot(c)));
        out.push(rot);
        out.extend(self.cnot_controls.iter().map(|&c| cnot(c)));
        out
    }

    pub fn matrix(&self, nbits: usize) -> Result<ComplexMatrix> {
        Ok(program_matrix(&SeoProgram::new(nbits, self.instructions())?))
    }
}

/// Factor plans of a D-type central matrix, in increasing `d(vb)`, in the
/// renamed (physical) bit frame.
pub fn d_type_plans(c: &CentralMatrix) -> Vec<FactorPlan> {
    let CentralMatrix::DType { nbits, level, phi } = c else {
        panic!("d_type_plans needs a D-type central matrix");
    };
    let nb = *nbits;
    let alias = alias_permutation(*level, nb).expect("level < nbits");
    let top = nb - 1;
    let theta = phi_to_theta(phi);
    theta
        .iter()
        .map(|(vb, t)| {
            let controls = vb.ones().map(|b| alias.apply(b)).collect();
            FactorPlan::new(vb, t, controls, alias.apply(top), Axis::Y)
        })
        .collect()
}

/// Factor plans of a diagonal central matrix, in increasing `d(vb)`.
pub fn diagonal_plans(c: &CentralMatrix) -> Vec<FactorPlan> {
    let CentralMatrix::Diagonal { phases, .. } = c else {
        panic!("diagonal_plans needs a diagonal central matrix");
    };
    let theta = phi_to_theta(phases);
    theta
        .iter()
        .map(|(vb, t)| {
            let ones: Vec<usize> = vb.ones().collect();
            match ones.split_first() {
                None => FactorPlan::new(vb, t, Vec::new(), 0, Axis::Phase),
                Some((&b0, rest)) => FactorPlan::new(vb, t, rest.to_vec(), b0, Axis::Z),
            }
        })
        .collect()
}

fn keep(theta: f64, options: &CompileOptions) -> bool {
    !options.optimize || theta.abs() >= options.zero_angle_threshold
}

/// Instructions of a D-type central matrix.
pub fn emit_d_type(c: &CentralMatrix, options: &CompileOptions) -> Vec<Instruction> {
    d_type_plans(c)
        .iter()
        .filter(|p| keep(p.theta, options))
        .flat_map(FactorPlan::instructions)
        .collect()
}

/// Instructions of a diagonal central matrix, without its global phase,
/// which is returned in radians.
pub fn emit_diagonal(c: &CentralMatrix, options: &CompileOptions) -> (Vec<Instruction>, f64) {
    let mut phase = 0.0;
    let mut out = Vec::new();
    for p in diagonal_plans(c) {
        if p.axis == Axis::Phase {
            phase += p.theta;
        } else if keep(p.theta, options) {
            out.extend(p.instructions());
        }
    }
    (out, phase)
}

/// Instructions of any central matrix plus its deferred global phase.
pub fn emit_central(c: &CentralMatrix, options: &CompileOptions) -> (Vec<Instruction>, f64) {
    match c {
        CentralMatrix::DType { .. } => (emit_d_type(c, options), 0.0),
        CentralMatrix::Diagonal { .. } => emit_diagonal(c, options),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompileOptions {
    /// Drop factors whose angle is below `zero_angle_threshold`.
    pub optimize: bool,
    /// Radians.
    pub zero_angle_threshold: f64,
    /// Unitarity and residual tolerance, scaled by the padded dimension.
    pub tol: f64,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions {
            optimize: true,
            zero_angle_threshold: DEFAULT_ZERO_ANGLE,
            tol: DEFAULT_TOL,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Compilation {
    pub program: SeoProgram,
    /// Dimension of the input before padding.
    pub original_dim: usize,
    /// The padded matrix the program implements.
    pub padded: ComplexMatrix,
    /// `‖program_matrix − padded‖_F`.
    pub residual: f64,
}

impl Compilation {
    pub fn padding(&self) -> usize {
        self.padded.dim() - self.original_dim
    }
}

/// Compiles a unitary of any dimension, padding it to a power of two first.
pub fn compile(u: &ComplexMatrix, options: &CompileOptions) -> Result<Compilation> {
    let (padded, original_dim) = pad_to_power_of_two(u, options.tol)?;
    let n = padded.dim();
    let nbits = n.trailing_zeros() as usize;
    let seq = decompose(&padded, nbits, options.tol)?;

    let mut instructions = Vec::new();
    let mut phase = 0.0;
    for c in seq.items.iter().rev() {
        let (frag, p) = emit_central(c, options);
        instructions.extend(frag);
        phase += p;
    }
    let phase = principal_angle(phase);
    if !options.optimize || phase.abs() >= options.zero_angle_threshold {
        instructions.push(Instruction::phase_radians(phase));
    }

    let program = SeoProgram::new(nbits, instructions)?;
    let residual = frobenius_distance(&program_matrix(&program), &padded)?;
    let bound = options.tol * n as f64;
    if residual > bound {
        return Err(Error::Residual { residual, bound });
    }
    Ok(Compilation {
        program,
        original_dim,
        padded,
        residual,
    })
}

/// A diagonal central matrix from physical phases, for callers that build
/// central matrices by hand.
pub fn diagonal_from_phases(phases: Vec<f64>) -> Result<CentralMatrix> {
    let phases = AngleVector::new(phases)?;
    Ok(CentralMatrix::Diagonal {
        nbits: phases.order(),
        phases,
    })
}
