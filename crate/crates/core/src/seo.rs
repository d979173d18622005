//! Sequences of elementary operations: the instruction set, its matrix
//! semantics, and a small peephole pass.
//!
//! Instructions are listed in application order: the first instruction acts
//! on a ket first, so the matrix of a program is
//! `M(i_last) ⋯ M(i_2) M(i_1)`.  Angles are kept in degrees, as written in
//! SEO files.

use alloc::vec::Vec;

use crate::bits::{cnot_matrix, BitPermutation};
use crate::numkit::{embed, gates, ComplexMatrix, C64};
use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Instruction {
    /// `exp(i·ang·π/180)` times the identity.
    Phase { degrees: f64 },
    /// Flip `target` if `control` has value `value`.
    Cnot { control: usize, value: bool, target: usize },
    /// `exp(i·σy(bit)·ang·π/180)`.
    RotY { bit: usize, degrees: f64 },
    /// `exp(i·σz(bit)·ang·π/180)`.
    RotZ { bit: usize, degrees: f64 },
}

impl Instruction {
    pub fn cnot(control: usize, value: bool, target: usize) -> Self {
        Instruction::Cnot { control, value, target }
    }

    pub fn roty_radians(bit: usize, radians: f64) -> Self {
        Instruction::RotY {
            bit,
            degrees: radians.to_degrees(),
        }
    }

    pub fn rotz_radians(bit: usize, radians: f64) -> Self {
        Instruction::RotZ {
            bit,
            degrees: radians.to_degrees(),
        }
    }

    pub fn phase_radians(radians: f64) -> Self {
        Instruction::Phase {
            degrees: radians.to_degrees(),
        }
    }

    pub fn max_bit(&self) -> Option<usize> {
        match *self {
            Instruction::Phase { .. } => None,
            Instruction::Cnot { control, target, .. } => Some(control.max(target)),
            Instruction::RotY { bit, .. } | Instruction::RotZ { bit, .. } => Some(bit),
        }
    }

    pub fn angle_degrees(&self) -> Option<f64> {
        match *self {
            Instruction::Cnot { .. } => None,
            Instruction::Phase { degrees }
            | Instruction::RotY { degrees, .. }
            | Instruction::RotZ { degrees, .. } => Some(degrees),
        }
    }

    /// Replaces every bit index `b` by `alias.apply(b)`.
    pub fn rename(&self, alias: &BitPermutation) -> Self {
        match *self {
            Instruction::Phase { degrees } => Instruction::Phase { degrees },
            Instruction::Cnot { control, value, target } => Instruction::Cnot {
                control: alias.apply(control),
                value,
                target: alias.apply(target),
            },
            Instruction::RotY { bit, degrees } => Instruction::RotY {
                bit: alias.apply(bit),
                degrees,
            },
            Instruction::RotZ { bit, degrees } => Instruction::RotZ {
                bit: alias.apply(bit),
                degrees,
            },
        }
    }

    fn validate(&self, nbits: usize) -> Result<()> {
        if let Some(bit) = self.max_bit() {
            if bit >= nbits {
                return Err(Error::BitOutOfRange { bit, nbits });
            }
        }
        if let Instruction::Cnot { control, target, .. } = *self {
            if control == target {
                return Err(Error::ControlIsTarget(control));
            }
        }
        if let Some(a) = self.angle_degrees() {
            if !a.is_finite() {
                return Err(Error::NonFiniteAngle(a));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeoProgram {
    nbits: usize,
    instructions: Vec<Instruction>,
}

impl SeoProgram {
    pub fn new(nbits: usize, instructions: Vec<Instruction>) -> Result<Self> {
        if nbits == 0 {
            return Err(Error::EmptyMatrix);
        }
        for i in &instructions {
            i.validate(nbits)?;
        }
        Ok(SeoProgram { nbits, instructions })
    }

    pub fn empty(nbits: usize) -> Self {
        assert!(nbits >= 1);
        SeoProgram {
            nbits,
            instructions: Vec::new(),
        }
    }

    /// Uses `max bit index + 1` (at least 1) as the register size.
    pub fn with_inferred_bits(instructions: Vec<Instruction>) -> Result<Self> {
        let nbits = instructions
            .iter()
            .filter_map(Instruction::max_bit)
            .max()
            .map_or(1, |b| b + 1);
        Self::new(nbits, instructions)
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    pub fn into_instructions(self) -> Vec<Instruction> {
        self.instructions
    }

    /// Appends `other`, which then acts after `self`.
    pub fn extend(&mut self, other: SeoProgram) -> Result<()> {
        if other.nbits > self.nbits {
            return Err(Error::DimensionMismatch {
                left: self.nbits,
                right: other.nbits,
            });
        }
        self.instructions.extend(other.instructions);
        Ok(())
    }

    pub fn push(&mut self, i: Instruction) -> Result<()> {
        i.validate(self.nbits)?;
        self.instructions.push(i);
        Ok(())
    }

    pub fn count_cnots(&self) -> usize {
        self.instructions
            .iter()
            .filter(|i| matches!(i, Instruction::Cnot { .. }))
            .count()
    }
}

/// The `2^nbits` matrix of a single instruction.
pub fn instruction_matrix(i: &Instruction, nbits: usize) -> Result<ComplexMatrix> {
    i.validate(nbits)?;
    let dim = 1usize << nbits;
    Ok(match *i {
        Instruction::Phase { degrees } => {
            ComplexMatrix::identity(dim).scale(C64::from_polar(1.0, degrees.to_radians()))
        }
        Instruction::Cnot { control, value, target } => cnot_matrix(control, value, target, nbits)?,
        Instruction::RotY { bit, degrees } => embed(&gates::ry(degrees.to_radians()), bit, nbits)?,
        Instruction::RotZ { bit, degrees } => embed(&gates::rz(degrees.to_radians()), bit, nbits)?,
    })
}

/// Applies an instruction to a state vector of length `2^nbits` in place.
fn apply_to_state(i: &Instruction, state: &mut [C64]) {
    match *i {
        Instruction::Phase { degrees } => {
            let z = C64::from_polar(1.0, degrees.to_radians());
            state.iter_mut().for_each(|x| *x *= z);
        }
        Instruction::Cnot { control, value, target } => {
            let (cm, tm) = (1usize << control, 1usize << target);
            let want = if value { cm } else { 0 };
            for x in 0..state.len() {
                if x & tm == 0 && x & cm == want {
                    state.swap(x, x | tm);
                }
            }
        }
        Instruction::RotY { bit, degrees } => {
            let (s, c) = degrees.to_radians().sin_cos();
            let m = 1usize << bit;
            for x in 0..state.len() {
                if x & m == 0 {
                    let (a, b) = (state[x], state[x | m]);
                    state[x] = a * c + b * s;
                    state[x | m] = b * c - a * s;
                }
            }
        }
        Instruction::RotZ { bit, degrees } => {
            let r = degrees.to_radians();
            let (up, down) = (C64::from_polar(1.0, r), C64::from_polar(1.0, -r));
            let m = 1usize << bit;
            for (x, v) in state.iter_mut().enumerate() {
                *v *= if x & m == 0 { up } else { down };
            }
        }
    }
}

/// Matrix of the whole program: the last instruction is the leftmost factor.
pub fn program_matrix(p: &SeoProgram) -> ComplexMatrix {
    let dim = 1usize << p.nbits;
    let mut out = ComplexMatrix::zeros(dim);
    let mut col = alloc::vec![C64::new(0.0, 0.0); dim];
    for c in 0..dim {
        col.iter_mut().for_each(|x| *x = C64::new(0.0, 0.0));
        col[c] = C64::new(1.0, 0.0);
        for i in &p.instructions {
            apply_to_state(i, &mut col);
        }
        out.set_column(c, &col);
    }
    out
}

/// Drops rotations and phases with `|angle| < threshold_degrees`, then
/// repeatedly cancels adjacent identical c-not pairs.
pub fn peephole_zero(p: &SeoProgram, threshold_degrees: f64) -> SeoProgram {
    let mut out: Vec<Instruction> = Vec::with_capacity(p.instructions.len());
    for &i in &p.instructions {
        if let Some(a) = i.angle_degrees() {
            if a.abs() < threshold_degrees {
                continue;
            }
        }
        match (out.last(), i) {
            (Some(prev @ Instruction::Cnot { .. }), Instruction::Cnot { .. }) if *prev == i => {
                out.pop();
            }
            _ => out.push(i),
        }
    }
    SeoProgram {
        nbits: p.nbits,
        instructions: out,
    }
}
