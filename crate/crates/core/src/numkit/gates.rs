//! Pauli matrices, number operators and single-qubit exponentials.

use super::matrix::{ComplexMatrix, C64, ONE, ZERO};
#[allow(unused_imports)]
use num_traits::Float;

const I: C64 = C64::new(0.0, 1.0);

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]])
}

pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ZERO, -I], [I, ZERO]])
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]])
}

/// Number operator `n = |1⟩⟨1| = (1 − σz)/2`.
pub fn number() -> ComplexMatrix {
    p1()
}

/// `n̄ = 1 − n = (1 + σz)/2`.
pub fn antinumber() -> ComplexMatrix {
    p0()
}

pub fn p0() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ONE, ZERO], [ZERO, ZERO]])
}

pub fn p1() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ZERO, ZERO], [ZERO, ONE]])
}

pub fn projector(value: bool) -> ComplexMatrix {
    if value {
        p1()
    } else {
        p0()
    }
}

/// `R(φ) = exp(iφσy) = [[cos φ, sin φ], [−sin φ, cos φ]]`.
pub fn ry(angle: f64) -> ComplexMatrix {
    let (s, c) = (angle.sin(), angle.cos());
    ComplexMatrix::from_real_rows([[c, s], [-s, c]])
}

/// `exp(iθσz) = diag(e^{iθ}, e^{−iθ})`.
pub fn rz(angle: f64) -> ComplexMatrix {
    ComplexMatrix::diagonal(&[C64::from_polar(1.0, angle), C64::from_polar(1.0, -angle)])
}
