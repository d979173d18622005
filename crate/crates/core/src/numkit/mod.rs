//! Dense complex matrices, bit strings, gate and projector constructors.

mod bitstring;
pub mod gates;
mod matrix;
mod projector;

pub use bitstring::BitString;
pub use matrix::{
    conjugate, dft_matrix, direct_sum, embed, frobenius_distance, pad_to_power_of_two, tensor,
    tensor_all, ComplexMatrix, C64,
};
pub(crate) use matrix::{ONE, ZERO};
pub use projector::{build_projector, exp_projector_sum};
