//! Compile arbitrary unitary matrices into sequences of elementary quantum
//! operations (c-nots, single-qubit Y/Z rotations and a global phase).
//!
//! The pipeline is:
//!
//! 1. [`treedec::decompose`] applies the cosine-sine decomposition
//!    ([`csd::cs_decompose`]) recursively, producing an ordered product of
//!    central matrices (D matrices, direct sums of D matrices and diagonal
//!    unitaries).
//! 2. [`emitter`] turns every central matrix into c-not conjugated rotations,
//!    using the Sylvester-Hadamard angle transform ([`walsh`]) and the bit
//!    renaming permutations of [`bits`].
//! 3. [`seo`] holds the resulting instruction list and can rebuild its matrix
//!    for verification.
//!
//! Matrix indices follow the binary labelling used throughout: row `i` is the
//! basis state whose bit string has decimal value `i`, bit 0 least
//! significant, and in a tensor product the left factor holds the more
//! significant bits.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod csd;
pub mod emitter;
mod error;
pub mod numkit;
#[cfg(feature = "rand")]
pub mod random;
pub mod seo;
pub mod treedec;
pub mod walsh;

pub use error::{Error, Result};
pub use numkit::{BitString, ComplexMatrix, C64};

/// Default unitarity / reconstruction tolerance, scaled by the matrix dimension.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Default threshold (radians) below which a rotation angle counts as zero.
pub const DEFAULT_ZERO_ANGLE: f64 = 1e-10;
