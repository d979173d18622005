use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bit position {bit} out of range for {nbits} bits")]
    BitOutOfRange { bit: usize, nbits: usize },
    #[error("bit positions must differ (both are {0})")]
    SameBit(usize),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix dimension must be positive")]
    EmptyMatrix,
    #[error("matrix dimension {0} is odd")]
    OddDimension(usize),
    #[error("matrix dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("matrix is not unitary: |U^dagger U - I|_F = {defect:e} exceeds {bound:e}")]
    NotUnitary { defect: f64, bound: f64 },
    #[error("reconstruction residual {residual:e} exceeds {bound:e}")]
    Residual { residual: f64, bound: f64 },
    #[error("direct sum of an empty block list")]
    EmptyDirectSum,
    #[error("projectors are not mutually orthogonal (residual {0:e})")]
    NonOrthogonalProjectors(f64),
    #[error("{projectors} projectors but {alphas} exponents")]
    LengthMismatch { projectors: usize, alphas: usize },
    #[error("transposition states must differ")]
    IdenticalStates,
    #[error("level {level} out of range for {nbits} bits")]
    LevelOutOfRange { level: usize, nbits: usize },
    #[error("angle vector of length {0} is not a power of two")]
    BadAngleLength(usize),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("not a permutation: {0:?}")]
    NotAPermutation(alloc::vec::Vec<usize>),
    #[error("cycle needs at least 2 elements, got {0}")]
    CycleTooShort(usize),
    #[error("cycle repeats an element")]
    RepeatedElement,
    #[error("c-not control and target coincide at bit {0}")]
    ControlIsTarget(usize),
    #[error("angle {0} is not finite")]
    NonFiniteAngle(f64),
}
