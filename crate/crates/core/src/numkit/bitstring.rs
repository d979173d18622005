use core::fmt;

use crate::{Error, Result};

/// A string of bit values `a_{n−1} … a_1 a_0`, bit 0 least significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    nbits: usize,
    value: usize,
}

impl BitString {
    /// The bit string whose decimal value is `value`.
    pub fn new(nbits: usize, value: usize) -> Result<Self> {
        if nbits >= usize::BITS as usize || value >> nbits != 0 {
            return Err(Error::BitOutOfRange {
                bit: usize::BITS as usize - value.leading_zeros() as usize,
                nbits,
            });
        }
        Ok(BitString { nbits, value })
    }

    /// `u(β)`: the single 1-bit at position `bit`.
    pub fn unit(nbits: usize, bit: usize) -> Result<Self> {
        if bit >= nbits {
            return Err(Error::BitOutOfRange { bit, nbits });
        }
        Ok(BitString {
            nbits,
            value: 1 << bit,
        })
    }

    /// Builds from bit values listed least significant first.
    pub fn from_bits_lsb_first(bits: &[bool]) -> Self {
        let value = bits
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (usize::from(b) << i));
        BitString {
            nbits: bits.len(),
            value,
        }
    }

    /// Iterates every bit string of `nbits` bits in increasing decimal value.
    pub fn all(nbits: usize) -> impl Iterator<Item = BitString> {
        (0..1usize << nbits).map(move |value| BitString { nbits, value })
    }

    pub fn nbits(&self) -> usize {
        self.nbits
    }

    /// `d(va) = Σ 2^μ a_μ`.
    pub fn decimal(&self) -> usize {
        self.value
    }

    pub fn bit(&self, pos: usize) -> bool {
        pos < self.nbits && (self.value >> pos) & 1 == 1
    }

    /// Number of 1-bits.
    pub fn weight(&self) -> usize {
        self.value.count_ones() as usize
    }

    /// Positions of the 1-bits in increasing order (`β_0 < β_1 < …`).
    pub fn ones(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (0..self.nbits).filter(move |&p| self.bit(p))
    }

    /// Parity of `va·vb = Σ a_μ b_μ`.
    pub fn dot_parity(&self, other: &BitString) -> bool {
        (self.value & other.value).count_ones() % 2 == 1
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in (0..self.nbits).rev() {
            f.write_str(if self.bit(pos) { "1" } else { "0" })?;
        }
        Ok(())
    }
}
