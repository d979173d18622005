//! State permutations acting on two bits (c-nots, Exchanger, Twin-to-twin-er),
//! permutations of bit positions, and cycle utilities.
//!
//! Composition follows the right-to-left convention: `p.compose(&q)` applies
//! `q` first, then `p`.

use alloc::vec::Vec;

use crate::numkit::{ComplexMatrix, ONE};
use crate::{Error, Result};

/// A bijection on bit positions `0..nbits`; `image[β]` is where bit `β` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitPermutation {
    image: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl BitPermutation {
    pub fn identity(nbits: usize) -> Self {
        BitPermutation {
            image: (0..nbits).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || seen[i] {
                return Err(Error::NotAPermutation(image));
            }
            seen[i] = true;
        }
        Ok(BitPermutation { image })
    }

    pub fn transposition(a: usize, b: usize, nbits: usize) -> Result<Self> {
        for bit in [a, b] {
            if bit >= nbits {
                return Err(Error::BitOutOfRange { bit, nbits });
            }
        }
        let mut p = Self::identity(nbits);
        p.image.swap(a, b);
        Ok(p)
    }

    pub fn nbits(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, bit: usize) -> usize {
        self.image[bit]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &BitPermutation) -> BitPermutation {
        assert_eq!(self.nbits(), other.nbits(), "permutation size mismatch");
        BitPermutation {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn inverse(&self) -> BitPermutation {
        let mut inv = alloc::vec![0; self.nbits()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        BitPermutation { image: inv }
    }

    /// Disjoint cycle decomposition, omitting fixed points.
    pub fn cycles(&self) -> Vec<Cycle<usize>> {
        let mut seen = alloc::vec![false; self.nbits()];
        let mut out = Vec::new();
        for start in 0..self.nbits() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut elements = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                elements.push(i);
                i = self.image[i];
            }
            out.push(Cycle { elements });
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Relabels the bits of a basis-state index: bit `β` of `state` moves to
    /// position `image[β]`.
    pub fn map_state(&self, state: usize) -> usize {
        self.image
            .iter()
            .enumerate()
            .fold(0, |acc, (from, &to)| acc | (((state >> from) & 1) << to))
    }

    /// The state permutation `E` with `E ⊙ M(β) = M(image[β])`.
    pub fn state_matrix(&self) -> ComplexMatrix {
        let n = 1usize << self.nbits();
        let mut m = ComplexMatrix::zeros(n);
        for x in 0..n {
            m[(self.map_state(x), x)] = ONE;
        }
        m
    }
}

pub fn permutation_parity(p: &BitPermutation) -> Parity {
    p.parity()
}

/// A cycle `(a_1, a_2, …, a_r)` mapping `a_1 → a_2 → … → a_r → a_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle<T> {
    elements: Vec<T>,
}

impl<T: Copy + PartialEq> Cycle<T> {
    pub fn new(elements: Vec<T>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::CycleTooShort(0));
        }
        for (i, a) in elements.iter().enumerate() {
            if elements[i + 1..].contains(a) {
                return Err(Error::RepeatedElement);
            }
        }
        Ok(Cycle { elements })
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Where the cycle sends `x`.
    pub fn apply(&self, x: T) -> T {
        match self.elements.iter().position(|&e| e == x) {
            Some(i) => self.elements[(i + 1) % self.elements.len()],
            None => x,
        }
    }
}

impl Cycle<usize> {
    pub fn to_permutation(&self, n: usize) -> Result<BitPermutation> {
        let mut image: Vec<usize> = (0..n).collect();
        for &e in &self.elements {
            if e >= n {
                return Err(Error::BitOutOfRange { bit: e, nbits: n });
            }
            image[e] = self.apply(e);
        }
        Ok(BitPermutation { image })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranspositionOrder {
    /// `(a_1, …, a_n) = (a_1, a_2)(a_2, a_3)⋯(a_{n−1}, a_n)`
    Left,
    /// `(a_1, …, a_n) = (a_1, a_n)⋯(a_1, a_3)(a_1, a_2)`
    Right,
}

/// Writes a cycle as a product of transpositions, listed left to right as
/// factors of the product (the rightmost one acts first).
pub fn cycle_to_transpositions<T: Copy + PartialEq>(
    cycle: &Cycle<T>,
    order: TranspositionOrder,
) -> Result<Vec<(T, T)>> {
    let e = &cycle.elements;
    if e.len() < 2 {
        return Err(Error::CycleTooShort(e.len()));
    }
    Ok(match order {
        TranspositionOrder::Left => e.windows(2).map(|w| (w[0], w[1])).collect(),
        TranspositionOrder::Right => e[1..].iter().rev().map(|&b| (e[0], b)).collect(),
    })
}

/// Product of transpositions (leftmost factor acts last) as a permutation of
/// `0..n`.
pub fn transpositions_to_permutation(ts: &[(usize, usize)], n: usize) -> Result<BitPermutation> {
    ts.iter().try_fold(BitPermutation::identity(n), |acc, &(a, b)| {
        Ok(acc.compose(&BitPermutation::transposition(a, b, n)?))
    })
}

fn check_pair(alpha: usize, beta: usize, nbits: usize) -> Result<()> {
    for bit in [alpha, beta] {
        if bit >= nbits {
            return Err(Error::BitOutOfRange { bit, nbits });
        }
    }
    if alpha == beta {
        return Err(Error::SameBit(alpha));
    }
    Ok(())
}

/// `(a1 b1, a2 b2)_{α,β}`: swaps every pair of states that agree outside bits
/// `α`, `β` and carry `(a1, b1)` resp. `(a2, b2)` there.
pub fn state_transposition(
    (a1, b1): (bool, bool),
    (a2, b2): (bool, bool),
    alpha: usize,
    beta: usize,
    nbits: usize,
) -> Result<ComplexMatrix> {
    check_pair(alpha, beta, nbits)?;
    if (a1, b1) == (a2, b2) {
        return Err(Error::IdenticalStates);
    }
    let mask = (1usize << alpha) | (1usize << beta);
    let pattern = |a: bool, b: bool| (usize::from(a) << alpha) | (usize::from(b) << beta);
    let (s1, s2) = (pattern(a1, b1), pattern(a2, b2));
    let n = 1usize << nbits;
    let mut m = ComplexMatrix::zeros(n);
    for x in 0..n {
        let rest = x & !mask;
        let y = match x & mask {
            s if s == s1 => rest | s2,
            s if s == s2 => rest | s1,
            _ => x,
        };
        m[(y, x)] = ONE;
    }
    Ok(m)
}

/// `σx(target)^{n(control)}` for `value = true`, `σx(target)^{n̄(control)}`
/// otherwise.
pub fn cnot_matrix(control: usize, value: bool, target: usize, nbits: usize) -> Result<ComplexMatrix> {
    if control == target {
        return Err(Error::ControlIsTarget(control));
    }
    state_transposition((value, false), (value, true), control, target, nbits)
}

/// Exchanger `E(α, β) = (01, 10)_{α,β}`, an exchange of bit positions.
pub fn exchanger_matrix(alpha: usize, beta: usize, nbits: usize) -> Result<ComplexMatrix> {
    state_transposition((false, true), (true, false), alpha, beta, nbits)
}

/// A c-not descriptor: flip `target` when `control` has value `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CnotSpec {
    pub control: usize,
    pub value: bool,
    pub target: usize,
}

impl CnotSpec {
    pub fn new(control: usize, value: bool, target: usize) -> Self {
        CnotSpec { control, value, target }
    }

    pub fn matrix(&self, nbits: usize) -> Result<ComplexMatrix> {
        cnot_matrix(self.control, self.value, self.target, nbits)
    }
}

/// `E(α, β) = σx(α)^{n(β)} σx(β)^{n(α)} σx(α)^{n(β)}`.
///
/// The sequence is a palindrome, so it reads the same as a matrix product and
/// as an application order.
pub fn exchanger_as_cnots(alpha: usize, beta: usize) -> Result<[CnotSpec; 3]> {
    if alpha == beta {
        return Err(Error::SameBit(alpha));
    }
    let outer = CnotSpec::new(beta, true, alpha);
    Ok([outer, CnotSpec::new(alpha, true, beta), outer])
}

/// The renaming that moves a rotation from bit `nbits − 1` down to bit
/// `nbits − 1 − level`:
/// `E(nb−k−1, nb−k) ⋯ E(nb−3, nb−2) E(nb−2, nb−1)`, identity for `k = 0` or
/// `nb = 1`.
pub fn alias_permutation(level: usize, nbits: usize) -> Result<BitPermutation> {
    if nbits == 0 || level >= nbits {
        return Err(Error::LevelOutOfRange { level, nbits });
    }
    let mut p = BitPermutation::identity(nbits);
    if level == 0 || nbits == 1 {
        return Ok(p);
    }
    for low in nbits - level - 1..nbits - 1 {
        p = p.compose(&BitPermutation::transposition(low, low + 1, nbits)?);
    }
    Ok(p)
}
