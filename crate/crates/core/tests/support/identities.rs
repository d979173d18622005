//! Matrix identities of the Hadamard, projector and two-bit permutation
//! algebra. Every check returns the worst Frobenius deviation it saw.

#![allow(dead_code)]

use csdc_core::bits::{cnot_matrix, exchanger_matrix, state_transposition};
use csdc_core::numkit::gates::{p0, p1, sigma_x};
use csdc_core::numkit::{
    build_projector, conjugate, embed, exp_projector_sum, frobenius_distance, tensor, BitString,
};
use csdc_core::walsh::hadamard_matrix;
use csdc_core::{ComplexMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-12;

pub type Check = fn() -> f64;

pub const ALL: &[(&str, Check)] = &[
    ("hadamard symmetric", hadamard_symmetric),
    ("hadamard squares to scaled identity", hadamard_square),
    ("projectors resolve the identity", projector_completeness),
    ("exponential of orthogonal projector sum", projector_exponential),
    ("two-bit transpositions", two_bit_transpositions),
    ("exchanger as three c-nots (two bits)", exchanger_two_bit_forms),
    ("exchanger involution (two bits)", exchanger_two_bit_involution),
    ("exchanger swaps tensor factors", exchanger_swaps_tensor_factors),
    ("twin-to-twin-er as three c-nots", twin_to_twin_er_forms),
    ("exchanger as three c-nots (any bits)", exchanger_general_forms),
    ("exchanger involution (any bits)", exchanger_general_involution),
    ("exchanger renames bit positions", exchanger_renames_bits),
    ("exchanger relabels a c-not chain", exchanger_relabels_chain),
    ("exchanger from adjacent exchangers", exchanger_from_adjacent),
];

fn d(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    frobenius_distance(a, b).expect("same dimension")
}

fn cnot(control: usize, value: bool, target: usize, nb: usize) -> ComplexMatrix {
    cnot_matrix(control, value, target, nb).unwrap()
}

fn ex(alpha: usize, beta: usize, nb: usize) -> ComplexMatrix {
    exchanger_matrix(alpha, beta, nb).unwrap()
}

fn product(ms: &[ComplexMatrix]) -> ComplexMatrix {
    ms.iter().skip(1).fold(ms[0].clone(), |acc, m| &acc * m)
}

fn random_2x2(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(2, |_, _| C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
}

fn bit_pairs(nb: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..nb).flat_map(move |a| (0..nb).filter(move |&b| b != a).map(move |b| (a, b)))
}

pub fn hadamard_symmetric() -> f64 {
    (1..=4)
        .map(|r| {
            let h = hadamard_matrix(r).unwrap();
            d(&h.transpose(), &h)
        })
        .fold(0.0, f64::max)
}

/// The identity has dimension `2^r`, matching "divided by however many rows".
pub fn hadamard_square() -> f64 {
    (1..=4)
        .map(|r| {
            let h = hadamard_matrix(r).unwrap();
            let n = 1usize << r;
            d(&(&h * &h), &ComplexMatrix::identity(n).scale(C64::new(n as f64, 0.0)))
        })
        .fold(0.0, f64::max)
}

pub fn projector_completeness() -> f64 {
    (1..=4)
        .map(|nb| {
            let n = 1usize << nb;
            let sum = BitString::all(nb).fold(ComplexMatrix::zeros(n), |acc, va| &acc + &build_projector(va));
            d(&sum, &ComplexMatrix::identity(n))
        })
        .fold(0.0, f64::max)
}

/// Scaling and squaring with a Taylor polynomial; independent of the
/// projector formula.
pub fn expm(a: &ComplexMatrix) -> ComplexMatrix {
    let norm = a.frobenius_norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a.scale(C64::new(0.5f64.powi(squarings as i32), 0.0));
    let n = a.dim();
    let mut term = ComplexMatrix::identity(n);
    let mut sum = ComplexMatrix::identity(n);
    for k in 1..=30 {
        term = (&term * &scaled).scale(C64::new(1.0 / k as f64, 0.0));
        sum = &sum + &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

pub fn projector_exponential() -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for nb in 1..=4 {
        for _ in 0..5 {
            // A random subset of basis projectors, so the compensating term matters.
            let ps: Vec<ComplexMatrix> = BitString::all(nb)
                .filter(|_| rng.gen_bool(0.6))
                .map(build_projector)
                .collect();
            if ps.is_empty() {
                continue;
            }
            let alphas: Vec<C64> = ps
                .iter()
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-3.0..3.0)))
                .collect();
            let arg = ps
                .iter()
                .zip(&alphas)
                .fold(ComplexMatrix::zeros(1 << nb), |acc, (p, &a)| &acc + &p.scale(a));
            worst = worst.max(d(&exp_projector_sum(&ps, &alphas).unwrap(), &expm(&arg)));
        }
    }
    worst
}

pub fn two_bit_transpositions() -> f64 {
    let i2 = ComplexMatrix::identity(2);
    let (sx, pz, po) = (sigma_x(), p0(), p1());
    let t = |a: (bool, bool), b: (bool, bool)| state_transposition(a, b, 1, 0, 2).unwrap();
    let (f, tr) = (false, true);
    let swap = |i: usize, j: usize| {
        ComplexMatrix::from_fn(4, |r, c| {
            let src = if c == i { j } else if c == j { i } else { c };
            C64::new(if r == src { 1.0 } else { 0.0 }, 0.0)
        })
    };
    let cases = [
        // (00, 01) = P0⊗σx + P1⊗I = flip bit 0 when bit 1 is 0
        (t((f, f), (f, tr)), &tensor(&pz, &sx) + &tensor(&po, &i2), cnot(1, false, 0, 2)),
        // (00, 10) = I⊗P1 + σx⊗P0
        (t((f, f), (tr, f)), &tensor(&i2, &po) + &tensor(&sx, &pz), cnot(0, false, 1, 2)),
        // (01, 11) = I⊗P0 + σx⊗P1
        (t((f, tr), (tr, tr)), &tensor(&i2, &pz) + &tensor(&sx, &po), cnot(0, true, 1, 2)),
        // (10, 11) = P0⊗I + P1⊗σx
        (t((tr, f), (tr, tr)), &tensor(&pz, &i2) + &tensor(&po, &sx), cnot(1, true, 0, 2)),
        (t((f, f), (tr, tr)), swap(0, 3), swap(0, 3)),
        (t((f, tr), (tr, f)), swap(1, 2), swap(1, 2)),
    ];
    cases
        .iter()
        .map(|(a, b, c)| d(a, b).max(d(a, c)))
        .fold(0.0, f64::max)
}

pub fn exchanger_two_bit_forms() -> f64 {
    let e = ex(0, 1, 2);
    let t = |a: (bool, bool), b: (bool, bool)| state_transposition(a, b, 1, 0, 2).unwrap();
    let (f, tr) = (false, true);
    let forms = [
        product(&[cnot(1, f, 0, 2), cnot(0, f, 1, 2), cnot(1, f, 0, 2)]),
        product(&[cnot(1, tr, 0, 2), cnot(0, tr, 1, 2), cnot(1, tr, 0, 2)]),
        product(&[cnot(0, f, 1, 2), cnot(1, f, 0, 2), cnot(0, f, 1, 2)]),
        product(&[cnot(0, tr, 1, 2), cnot(1, tr, 0, 2), cnot(0, tr, 1, 2)]),
        product(&[t((f, tr), (f, f)), t((f, f), (tr, f)), t((f, tr), (f, f))]),
        product(&[t((tr, f), (tr, tr)), t((tr, tr), (f, tr)), t((tr, f), (tr, tr))]),
        product(&[t((tr, f), (f, f)), t((f, f), (f, tr)), t((tr, f), (f, f))]),
        product(&[t((f, tr), (tr, tr)), t((tr, tr), (tr, f)), t((f, tr), (tr, tr))]),
    ];
    forms.iter().map(|m| d(m, &e)).fold(0.0, f64::max)
}

fn involution(alpha: usize, beta: usize, nb: usize) -> f64 {
    let e = ex(alpha, beta, nb);
    let n = 1usize << nb;
    d(&e.transpose(), &e)
        .max(d(&e.adjoint(), &e))
        .max(d(&ex(beta, alpha, nb), &e))
        .max(d(&(&e * &e), &ComplexMatrix::identity(n)))
}

pub fn exchanger_two_bit_involution() -> f64 {
    involution(0, 1, 2)
}

pub fn exchanger_swaps_tensor_factors() -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let e = ex(1, 0, 2);
    (0..10)
        .map(|_| {
            let (x, y) = (random_2x2(&mut rng), random_2x2(&mut rng));
            d(&conjugate(&e, &tensor(&x, &y)).unwrap(), &tensor(&y, &x))
        })
        .fold(0.0, f64::max)
}

pub fn twin_to_twin_er_forms() -> f64 {
    let twin = state_transposition((false, false), (true, true), 1, 0, 2).unwrap();
    let (f, tr) = (false, true);
    let forms = [
        product(&[cnot(1, f, 0, 2), cnot(0, tr, 1, 2), cnot(1, f, 0, 2)]),
        product(&[cnot(1, tr, 0, 2), cnot(0, f, 1, 2), cnot(1, tr, 0, 2)]),
        product(&[cnot(0, f, 1, 2), cnot(1, tr, 0, 2), cnot(0, f, 1, 2)]),
        product(&[cnot(0, tr, 1, 2), cnot(1, f, 0, 2), cnot(0, tr, 1, 2)]),
    ];
    forms.iter().map(|m| d(m, &twin)).fold(0.0, f64::max)
}

pub fn exchanger_general_forms() -> f64 {
    let mut worst: f64 = 0.0;
    for nb in 2..=4 {
        for (a, b) in bit_pairs(nb) {
            let e = ex(a, b, nb);
            for v in [true, false] {
                let m = product(&[cnot(b, v, a, nb), cnot(a, v, b, nb), cnot(b, v, a, nb)]);
                worst = worst.max(d(&m, &e));
            }
        }
    }
    worst
}

pub fn exchanger_general_involution() -> f64 {
    (2..=4)
        .flat_map(|nb| bit_pairs(nb).map(move |(a, b)| involution(a, b, nb)))
        .fold(0.0, f64::max)
}

pub fn exchanger_renames_bits() -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(311);
    let mut worst: f64 = 0.0;
    for nb in 2..=4 {
        for (a, b) in bit_pairs(nb) {
            let (x, y) = (random_2x2(&mut rng), random_2x2(&mut rng));
            let xy = &embed(&x, a, nb).unwrap() * &embed(&y, b, nb).unwrap();
            let yx = &embed(&x, b, nb).unwrap() * &embed(&y, a, nb).unwrap();
            worst = worst.max(d(&conjugate(&ex(a, b, nb), &xy).unwrap(), &yx));
        }
    }
    worst
}

pub fn exchanger_relabels_chain() -> f64 {
    let chain = product(&[cnot(1, true, 0, 4), cnot(0, true, 2, 4), cnot(2, true, 3, 4)]);
    let renamed = product(&[cnot(1, true, 2, 4), cnot(2, true, 0, 4), cnot(0, true, 3, 4)]);
    d(&conjugate(&ex(2, 0, 4), &chain).unwrap(), &renamed)
}

pub fn exchanger_from_adjacent() -> f64 {
    (3..=4)
        .map(|nb| d(&ex(2, 0, nb), &product(&[ex(2, 1, nb), ex(1, 0, nb), ex(2, 1, nb)])))
        .fold(0.0, f64::max)
}
