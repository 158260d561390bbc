//! Random instances for tests, benchmarks and sampling.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::f2::{F2Matrix, F2Vector};
use crate::pauli::Pauli;
use crate::permgate::{Circuit, Gate, PermutationGate};

pub fn vector(rng: &mut impl Rng, n: usize) -> F2Vector {
    F2Vector::from_bits(n, rng.gen_range(0..1u32 << n))
}

pub fn nonzero_vector(rng: &mut impl Rng, n: usize) -> F2Vector {
    assert!(n > 0);
    F2Vector::from_bits(n, rng.gen_range(1..1u32 << n))
}

pub fn matrix(rng: &mut impl Rng, n: usize) -> F2Matrix {
    F2Matrix::from_rows(n, (0..n).map(|_| vector(rng, n)).collect())
}

/// Rejection-sampled; roughly 29% of square matrices over F₂ are invertible.
pub fn invertible_matrix(rng: &mut impl Rng, n: usize) -> F2Matrix {
    loop {
        let m = matrix(rng, n);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn strictly_lower_triangular(rng: &mut impl Rng, n: usize) -> F2Matrix {
    let rows = (0..n)
        .map(|i| {
            let mut r = F2Vector::zero(n);
            for j in 0..i {
                r.set(j, rng.gen());
            }
            r
        })
        .collect();
    F2Matrix::from_rows(n, rows)
}

/// `count` matrices `P·Bᵢ·P⁻¹` where every `Bᵢ` maps into the span of the
/// last `n − h` coordinates and kills it, so all products `BᵢBⱼ` vanish.
pub fn commuting_square_zero_family(rng: &mut impl Rng, n: usize, count: usize) -> Vec<F2Matrix> {
    let h = rng.gen_range(0..=n);
    let p = invertible_matrix(rng, n);
    let p_inv = p.inverse().expect("invertible");
    (0..count)
        .map(|_| {
            let mut b = F2Matrix::zero(n, n);
            for i in h..n {
                for j in 0..h {
                    b.set(i, j, rng.gen());
                }
            }
            &(&p * &b) * &p_inv
        })
        .collect()
}

pub fn affine(rng: &mut impl Rng, n: usize) -> PermutationGate {
    let m = invertible_matrix(rng, n);
    PermutationGate::affine(&m, &vector(rng, n)).expect("invertible")
}

pub fn pauli(rng: &mut impl Rng, n: usize) -> Pauli {
    Pauli::new(rng.gen_range(0..4), vector(rng, n), vector(rng, n))
}

fn distinct(rng: &mut impl Rng, n: usize, k: usize) -> Vec<usize> {
    let mut qs: Vec<usize> = (1..=n).collect();
    qs.shuffle(rng);
    qs.truncate(k);
    qs
}

/// Up to `len` C*X gates whose targets and controls come from disjoint
/// random qubit sets, each with at most `max_controls` controls.
pub fn mismatch_free(rng: &mut impl Rng, n: usize, max_controls: usize, len: usize) -> Circuit {
    let mut qs: Vec<usize> = (1..=n).collect();
    qs.shuffle(rng);
    let t = rng.gen_range(1..=n);
    let (targets, controls) = qs.split_at(t);
    let mut c = Circuit::empty(n).expect("n within bounds");
    for _ in 0..len {
        let k = rng.gen_range(0..=max_controls.min(controls.len()));
        let mut cs: Vec<usize> = controls.choose_multiple(rng, k).copied().collect();
        cs.sort_unstable();
        let target = *targets.choose(rng).expect("nonempty");
        c.push(Gate::cx(&cs, target)).expect("valid gate");
    }
    c
}

/// `φ₁ · μ · φ₂` with random affine `φ`s around a mismatch-free product.
pub fn semi_clifford_perm(rng: &mut impl Rng, n: usize, max_controls: usize) -> PermutationGate {
    let len = rng.gen_range(0..=2 * n);
    let mu = PermutationGate::from_circuit(&mismatch_free(rng, n, max_controls, len))
        .expect("C*X gates only");
    affine(rng, n).compose(&mu.compose(&affine(rng, n)))
}

/// A random circuit of X, CNOT, TOF, Z, CZ, CCZ, SWAP and CSWAP gates.
pub fn signed_perm_circuit(rng: &mut impl Rng, n: usize, len: usize) -> Circuit {
    let mut c = Circuit::empty(n).expect("n within bounds");
    for _ in 0..len {
        let kind = rng.gen_range(0..8);
        let arity = [1, 2, 3, 1, 2, 3, 2, 3][kind];
        if arity > n {
            continue;
        }
        let q = distinct(rng, n, arity);
        let g = match kind {
            0..=2 => Gate::cx(&q[..arity - 1], q[arity - 1]),
            3..=5 => Gate::cz(&q),
            6 => Gate::swap(q[0], q[1]),
            _ => Gate::cswap(q[0], q[1], q[2]),
        };
        c.push(g).expect("valid gate");
    }
    c
}

/// A random circuit of X, CNOT, SWAP, Z and CZ gates.
pub fn clifford_circuit(rng: &mut impl Rng, n: usize, len: usize) -> Circuit {
    let mut c = Circuit::empty(n).expect("n within bounds");
    for _ in 0..len {
        let kind = rng.gen_range(0..5);
        let arity = [1, 2, 2, 1, 2][kind];
        if arity > n {
            continue;
        }
        let q = distinct(rng, n, arity);
        let g = match kind {
            0 => Gate::x(q[0]),
            1 => Gate::cnot(q[0], q[1]),
            2 => Gate::swap(q[0], q[1]),
            _ => Gate::cz(&q),
        };
        c.push(g).expect("valid gate");
    }
    c
}
