//! Inputs shared by the benchmarks.

use clifperm::{fixtures, random, PermutationGate, SignedPermGate};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn r() -> PermutationGate {
    PermutationGate::from_circuit(&fixtures::r()).expect("R is a permutation")
}

pub fn g() -> SignedPermGate {
    SignedPermGate::from_circuit(&fixtures::g()).expect("G is a signed permutation")
}

/// Reproducible semi-Clifford permutations on `n` qubits.
pub fn semi_clifford_inputs(n: usize, count: usize) -> Vec<PermutationGate> {
    let mut rng = StdRng::seed_from_u64(n as u64);
    (0..count)
        .map(|_| random::semi_clifford_perm(&mut rng, n, 2))
        .collect()
}
