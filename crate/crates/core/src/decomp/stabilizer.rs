use serde::Serialize;

use crate::f2::{F2Matrix, F2Vector};
use crate::pauli::{max_isotropic_within, Pauli, PauliSubgroup};
use crate::permgate::{PermutationGate, SignedPermGate};

/// `S_X = {u : πXᵘπ⁻¹ is Pauli}` and `S_Z = {v : πZᵛπ⁻¹ is Pauli}`, each as
/// a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationStabilizer {
    pub n: usize,
    pub s_x: Vec<F2Vector>,
    pub s_z: Vec<F2Vector>,
}

impl ConjugationStabilizer {
    /// The stabilizer as Paulis, Z-type ones first; a basis of
    /// `S_X ⊕ S_Z ⊆ F₂²ⁿ`.
    pub fn paulis(&self) -> Vec<Pauli> {
        self.s_z
            .iter()
            .map(|&v| Pauli::from_z(v))
            .chain(self.s_x.iter().map(|&u| Pauli::from_x(u)))
            .collect()
    }
}

fn reduced(n: usize, vs: Vec<F2Vector>) -> Vec<F2Vector> {
    if vs.is_empty() {
        return vs;
    }
    let (m, pivots) = F2Matrix::from_rows(n, vs).rref();
    m.rows()[..pivots.len()].to_vec()
}

/// `π(π⁻¹(v) + u) = v + c` for a constant `c`, checked with early exit.
fn x_conjugate_is_translation(pi: &PermutationGate, inv: &PermutationGate, u: usize) -> bool {
    let c = pi.apply(inv.apply(0) ^ u);
    (1..1usize << pi.n()).all(|v| pi.apply(inv.apply(v) ^ u) ^ v == c)
}

pub fn conjugation_stabilizer(pi: &PermutationGate) -> ConjugationStabilizer {
    let n = pi.n();
    let inv = pi.inverse();

    // S_X: scan every u, skipping those already spanned.
    let mut slots = vec![0usize; n];
    let mut s_x = Vec::new();
    for u in 1..1usize << n {
        let mut r = u;
        for b in (0..n).rev() {
            if r >> b & 1 == 1 && slots[b] != 0 {
                r ^= slots[b];
            }
        }
        if r == 0 || !x_conjugate_is_translation(pi, &inv, u) {
            continue;
        }
        slots[usize::BITS as usize - 1 - r.leading_zeros() as usize] = r;
        s_x.push(F2Vector::from_bits(n, u as u32));
    }

    // S_Z: v·π⁻¹ is affine iff the degree ≥ 2 parts of the chosen
    // coordinates cancel, so S_Z is a kernel.
    let nonlinear: Vec<Vec<u64>> = inv
        .polynomial_representation()
        .iter()
        .map(|p| {
            let mut words = Vec::new();
            let table = p.coefficients();
            let mut word = 0u64;
            for m in 0..table.len() {
                if m.count_ones() >= 2 && table.get(m) {
                    word |= 1 << (m % 64);
                }
                if m % 64 == 63 || m + 1 == table.len() {
                    words.push(word);
                    word = 0;
                }
            }
            words
        })
        .collect();
    let mut pivots: Vec<(usize, Vec<u64>, u32)> = Vec::new();
    let mut s_z = Vec::new();
    for (i, row) in nonlinear.into_iter().enumerate() {
        let mut row = row;
        let mut combo = 1u32 << (n - 1 - i);
        for (p, prow, pcombo) in &pivots {
            if row[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(prow) {
                    *a ^= b;
                }
                combo ^= pcombo;
            }
        }
        match row.iter().enumerate().find(|(_, w)| **w != 0) {
            Some((wi, w)) => pivots.push((wi * 64 + w.trailing_zeros() as usize, row, combo)),
            None => s_z.push(F2Vector::from_bits(n, combo)),
        }
    }

    ConjugationStabilizer {
        n,
        s_x: reduced(n, s_x),
        s_z: reduced(n, s_z),
    }
}

/// A maximal abelian `A` whose conjugate `πAπ⁻¹` is again a Pauli subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiCliffordCertificate {
    pub subgroup: PauliSubgroup,
    /// Generator-by-generator conjugates of `subgroup`.
    pub image: PauliSubgroup,
}

/// Looks for a Lagrangian inside `S_X ⊕ S_Z`.
pub fn is_semi_clifford(pi: &PermutationGate) -> Option<SemiCliffordCertificate> {
    let n = pi.n();
    let stab = conjugation_stabilizer(pi);
    let iso = max_isotropic_within(n, &stab.paulis()).expect("stabilizer basis is independent");
    if iso.dim < n {
        return None;
    }
    let signed = SignedPermGate::from(pi.clone());
    let image: Vec<Pauli> = iso
        .basis
        .iter()
        .map(|p| {
            signed
                .conjugate_pauli(p)
                .as_pauli()
                .expect("stabilizer element conjugates to a Pauli")
        })
        .collect();
    let subgroup = PauliSubgroup::new(n, iso.basis).expect("isotropic basis commutes");
    let image = PauliSubgroup::new(n, image).expect("conjugation preserves commutation");
    Some(SemiCliffordCertificate { subgroup, image })
}
