use super::affine::clifford_perm_from_x_images;
use super::stabilizer::{conjugation_stabilizer, is_semi_clifford};
use super::{DecompError, Decomposition};
use crate::error::{invariant, Result};
use crate::f2::{F2Matrix, F2Vector};
use crate::pauli::{extend_to_maximal_abelian, Pauli, PauliSubgroup};
use crate::permgate::{Circuit, Gate, PermutationGate, SignedPermGate};

fn conjugate(pi: &PermutationGate, p: &Pauli) -> Option<Pauli> {
    SignedPermGate::from(pi.clone())
        .conjugate_pauli(p)
        .as_pauli()
}

/// `π = φ₁·μ·φ₂` with `μ` a mismatch-free product of C*X gates whose
/// targets are qubits `1..=m` and whose controls lie in `m+1..=n`, where
/// `m = dim S_X`.
pub fn mismatch_free_decomposition(pi: &PermutationGate) -> Result<Decomposition, DecompError> {
    let n = pi.n();

    // Move S_X onto ⟨X₁..X_m⟩.
    let stab = conjugation_stabilizer(pi);
    let m = stab.s_x.len();
    let x_basis: Vec<Pauli> = stab.s_x.iter().map(|&u| Pauli::from_x(u)).collect();
    let nu = clifford_perm_from_x_images(n, &x_basis)?;
    let pi1 = pi.compose(&nu);

    // A maximal abelian subgroup around ⟨X₁..X_m⟩ inside the stabilizer.
    let cert = is_semi_clifford(&pi1).ok_or(DecompError::NotSemiClifford)?;
    let xs = PauliSubgroup::new(n, (1..=m).map(|q| Pauli::x_on(n, q)))?;
    let extended = extend_to_maximal_abelian(&cert.subgroup, &xs)?;
    let expected = PauliSubgroup::new(
        n,
        (1..=m)
            .map(|q| Pauli::x_on(n, q))
            .chain((m + 1..=n).map(|q| Pauli::z_on(n, q))),
    )?;
    if !extended.equals_up_to_phase(&expected) {
        return Err(invariant(format!("extended subgroup {extended} is not {expected}")).into());
    }

    // Undo the action on X₁..X_m.
    let x_images = (1..=m)
        .map(|q| conjugate(&pi1, &Pauli::x_on(n, q)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| invariant("X conjugate left the Pauli group"))?;
    let nu2 = clifford_perm_from_x_images(n, &x_images)?;
    let pi2 = nu2.inverse().compose(&pi1);

    // Z_j ↦ ε_j Z^{w_j} for j > m; absorb the signs into χ.
    let mut chi = F2Vector::zero(n);
    let mut w = Vec::new();
    for j in m + 1..=n {
        let c = conjugate(&pi2, &Pauli::z_on(n, j))
            .filter(|c| c.x().is_zero() && c.phase() % 2 == 0)
            .ok_or_else(|| invariant(format!("Z{j} conjugate is not a signed Z-type Pauli")))?;
        if (0..m).any(|i| c.z().get(i)) {
            return Err(invariant(format!("Z{j} conjugate fails to commute with X1..Xm")).into());
        }
        if c.phase() == 2 {
            chi.set(j - 1, true);
        }
        w.push(c.z());
    }
    let chi_gate = PermutationGate::translation(&chi);
    let pi3 = pi2.compose(&chi_gate);

    // ϖ: v ↦ Mᵀv with Meᵢ = eᵢ (i ≤ m), Me_j = w_j.
    let columns: Vec<F2Vector> = (0..m).map(|i| F2Vector::unit(n, i)).chain(w).collect();
    let varpi = if n == 0 {
        PermutationGate::identity(0)
    } else {
        let mt = F2Matrix::from_columns(&columns).transpose();
        PermutationGate::affine(&mt, &F2Vector::zero(n))?
    };
    let pi4 = varpi.compose(&pi3);

    // Coordinate j ≤ m of π₄ is a_j + p_j(a_{m+1}, …, a_n).
    let polys = pi4.polynomial_representation();
    let low = (1usize << (n - m)) - 1;
    let mut circuit = Circuit::empty(n)?;
    for (j, poly) in polys.iter().enumerate() {
        let own = 1usize << (n - 1 - j);
        for mask in poly.monomials() {
            if mask == own {
                continue;
            }
            if j >= m || mask & !low != 0 {
                return Err(invariant(format!("coordinate {} has stray monomial", j + 1)).into());
            }
            circuit.push(Gate::cx(&poly.variables_of(mask), j + 1))?;
        }
        if !poly.coefficient(own) {
            return Err(invariant(format!("coordinate {} lost its own variable", j + 1)).into());
        }
    }

    let decomposition = Decomposition {
        left: nu2.compose(&varpi.inverse()),
        middle: circuit,
        right: chi_gate.compose(&nu.inverse()),
    };
    decomposition.verify(pi)?;
    Ok(decomposition)
}

/// The hierarchy level of a semi-Clifford permutation: one more than the
/// largest control count in its mismatch-free middle factor, or 1 / 2 for
/// Pauli / Clifford gates.
pub fn semi_clifford_level(pi: &PermutationGate) -> Result<usize, DecompError> {
    let d = mismatch_free_decomposition(pi)?;
    Ok(match d.max_controls() {
        Some(c) if c >= 2 => c + 1,
        _ if pi.as_translation().is_some() => 1,
        _ => 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str) -> PermutationGate {
        PermutationGate::from_circuit(&Circuit::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn identity_decomposes_trivially() {
        let d = mismatch_free_decomposition(&PermutationGate::identity(3)).unwrap();
        assert!(d.middle.is_empty());
        assert!(d.left.is_identity() && d.right.is_identity());
    }

    #[test]
    fn toffoli_decomposes() {
        let tof = perm("qubits 3\nTOF 1 2 3");
        let d = mismatch_free_decomposition(&tof).unwrap();
        assert_eq!(d.middle.len(), 1);
        assert_eq!(d.max_controls(), Some(2));
        assert!(crate::permgate::is_mismatch_free(&d.middle).unwrap());
    }

    #[test]
    fn levels() {
        assert_eq!(semi_clifford_level(&perm("qubits 2\nCNOT 1 2")).unwrap(), 2);
        assert_eq!(semi_clifford_level(&perm("qubits 2\nX 2")).unwrap(), 1);
        assert_eq!(
            semi_clifford_level(&perm("qubits 3\nTOF 1 2 3")).unwrap(),
            3
        );
        assert_eq!(
            semi_clifford_level(&perm("qubits 4\nCX 1 2 3 4")).unwrap(),
            4
        );
    }

    #[test]
    fn conjugated_toffolis() {
        let pi = perm("qubits 4\nCNOT 1 3\nX 2\nTOF 1 2 4\nTOF 1 2 3\nSWAP 1 4\nCNOT 4 2");
        let d = mismatch_free_decomposition(&pi).unwrap();
        assert_eq!(d.recompose().unwrap(), pi);
    }
}
