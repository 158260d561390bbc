use crate::error::{invariant, precondition, Result};
use crate::f2::{F2Matrix, F2Vector};
use crate::pauli::Pauli;
use crate::permgate::{Circuit, Gate, PermutationGate};

/// Extends independent `vectors` to a basis of F₂ⁿ with the unit vectors of
/// the non-pivot columns.
pub fn extend_to_basis(n: usize, vectors: &[F2Vector]) -> Result<Vec<F2Vector>> {
    if vectors.is_empty() {
        return Ok((0..n).map(|i| F2Vector::unit(n, i)).collect());
    }
    let (_, pivots) = F2Matrix::from_rows(n, vectors.to_vec()).rref();
    if pivots.len() != vectors.len() {
        return Err(precondition("vectors are linearly dependent"));
    }
    let mut basis = vectors.to_vec();
    basis.extend(
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|c| F2Vector::unit(n, c)),
    );
    Ok(basis)
}

/// A linear permutation `ν` with `νXᵢν⁻¹ = X′ᵢ` for each given image
/// (phases are ignored). The images' X-parts must be independent and their
/// Z-parts zero.
pub fn clifford_perm_from_x_images(n: usize, images: &[Pauli]) -> Result<PermutationGate> {
    if images.iter().any(|p| p.n() != n || !p.z().is_zero()) {
        return Err(precondition("images must be X-type Paulis on n qubits"));
    }
    let us: Vec<F2Vector> = images.iter().map(Pauli::x).collect();
    let basis = extend_to_basis(n, &us)?;
    let m = if n == 0 {
        F2Matrix::identity(0)
    } else {
        F2Matrix::from_columns(&basis)
    };
    let nu = PermutationGate::affine(&m, &F2Vector::zero(n))?;
    let signed = nu.clone().into();
    for (i, p) in images.iter().enumerate() {
        let c = crate::permgate::conjugate_pauli(&signed, &Pauli::x_on(n, i + 1));
        if c.as_pauli().map(|q| q.x()) != Some(p.x()) {
            return Err(invariant(format!("conjugate of X{} is not {p}", i + 1)));
        }
    }
    Ok(nu)
}

/// CNOT and X gates realising an affine permutation `v ↦ Av + w`.
///
/// Gauss–Jordan elimination with row additions only reduces `A` to the
/// identity; each addition `row t += row c` is a `CNOT c t` acting after
/// the map, so the recorded additions reversed realise `A`.
pub fn affine_circuit(gate: &PermutationGate) -> Result<Circuit> {
    let n = gate.n();
    let (a, w) = gate
        .as_affine()
        .ok_or_else(|| precondition("gate is not affine"))?;
    let mut rows: Vec<F2Vector> = a.rows().to_vec();
    let mut ops = Vec::new();
    let mut add = |rows: &mut Vec<F2Vector>, t: usize, c: usize| {
        let rc = rows[c];
        rows[t] += rc;
        ops.push((t, c));
    };
    for c in 0..n {
        if !rows[c].get(c) {
            let r = (c + 1..n)
                .find(|&r| rows[r].get(c))
                .ok_or_else(|| invariant("affine map is singular"))?;
            add(&mut rows, c, r);
        }
        for r in 0..n {
            if r != c && rows[r].get(c) {
                add(&mut rows, r, c);
            }
        }
    }
    let mut circuit = Circuit::empty(n)?;
    for &(t, c) in ops.iter().rev() {
        circuit.push(Gate::cnot(c + 1, t + 1))?;
    }
    for i in w.ones() {
        circuit.push(Gate::x(i + 1))?;
    }
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_images_give_identity() {
        let images: Vec<Pauli> = (1..=3).map(|q| Pauli::x_on(3, q)).collect();
        assert!(clifford_perm_from_x_images(3, &images)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn two_qubit_image() {
        let nu = clifford_perm_from_x_images(2, &[Pauli::parse(2, "X1X2").unwrap()]).unwrap();
        let (m, w) = nu.as_affine().unwrap();
        assert!(w.is_zero());
        assert_eq!(m.column(0), F2Vector::from_bits(2, 0b11));
        assert_eq!(m.column(1), F2Vector::unit(2, 1));
    }

    #[test]
    fn dependent_images_rejected() {
        let p = Pauli::parse(3, "X1X2").unwrap();
        assert!(clifford_perm_from_x_images(3, &[p, p]).is_err());
        assert!(clifford_perm_from_x_images(3, &[Pauli::z_on(3, 1)]).is_err());
    }

    #[test]
    fn affine_synthesis_round_trips() {
        let m = F2Matrix::from_strs(&["011", "110", "101"]);
        assert!(!m.is_invertible());
        let m = F2Matrix::from_strs(&["011", "110", "111"]);
        let w = F2Vector::from_bits(3, 0b101);
        let g = PermutationGate::affine(&m, &w).unwrap();
        let c = affine_circuit(&g).unwrap();
        assert!(c
            .gates()
            .iter()
            .all(|g| g.as_cx().is_some_and(|(cs, _)| cs.len() <= 1)));
        assert_eq!(PermutationGate::from_circuit(&c).unwrap(), g);
    }
}
