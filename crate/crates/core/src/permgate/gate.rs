use serde::{Deserialize, Serialize};

use super::bitfn::{anf_of, AnfPolynomial, BitTable};
use super::circuit::{Circuit, Gate};
use crate::error::{precondition, Error, Result, MAX_QUBITS};
use crate::f2::{F2Matrix, F2Vector};
use crate::pauli::Pauli;

#[inline]
fn qubit_bit(n: usize, qubit: usize) -> usize {
    1 << (n - qubit)
}

/// A permutation of the 2ⁿ computational basis states; `table[x]` is the
/// image of basis index `x`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermutationGate {
    n: usize,
    table: Vec<u32>,
}

impl std::fmt::Debug for PermutationGate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermutationGate(n={}, {:?})",
            self.n,
            &self.table[..self.table.len().min(64)]
        )
    }
}

impl PermutationGate {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_QUBITS);
        Self {
            n,
            table: (0..1u32 << n).collect(),
        }
    }

    pub fn from_table(n: usize, table: Vec<u32>) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::DimensionTooLarge {
                what: "permutation gate",
                n,
                limit: MAX_QUBITS,
            });
        }
        if table.len() != 1 << n {
            return Err(precondition(format!(
                "table length {} is not 2^{n}",
                table.len()
            )));
        }
        let mut seen = vec![false; table.len()];
        for &y in &table {
            let y = y as usize;
            if y >= seen.len() || seen[y] {
                return Err(precondition("table is not a bijection"));
            }
            seen[y] = true;
        }
        Ok(Self { n, table })
    }

    pub(crate) fn from_table_unchecked(n: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), 1 << n);
        Self { n, table }
    }

    /// `|v⟩ ↦ |Mv + w⟩`. `M` must be invertible.
    pub fn affine(m: &F2Matrix, w: &F2Vector) -> Result<Self> {
        let n = w.len();
        if m.nrows() != n || m.ncols() != n || !m.is_invertible() {
            return Err(precondition("affine map needs an invertible n x n matrix"));
        }
        let table = (0..1u32 << n)
            .map(|x| (m.mul_vec(&F2Vector::from_bits(n, x)) + *w).bits())
            .collect();
        Ok(Self { n, table })
    }

    /// `|v⟩ ↦ |v + u⟩`, the gate `Xᵘ`.
    pub fn translation(u: &F2Vector) -> Self {
        let n = u.len();
        Self {
            n,
            table: (0..1u32 << n).map(|x| x ^ u.bits()).collect(),
        }
    }

    /// Builds the gate of a circuit made only of controlled-X and swap-type
    /// gates.
    pub fn from_circuit(circuit: &Circuit) -> Result<Self> {
        SignedPermGate::from_circuit(circuit)?
            .into_permutation()
            .ok_or_else(|| Error::UnsupportedGate("circuit has diagonal sign gates".into()))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn inverse(&self) -> Self {
        let mut table = vec![0u32; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y as usize] = x as u32;
        }
        Self { n: self.n, table }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationGate) -> Self {
        assert_eq!(self.n, other.n, "qubit count mismatch");
        Self {
            n: self.n,
            table: other
                .table
                .iter()
                .map(|&y| self.table[y as usize])
                .collect(),
        }
    }

    /// Output bit of a 1-based qubit as a function of the input.
    pub fn coordinate(&self, qubit: usize) -> BitTable {
        let shift = self.n - qubit;
        BitTable::from_fn(self.n, |x| self.table[x] >> shift & 1 == 1)
    }

    /// `(π₁, …, πₙ)`: the ANF of every output coordinate.
    pub fn polynomial_representation(&self) -> Vec<AnfPolynomial> {
        (1..=self.n).map(|q| anf_of(&self.coordinate(q))).collect()
    }

    /// Recovers `(M, w)` with `π(v) = Mv + w` when the gate is affine.
    pub fn as_affine(&self) -> Option<(F2Matrix, F2Vector)> {
        let n = self.n;
        let w = F2Vector::from_bits(n, self.table[0]);
        let columns: Vec<F2Vector> = (0..n)
            .map(|i| F2Vector::from_bits(n, self.table[qubit_bit(n, i + 1)]) + w)
            .collect();
        let m = if n == 0 {
            F2Matrix::identity(0)
        } else {
            F2Matrix::from_columns(&columns)
        };
        // Mv + w is linear in v, so checking by accumulation is exact.
        for x in 0..1usize << n {
            let mut expect = w.bits();
            for (i, c) in columns.iter().enumerate() {
                if x & qubit_bit(n, i + 1) != 0 {
                    expect ^= c.bits();
                }
            }
            if expect != self.table[x] {
                return None;
            }
        }
        Some((m, w))
    }

    pub fn is_affine(&self) -> bool {
        self.as_affine().is_some()
    }

    /// Some `u` with `π(v) = v + u` for every `v`.
    pub fn as_translation(&self) -> Option<F2Vector> {
        let u = self.table[0];
        self.table
            .iter()
            .enumerate()
            .all(|(x, &y)| x as u32 ^ u == y)
            .then(|| F2Vector::from_bits(self.n, u))
    }

    /// Acts as `self` on the first `n` qubits and trivially on `m` new ones
    /// appended after them.
    pub fn extend_with_inert_qubits(&self, m: usize) -> Result<Self> {
        let total = self.n + m;
        if total > MAX_QUBITS {
            return Err(Error::DimensionTooLarge {
                what: "inert-qubit extension",
                n: total,
                limit: MAX_QUBITS,
            });
        }
        let low = (1u32 << m) - 1;
        let table = (0..1u32 << total)
            .map(|x| (self.table[(x >> m) as usize] << m) | (x & low))
            .collect();
        Ok(Self { n: total, table })
    }
}

/// `|w⟩ ↦ iᵗ(−1)^{f(w)}|σ(w)⟩`: a permutation combined with a ±1 diagonal
/// (applied first) and a global phase `iᵗ`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPermGate {
    perm: PermutationGate,
    sign: BitTable,
    phase: u8,
}

impl std::fmt::Debug for SignedPermGate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SignedPermGate")
            .field("perm", &self.perm)
            .field("sign", &anf_of(&self.sign).to_string())
            .field("phase", &self.phase)
            .finish()
    }
}

impl From<PermutationGate> for SignedPermGate {
    fn from(perm: PermutationGate) -> Self {
        let sign = BitTable::zeros(perm.n);
        Self {
            perm,
            sign,
            phase: 0,
        }
    }
}

impl From<&Pauli> for SignedPermGate {
    fn from(p: &Pauli) -> Self {
        let n = p.n();
        let z = p.z().bits();
        Self::normalized(
            PermutationGate::translation(&p.x()),
            BitTable::from_fn(n, |w| (w as u32 & z).count_ones() & 1 == 1),
            p.phase(),
        )
    }
}

impl SignedPermGate {
    pub fn identity(n: usize) -> Self {
        PermutationGate::identity(n).into()
    }

    pub fn new(perm: PermutationGate, sign: BitTable, phase: u8) -> Result<Self> {
        if sign.arity() != perm.n {
            return Err(precondition(
                "sign table arity does not match the permutation",
            ));
        }
        Ok(Self::normalized(perm, sign, phase))
    }

    /// Keeps `f(0) = 0` by moving a constant sign into the phase, so that
    /// equal operators compare equal.
    fn normalized(perm: PermutationGate, mut sign: BitTable, phase: u8) -> Self {
        let mut phase = phase % 4;
        if !sign.is_empty() && sign.get(0) {
            sign.xor_assign(&BitTable::constant(perm.n, true));
            phase = (phase + 2) % 4;
        }
        Self { perm, sign, phase }
    }

    /// The ±1 diagonal gate `Σ (−1)^{f(w)} |w⟩⟨w|`.
    pub fn diagonal(sign: BitTable) -> Self {
        Self::normalized(PermutationGate::identity(sign.arity()), sign, 0)
    }

    /// Folds the circuit's gates in applied order. Hadamards are rejected.
    pub fn from_circuit(circuit: &Circuit) -> Result<Self> {
        let n = circuit.n();
        let mut table: Vec<u32> = (0..1u32 << n).collect();
        let mut sign = BitTable::zeros(n);
        for gate in circuit.gates() {
            match gate {
                Gate::Cx { controls, target } => {
                    let cmask = controls.iter().fold(0, |m, &q| m | qubit_bit(n, q)) as u32;
                    let t = qubit_bit(n, *target) as u32;
                    for y in table.iter_mut() {
                        if *y & cmask == cmask {
                            *y ^= t;
                        }
                    }
                }
                Gate::Cz { qubits } => {
                    let mask = qubits.iter().fold(0, |m, &q| m | qubit_bit(n, q)) as u32;
                    for (x, &y) in table.iter().enumerate() {
                        if y & mask == mask {
                            sign.flip(x);
                        }
                    }
                }
                Gate::Swap { controls, a, b } => {
                    let cmask = controls.iter().fold(0, |m, &q| m | qubit_bit(n, q)) as u32;
                    let (ba, bb) = (qubit_bit(n, *a) as u32, qubit_bit(n, *b) as u32);
                    for y in table.iter_mut() {
                        let differ = (*y & ba != 0) != (*y & bb != 0);
                        if *y & cmask == cmask && differ {
                            *y ^= ba | bb;
                        }
                    }
                }
                Gate::H { .. } => {
                    return Err(Error::UnsupportedGate(format!(
                        "{gate} is not a signed permutation"
                    )))
                }
            }
        }
        Ok(Self::normalized(
            PermutationGate::from_table_unchecked(n, table),
            sign,
            0,
        ))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.perm.n
    }

    pub fn permutation(&self) -> &PermutationGate {
        &self.perm
    }

    pub fn sign(&self) -> &BitTable {
        &self.sign
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// The underlying permutation when there is no sign and no phase.
    pub fn into_permutation(self) -> Option<PermutationGate> {
        (self.sign.is_zero() && self.phase == 0).then_some(self.perm)
    }

    pub fn as_permutation(&self) -> Option<&PermutationGate> {
        (self.sign.is_zero() && self.phase == 0).then_some(&self.perm)
    }

    /// Image basis index and phase exponent mod 4 of `|x⟩`.
    pub fn apply(&self, x: usize) -> (usize, u8) {
        let t = (self.phase + if self.sign.get(x) { 2 } else { 0 }) % 4;
        (self.perm.apply(x), t)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermGate) -> Self {
        assert_eq!(self.n(), other.n(), "qubit count mismatch");
        let mut sign = other.sign.clone();
        for x in 0..sign.len() {
            if self.sign.get(other.perm.apply(x)) {
                sign.flip(x);
            }
        }
        Self::normalized(
            self.perm.compose(&other.perm),
            sign,
            self.phase + other.phase,
        )
    }

    pub fn inverse(&self) -> Self {
        let perm = self.perm.inverse();
        let sign = BitTable::from_fn(self.n(), |y| self.sign.get(perm.apply(y)));
        Self::normalized(perm, sign, 4 - self.phase)
    }

    /// `U·P·U⁻¹`.
    pub fn conjugate_pauli(&self, p: &Pauli) -> SignedPermGate {
        self.conjugate(&SignedPermGate::from(p))
    }

    /// `U·V·U⁻¹`.
    pub fn conjugate(&self, v: &SignedPermGate) -> SignedPermGate {
        self.compose(&v.compose(&self.inverse()))
    }

    /// The gate as an exact Pauli `iᵗXᵘZᵛ`, if it is one.
    pub fn as_pauli(&self) -> Option<Pauli> {
        let u = self.perm.as_translation()?;
        let f = anf_of(&self.sign);
        if f.degree() > 1 {
            return None;
        }
        let n = self.n();
        let mut z = F2Vector::zero(n);
        for q in 1..=n {
            if f.coefficient(qubit_bit(n, q)) {
                z.set(q - 1, true);
            }
        }
        let constant = if f.coefficient(0) { 2 } else { 0 };
        Some(Pauli::new((self.phase + constant) % 4, u, z))
    }

    pub fn extend_with_inert_qubits(&self, m: usize) -> Result<Self> {
        let perm = self.perm.extend_with_inert_qubits(m)?;
        let sign = BitTable::from_fn(perm.n, |x| self.sign.get(x >> m));
        Ok(Self::normalized(perm, sign, self.phase))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circuit(text: &str) -> Circuit {
        Circuit::parse(text).unwrap()
    }

    #[test]
    fn empty_circuit_is_identity() {
        let g = SignedPermGate::from_circuit(&circuit("qubits 3\n")).unwrap();
        assert_eq!(g, SignedPermGate::identity(3));
    }

    #[test]
    fn single_x_is_translation() {
        let g = PermutationGate::from_circuit(&circuit("qubits 4\nX 3")).unwrap();
        assert_eq!(g.as_translation(), Some(F2Vector::unit(4, 2)));
    }

    #[test]
    fn toffoli_swaps_last_two_states() {
        let tof = SignedPermGate::from_circuit(&circuit("qubits 3\nTOF 1 2 3")).unwrap();
        assert_eq!(tof.apply(0b110), (0b111, 0));
        assert_eq!(tof.apply(0b111), (0b110, 0));
        for x in 0..6 {
            assert_eq!(tof.apply(x), (x, 0));
        }
    }

    #[test]
    fn x_squared_is_identity() {
        let x = SignedPermGate::from_circuit(&circuit("qubits 2\nX 1")).unwrap();
        assert_eq!(x.compose(&x), SignedPermGate::identity(2));
    }

    #[test]
    fn hadamard_is_unsupported() {
        assert!(matches!(
            SignedPermGate::from_circuit(&circuit("qubits 1\nH 1")),
            Err(Error::UnsupportedGate(_))
        ));
    }

    #[test]
    fn cnot_conjugates_x_to_xx() {
        let cnot = SignedPermGate::from_circuit(&circuit("qubits 2\nCNOT 1 2")).unwrap();
        let c = cnot.conjugate_pauli(&Pauli::x_on(2, 1));
        assert_eq!(c.as_pauli(), Some(Pauli::parse(2, "X1X2").unwrap()));
        let c = cnot.conjugate_pauli(&Pauli::z_on(2, 2));
        assert_eq!(c.as_pauli(), Some(Pauli::parse(2, "Z1Z2").unwrap()));
    }

    #[test]
    fn pauli_embedding_round_trips() {
        for s in ["+iX1Z2", "-Z1", "-iX1X2Z1", "X2"] {
            let p = Pauli::parse(2, s).unwrap();
            assert_eq!(SignedPermGate::from(&p).as_pauli(), Some(p));
        }
    }

    #[test]
    fn as_affine_examples() {
        let x2 = PermutationGate::from_circuit(&circuit("qubits 3\nX 2")).unwrap();
        assert_eq!(
            x2.as_affine(),
            Some((F2Matrix::identity(3), F2Vector::unit(3, 1)))
        );

        let cnot = PermutationGate::from_circuit(&circuit("qubits 2\nCNOT 1 2")).unwrap();
        let (m, w) = cnot.as_affine().unwrap();
        assert_eq!(m, F2Matrix::from_strs(&["10", "11"]));
        assert!(w.is_zero());

        let tof = PermutationGate::from_circuit(&circuit("qubits 3\nTOF 1 2 3")).unwrap();
        assert!(tof.as_affine().is_none());
    }

    #[test]
    fn toffoli_polynomials() {
        let tof = PermutationGate::from_circuit(&circuit("qubits 3\nTOF 1 2 3")).unwrap();
        let polys: Vec<String> = tof
            .polynomial_representation()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(polys, ["a1", "a2", "a3+a1a2"]);
    }

    #[test]
    fn staircase_example_fourth_coordinate() {
        let pi =
            PermutationGate::from_circuit(&circuit("qubits 4\nTOF 1 2 3\nTOF 1 3 4\nTOF 1 2 4"))
                .unwrap();
        assert_eq!(pi.polynomial_representation()[3].to_string(), "a4+a1a3");
        assert_eq!(pi.polynomial_representation()[2].to_string(), "a3+a1a2");
    }

    #[test]
    fn inert_extension_acts_on_leading_qubits() {
        let tof = PermutationGate::from_circuit(&circuit("qubits 3\nTOF 1 2 3")).unwrap();
        let ext = PermutationGate::from_circuit(&circuit("qubits 5\nTOF 1 2 3")).unwrap();
        assert_eq!(tof.extend_with_inert_qubits(2).unwrap(), ext);
        assert_eq!(
            PermutationGate::identity(2)
                .extend_with_inert_qubits(3)
                .unwrap(),
            PermutationGate::identity(5)
        );
        assert!(PermutationGate::identity(10)
            .extend_with_inert_qubits(7)
            .is_err());
    }

    #[test]
    fn from_table_rejects_non_bijection() {
        assert!(PermutationGate::from_table(1, vec![0, 0]).is_err());
        assert!(PermutationGate::from_table(1, vec![1, 0]).is_ok());
    }
}
