//! Exact dense unitaries with entries in `Z[1/√2]`, used as a brute-force
//! oracle for small circuits.

use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::Pauli;
use crate::permgate::{Circuit, Gate, SignedPermGate};

/// Largest qubit count [`build`] accepts.
pub const MAX_DENSE_QUBITS: usize = 7;

/// The operator `(i if imaginary) · E / √2ˢ` with integer `E`, kept in
/// canonical form: while `s ≥ 2` some entry of `E` is odd.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScaledIntMatrix {
    n: usize,
    entries: Vec<i64>,
    scale: u32,
    imaginary: bool,
}

fn checked(v: Option<i64>) -> Result<i64> {
    v.ok_or(Error::IntegerOverflow)
}

fn check_dim(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::DimensionTooLarge { what, n, limit })
    } else {
        Ok(())
    }
}

impl ScaledIntMatrix {
    pub fn identity(n: usize) -> Self {
        let dim = 1 << n;
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self {
            n,
            entries,
            scale: 0,
            imaginary: false,
        }
    }

    /// Row-major entries of length `4ⁿ`, canonicalized.
    pub fn from_entries(n: usize, entries: Vec<i64>, scale: u32, imaginary: bool) -> Result<Self> {
        if entries.len() != 1 << (2 * n) {
            return Err(Error::PreconditionViolated(format!(
                "expected {} entries, got {}",
                1usize << (2 * n),
                entries.len()
            )));
        }
        let mut m = Self {
            n,
            entries,
            scale,
            imaginary,
        };
        m.canonicalize();
        Ok(m)
    }

    pub fn from_pauli(p: &Pauli) -> Self {
        Self::from_signed_perm(&SignedPermGate::from(p))
    }

    pub fn from_signed_perm(u: &SignedPermGate) -> Self {
        let n = u.n();
        let dim = 1 << n;
        let mut entries = vec![0; dim * dim];
        for x in 0..dim {
            let (y, t) = u.apply(x);
            entries[y * dim + x] = if t >= 2 { -1 } else { 1 };
        }
        Self {
            n,
            entries,
            scale: 0,
            imaginary: u.phase() % 2 == 1,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_imaginary(&self) -> bool {
        self.imaginary
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim() + col]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    fn row_mut(&mut self, r: usize) -> &mut [i64] {
        let dim = self.dim();
        &mut self.entries[r * dim..(r + 1) * dim]
    }

    fn canonicalize(&mut self) {
        while self.scale >= 2 && self.entries.iter().all(|e| e % 2 == 0) {
            if self.entries.iter().all(|&e| e == 0) {
                self.scale = 0;
                break;
            }
            for e in &mut self.entries {
                *e /= 2;
            }
            self.scale -= 2;
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::PreconditionViolated("dimension mismatch".into()));
        }
        let dim = self.dim();
        let mut entries = vec![0i64; dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = self.entries[i * dim + k];
                if a == 0 {
                    continue;
                }
                for j in 0..dim {
                    let b = other.entries[k * dim + j];
                    if b != 0 {
                        let e = &mut entries[i * dim + j];
                        *e = checked(e.checked_add(checked(a.checked_mul(b))?))?;
                    }
                }
            }
        }
        let both = self.imaginary && other.imaginary;
        if both {
            for e in &mut entries {
                *e = -*e;
            }
        }
        let mut m = Self {
            n: self.n,
            entries,
            scale: self.scale + other.scale,
            imaginary: self.imaginary != other.imaginary,
        };
        m.canonicalize();
        Ok(m)
    }

    /// `E·Eᵀ = 2ˢ·I`.
    pub fn is_unitary(&self) -> bool {
        let dim = self.dim();
        let Some(norm) = 1i64.checked_shl(self.scale).filter(|_| self.scale < 63) else {
            return false;
        };
        for i in 0..dim {
            for j in i..dim {
                let mut dot = 0i64;
                for k in 0..dim {
                    let p = self.entries[i * dim + k].checked_mul(self.entries[j * dim + k]);
                    match p.and_then(|p| dot.checked_add(p)) {
                        Some(d) => dot = d,
                        None => return false,
                    }
                }
                if dot != if i == j { norm } else { 0 } {
                    return false;
                }
            }
        }
        true
    }

    /// The adjoint, which is the inverse of a unitary.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unitary() {
            return Err(Error::PreconditionViolated("matrix is not unitary".into()));
        }
        let dim = self.dim();
        let sign = if self.imaginary { -1 } else { 1 };
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                entries[j * dim + i] = sign * self.entries[i * dim + j];
            }
        }
        Ok(Self {
            n: self.n,
            entries,
            scale: self.scale,
            imaginary: self.imaginary,
        })
    }

    /// `U·V·U⁻¹`.
    pub fn conjugate(&self, v: &Self) -> Result<Self> {
        self.multiply(v)?.multiply(&self.inverse()?)
    }

    pub fn equals_exact(&self, other: &Self) -> bool {
        self == other
    }

    pub fn equals_up_to_sign(&self, other: &Self) -> bool {
        if self.n != other.n || self.scale != other.scale || self.imaginary != other.imaginary {
            return false;
        }
        self.entries == other.entries
            || self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| *a == -*b)
    }

    fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        let n = self.n;
        let dim = self.dim();
        let bit = |q: usize| 1usize << (n - q);
        let mask = |qs: &[usize]| qs.iter().fold(0, |m, &q| m | bit(q));
        match gate {
            Gate::H { qubit } => {
                let b = bit(*qubit);
                for x in (0..dim).filter(|x| x & b == 0) {
                    for c in 0..dim {
                        let (u, v) = (self.entries[x * dim + c], self.entries[(x | b) * dim + c]);
                        self.entries[x * dim + c] = checked(u.checked_add(v))?;
                        self.entries[(x | b) * dim + c] = checked(u.checked_sub(v))?;
                    }
                }
                self.scale += 1;
            }
            Gate::Cz { qubits } => {
                let m = mask(qubits);
                for x in (0..dim).filter(|x| x & m == m) {
                    for e in self.row_mut(x) {
                        *e = -*e;
                    }
                }
            }
            Gate::Cx { controls, target } => {
                let (m, t) = (mask(controls), bit(*target));
                for x in (0..dim).filter(|x| x & m == m && x & t == 0) {
                    self.swap_rows(x, x | t);
                }
            }
            Gate::Swap { controls, a, b } => {
                let (m, ba, bb) = (mask(controls), bit(*a), bit(*b));
                for x in (0..dim).filter(|x| x & m == m && x & ba != 0 && x & bb == 0) {
                    self.swap_rows(x, x ^ ba ^ bb);
                }
            }
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        let dim = self.dim();
        for c in 0..dim {
            self.entries.swap(a * dim + c, b * dim + c);
        }
    }
}

impl fmt::Debug for ScaledIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ScaledIntMatrix(n={}, s={}, imaginary={}, ",
            self.n, self.scale, self.imaginary
        )?;
        let dim = self.dim().min(16);
        for r in 0..dim {
            write!(
                f,
                "{:?}",
                &self.entries[r * self.dim()..r * self.dim() + dim]
            )?;
        }
        f.write_str(")")
    }
}

/// Exact product of the circuit's gate matrices.
pub fn build(c: &Circuit) -> Result<ScaledIntMatrix> {
    check_dim("dense build", c.n(), MAX_DENSE_QUBITS)?;
    let mut m = ScaledIntMatrix::identity(c.n());
    for g in c.gates() {
        m.apply_gate(g)?;
    }
    m.canonicalize();
    debug_assert!(m.is_unitary());
    Ok(m)
}

/// Entries `±1` at scale 0, one per row and column, laid out as `iᵗXᵘZᵛ`.
pub fn dense_is_pauli(m: &ScaledIntMatrix) -> bool {
    if m.scale != 0 {
        return false;
    }
    let dim = m.dim();
    let u = match (0..dim).find(|&r| m.entry(r, 0) != 0) {
        Some(u) => u,
        None => return false,
    };
    let base = m.entry(u, 0);
    if base.abs() != 1 {
        return false;
    }
    // Column w must hold its only nonzero at row w ⊕ u.
    let mut flip = vec![false; dim];
    for (w, f) in flip.iter_mut().enumerate() {
        for r in 0..dim {
            let e = m.entry(r, w);
            if r == w ^ u {
                if e.abs() != 1 {
                    return false;
                }
                *f = e != base;
            } else if e != 0 {
                return false;
            }
        }
    }
    // The sign pattern must be a character w ↦ (−1)^{v·w}.
    let v = (0..m.n).fold(
        0usize,
        |acc, i| if flip[1 << i] { acc | 1 << i } else { acc },
    );
    (0..dim).all(|w| flip[w] == ((w & v).count_ones() % 2 == 1))
}

fn generator_matrices(n: usize) -> Vec<ScaledIntMatrix> {
    Pauli::generators(n)
        .map(|p| ScaledIntMatrix::from_pauli(&p))
        .collect()
}

/// Every generator conjugate is a Pauli.
pub fn dense_is_clifford(m: &ScaledIntMatrix) -> Result<bool> {
    check_dim("dense Clifford test", m.n, 5)?;
    let inv = m.inverse()?;
    for p in generator_matrices(m.n) {
        if !dense_is_pauli(&m.multiply(&p)?.multiply(&inv)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every generator conjugate is Clifford.
pub fn dense_is_c3(m: &ScaledIntMatrix) -> Result<bool> {
    check_dim("dense C3 test", m.n, 4)?;
    let inv = m.inverse()?;
    for p in generator_matrices(m.n) {
        if !dense_is_clifford(&m.multiply(&p)?.multiply(&inv)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(text: &str) -> ScaledIntMatrix {
        build(&Circuit::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn hadamard_matrix() {
        let h = dense("qubits 1\nH 1");
        assert_eq!(h.entries(), &[1, 1, 1, -1]);
        assert_eq!(h.scale(), 1);
        assert!(h
            .multiply(&h)
            .unwrap()
            .equals_exact(&ScaledIntMatrix::identity(1)));
    }

    #[test]
    fn toffoli_matrix_swaps_last_rows() {
        let t = dense("qubits 3\nTOF 1 2 3");
        let mut expect = ScaledIntMatrix::identity(3);
        expect.swap_rows(6, 7);
        assert_eq!(t, expect);
        assert_eq!(dense("qubits 3\n"), ScaledIntMatrix::identity(3));
    }

    #[test]
    fn y_is_pauli() {
        let y = ScaledIntMatrix::from_pauli(&Pauli::y_on(1, 1));
        assert!(y.is_imaginary());
        assert_eq!(y.entries(), &[0, -1, 1, 0]);
        assert!(dense_is_pauli(&y));
        assert!(y
            .multiply(&y)
            .unwrap()
            .equals_exact(&ScaledIntMatrix::identity(1)));
    }

    #[test]
    fn levels_of_standard_gates() {
        let h = dense("qubits 1\nH 1");
        assert!(dense_is_clifford(&h).unwrap() && !dense_is_pauli(&h));
        let t = dense("qubits 3\nTOF 1 2 3");
        assert!(dense_is_c3(&t).unwrap() && !dense_is_clifford(&t).unwrap());
        assert!(!dense_is_pauli(&dense("qubits 2\nCZ 1 2")));
        assert!(dense_is_pauli(&dense("qubits 2\nZ 1\nX 2\nZ 2")));
    }

    #[test]
    fn canonical_scale() {
        let hh = dense("qubits 2\nH 1\nH 2\nH 1");
        assert_eq!(hh.scale(), 1);
        assert!(hh.equals_up_to_sign(&dense("qubits 2\nH 2")));
        let m = ScaledIntMatrix::from_entries(0, vec![4], 4, false).unwrap();
        assert!(m.equals_exact(&ScaledIntMatrix::identity(0)));
    }

    #[test]
    fn dimension_limits() {
        let big = Circuit::parse("qubits 8\n").unwrap();
        assert!(matches!(build(&big), Err(Error::DimensionTooLarge { .. })));
        let five = ScaledIntMatrix::identity(5);
        assert!(dense_is_clifford(&five).unwrap());
        assert!(dense_is_c3(&five).is_err());
    }
}
