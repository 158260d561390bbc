//! Exact Pauli-group algebra.
//!
//! A [`Pauli`] is stored as `iᵗ·XᵘZᵛ` with the X factor to the left of the Z
//! factor; `Y = i·XZ` under this convention. Subgroups are compared up to
//! phase through their `(u|v)` rows in F₂²ⁿ.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{invariant, precondition, Error, Result};
use crate::f2::F2Vector;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pauli {
    phase: u8,
    x: F2Vector,
    z: F2Vector,
}

impl Pauli {
    pub fn new(phase: u8, x: F2Vector, z: F2Vector) -> Self {
        assert_eq!(x.len(), z.len(), "X and Z parts differ in length");
        Self {
            phase: phase % 4,
            x,
            z,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(0, F2Vector::zero(n), F2Vector::zero(n))
    }

    pub fn from_x(x: F2Vector) -> Self {
        Self::new(0, x, F2Vector::zero(x.len()))
    }

    pub fn from_z(z: F2Vector) -> Self {
        Self::new(0, F2Vector::zero(z.len()), z)
    }

    /// `X` on a 1-based qubit.
    pub fn x_on(n: usize, qubit: usize) -> Self {
        Self::from_x(F2Vector::unit(n, qubit - 1))
    }

    /// `Z` on a 1-based qubit.
    pub fn z_on(n: usize, qubit: usize) -> Self {
        Self::from_z(F2Vector::unit(n, qubit - 1))
    }

    /// `Y = i·XZ` on a 1-based qubit.
    pub fn y_on(n: usize, qubit: usize) -> Self {
        let e = F2Vector::unit(n, qubit - 1);
        Self::new(1, e, e)
    }

    /// The generators `X₁, …, Xₙ, Z₁, …, Zₙ` in that order.
    pub fn generators(n: usize) -> impl Iterator<Item = Pauli> {
        (1..=n)
            .map(move |q| Self::x_on(n, q))
            .chain((1..=n).map(move |q| Self::z_on(n, q)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// Exponent `t` of the leading `iᵗ`.
    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    #[inline]
    pub fn x(&self) -> F2Vector {
        self.x
    }

    #[inline]
    pub fn z(&self) -> F2Vector {
        self.z
    }

    pub fn with_phase(&self, phase: u8) -> Self {
        Self::new(phase, self.x, self.z)
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// `(−1)` contributions come from moving `Zᵛ` past `Xᵘ′`.
    pub fn multiply(&self, other: &Pauli) -> Pauli {
        assert_eq!(self.n(), other.n(), "qubit count mismatch");
        let swap_sign = if self.z.dot(&other.x) { 2 } else { 0 };
        Pauli::new(
            (self.phase + other.phase + swap_sign) % 4,
            self.x + other.x,
            self.z + other.z,
        )
    }

    pub fn inverse(&self) -> Pauli {
        // (iᵗXᵘZᵛ)⁻¹ = i⁻ᵗ ZᵛXᵘ = i⁻ᵗ (−1)^{u·v} XᵘZᵛ
        let sign = if self.x.dot(&self.z) { 2 } else { 0 };
        Pauli::new((4 - self.phase + sign) % 4, self.x, self.z)
    }

    /// Symplectic form `u·v′ + u′·v` vanishes.
    pub fn commutes(&self, other: &Pauli) -> bool {
        self.x.dot(&other.z) == other.x.dot(&self.z)
    }

    /// Splits `P` into its permutation part `Xᵘ` and diagonal part `iᵗZᵛ`,
    /// so that `P = perm · diag`.
    pub fn perm_diag_split(&self) -> (Pauli, Pauli) {
        (
            Pauli::from_x(self.x),
            Pauli::new(self.phase, F2Vector::zero(self.n()), self.z),
        )
    }

    pub(crate) fn symplectic(&self) -> u64 {
        ((self.x.bits() as u64) << self.n()) | self.z.bits() as u64
    }

    /// Parses renderings such as `"Z3Z4"`, `"-X1"`, `"+iX1Z1"` or `"Y2"`.
    /// Factors multiply left to right; `"I"` is the identity.
    pub fn parse(n: usize, text: &str) -> Result<Pauli> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            message: format!("bad Pauli {text:?}: {msg}"),
        };
        let s = text.trim();
        let (mut phase, mut rest) = if let Some(r) = s.strip_prefix("+i") {
            (1u8, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r)
        } else {
            (0, s)
        };
        let mut acc = Pauli::identity(n);
        if rest == "I" || rest.is_empty() {
            return Ok(acc.with_phase(phase));
        }
        while !rest.is_empty() {
            let kind = rest.as_bytes()[0];
            rest = &rest[1..];
            let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
            if digits == 0 {
                return Err(bad("missing qubit index"));
            }
            let q: usize = rest[..digits].parse().map_err(|_| bad("bad qubit index"))?;
            rest = &rest[digits..];
            if q == 0 || q > n {
                return Err(bad("qubit index out of range"));
            }
            let factor = match kind {
                b'X' => Pauli::x_on(n, q),
                b'Z' => Pauli::z_on(n, q),
                b'Y' => Pauli::y_on(n, q),
                _ => return Err(bad("expected X, Y or Z")),
            };
            acc = acc.multiply(&factor);
        }
        phase = (phase + acc.phase) % 4;
        Ok(acc.with_phase(phase))
    }
}

impl Mul for Pauli {
    type Output = Pauli;

    fn mul(self, rhs: Pauli) -> Pauli {
        self.multiply(&rhs)
    }
}

impl fmt::Display for Pauli {
    /// Renders `iᵗ·XᵘZᵛ` with 1-based qubits, e.g. `+iX1Z1`, `-Z2`, `X3X4X5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["", "+i", "-", "-i"][self.phase as usize])?;
        if self.is_identity_up_to_phase() {
            return f.write_str("I");
        }
        for q in self.x.ones() {
            write!(f, "X{}", q + 1)?;
        }
        for q in self.z.ones() {
            write!(f, "Z{}", q + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

/// Linear basis over F₂ keyed by leading bit, for rank and span queries on
/// symplectic words.
#[derive(Debug, Clone, PartialEq, Eq)]
struct XorBasis {
    slots: Vec<u64>,
}

impl XorBasis {
    fn new(width: usize) -> Self {
        Self {
            slots: vec![0; width],
        }
    }

    fn reduce(&self, mut w: u64) -> u64 {
        for bit in (0..self.slots.len()).rev() {
            if w >> bit & 1 == 1 && self.slots[bit] != 0 {
                w ^= self.slots[bit];
            }
        }
        w
    }

    /// Returns false when `w` is already in the span.
    fn insert(&mut self, w: u64) -> bool {
        let r = self.reduce(w);
        if r == 0 {
            return false;
        }
        let lead = 63 - r.leading_zeros() as usize;
        self.slots[lead] = r;
        true
    }

    fn rank(&self) -> usize {
        self.slots.iter().filter(|&&s| s != 0).count()
    }
}

/// An abelian subgroup of the Pauli group, kept as generators that are
/// independent modulo phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliSubgroup {
    n: usize,
    gens: Vec<Pauli>,
    span: XorBasis,
}

impl PauliSubgroup {
    /// Generators that are dependent on earlier ones modulo phase are
    /// dropped. Fails if two generators anticommute.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Pauli>) -> Result<Self> {
        let mut group = Self {
            n,
            gens: Vec::new(),
            span: XorBasis::new(2 * n),
        };
        for g in gens {
            if g.n() != n {
                return Err(precondition(format!("generator {g} is not on {n} qubits")));
            }
            if let Some(h) = group.gens.iter().find(|h| !h.commutes(&g)) {
                return Err(precondition(format!("{g} anticommutes with {h}")));
            }
            if group.span.insert(g.symplectic()) {
                group.gens.push(g);
            }
        }
        Ok(group)
    }

    /// Parses a list such as `["Z1", "Z3Z4", "X3X4"]`.
    pub fn parse(n: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| Pauli::parse(n, g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Pauli] {
        &self.gens
    }

    /// Rank modulo phase.
    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn is_maximal(&self) -> bool {
        self.rank() == self.n
    }

    pub fn contains_up_to_phase(&self, p: &Pauli) -> bool {
        p.n() == self.n && self.span.reduce(p.symplectic()) == 0
    }

    pub fn is_subgroup_of(&self, other: &PauliSubgroup) -> bool {
        self.gens.iter().all(|g| other.contains_up_to_phase(g))
    }

    pub fn equals_up_to_phase(&self, other: &PauliSubgroup) -> bool {
        self.rank() == other.rank() && self.is_subgroup_of(other)
    }
}

impl fmt::Display for PauliSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// Builds a maximal abelian `A′` with `B ⊆ A′ ⊆ ⟨A, B⟩`.
///
/// Each generator `b` of `B` is absorbed in turn: the current generators
/// anticommuting with `b`, say `a₁, …, a_k`, are replaced by the products
/// `a₁a₂, …, a_{k−1}a_k` and `b` is adjoined. When nothing anticommutes, `b`
/// already lies in the current group.
pub fn extend_to_maximal_abelian(a: &PauliSubgroup, b: &PauliSubgroup) -> Result<PauliSubgroup> {
    if a.n != b.n {
        return Err(precondition("subgroups act on different qubit counts"));
    }
    if !a.is_maximal() {
        return Err(precondition(format!("{a} is not maximal abelian")));
    }
    let mut current = a.gens.clone();
    for bg in &b.gens {
        let (anti, comm): (Vec<Pauli>, Vec<Pauli>) = current.iter().partition(|g| !g.commutes(bg));
        if anti.is_empty() {
            continue;
        }
        current = comm;
        current.extend(anti.windows(2).map(|w| w[0] * w[1]));
        current.push(*bg);
    }
    let out = PauliSubgroup::new(a.n, current)?;
    if !out.is_maximal() {
        return Err(invariant(format!("extension {out} lost rank")));
    }
    Ok(out)
}

/// A maximal isotropic subspace found inside a given subspace of F₂²ⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicSubspace {
    pub dim: usize,
    /// Pairwise-commuting basis, phases zero.
    pub basis: Vec<Pauli>,
    /// Number of hyperbolic pairs split off; the restricted form has rank
    /// twice this.
    pub hyperbolic_pairs: usize,
}

/// Symplectic Gram–Schmidt on the span of `basis` (phases ignored).
///
/// Repeatedly takes the lowest-index remaining vector; if some later vector
/// pairs with it nontrivially the two form a hyperbolic pair, the first is
/// kept and everything left is made orthogonal to both. Otherwise the vector
/// is orthogonal to all that remains and joins the radical.
pub fn max_isotropic_within(n: usize, basis: &[Pauli]) -> Result<IsotropicSubspace> {
    let mut independence = XorBasis::new(2 * n);
    for p in basis {
        if p.n() != n {
            return Err(precondition(format!("{p} is not on {n} qubits")));
        }
        if !independence.insert(p.symplectic()) {
            return Err(precondition("subspace basis is linearly dependent"));
        }
    }
    let form = |a: &Pauli, b: &Pauli| !a.commutes(b);
    let mut remaining: Vec<Pauli> = basis.iter().map(|p| p.with_phase(0)).collect();
    let mut kept = Vec::new();
    let mut pairs = 0;
    while !remaining.is_empty() {
        let w1 = remaining.remove(0);
        match remaining.iter().position(|w| form(&w1, w)) {
            None => kept.push(w1),
            Some(k) => {
                let w2 = remaining.remove(k);
                for w in remaining.iter_mut() {
                    let mut v = *w;
                    if form(&v, &w2) {
                        v = v * w1;
                    }
                    if form(w, &w1) {
                        v = v * w2;
                    }
                    *w = v.with_phase(0);
                }
                kept.push(w1);
                pairs += 1;
            }
        }
    }
    Ok(IsotropicSubspace {
        dim: kept.len(),
        basis: kept,
        hyperbolic_pairs: pairs,
    })
}
