//! Membership tests for the Clifford hierarchy restricted to signed
//! permutation gates.

use serde::Serialize;

use super::bitfn::{anf_of, AnfPolynomial};
use super::gate::SignedPermGate;
use crate::error::{Error, Result};
use crate::f2::F2Vector;
use crate::pauli::Pauli;

/// `U·P·U⁻¹`.
pub fn conjugate_pauli(u: &SignedPermGate, p: &Pauli) -> SignedPermGate {
    u.conjugate_pauli(p)
}

/// σ is a translation and f is affine.
pub fn is_pauli(u: &SignedPermGate) -> bool {
    u.as_pauli().is_some()
}

/// σ is affine and f has degree at most 2.
pub fn is_clifford(u: &SignedPermGate) -> bool {
    u.permutation().is_affine() && anf_of(u.sign()).degree() <= 2
}

/// The minimal level of the ±1 diagonal `(−1)^f`, which is `deg f`.
pub fn diagonal_level(f: &AnfPolynomial) -> usize {
    f.degree()
}

/// A generator whose conjugate leaves the Clifford group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C3Witness {
    pub generator: Pauli,
    #[serde(skip)]
    pub conjugate: SignedPermGate,
}

/// The first generator among `X₁..Xₙ, Z₁..Zₙ` whose conjugate is not
/// Clifford, or `None` when `U ∈ C₃`.
pub fn c3_witness(u: &SignedPermGate) -> Option<C3Witness> {
    Pauli::generators(u.n()).into_iter().find_map(|g| {
        let conjugate = u.conjugate_pauli(&g);
        (!is_clifford(&conjugate)).then_some(C3Witness {
            generator: g,
            conjugate,
        })
    })
}

pub fn is_c3(u: &SignedPermGate) -> bool {
    c3_witness(u).is_none()
}

/// Largest value of `2n(k−3)` accepted by [`is_in_level`]; each level above
/// three multiplies the work by the `4ⁿ` Paulis enumerated.
pub const LEVEL_COST_LIMIT: usize = 14;

/// `U ∈ C_k`. Levels 1–3 use the direct tests. Above that, every Pauli up to
/// phase is conjugated and the test recurses, because `C_{k−1}` is not a
/// group and so generators alone do not suffice.
pub fn is_in_level(u: &SignedPermGate, k: usize) -> Result<bool> {
    let n = u.n();
    match k {
        0 => Err(Error::PreconditionViolated(
            "hierarchy levels start at 1".into(),
        )),
        1 => Ok(is_pauli(u)),
        2 => Ok(is_clifford(u)),
        3 => Ok(is_c3(u)),
        _ => {
            if 2 * n * (k - 3) > LEVEL_COST_LIMIT {
                return Err(Error::DimensionTooLarge {
                    what: "level test",
                    n,
                    limit: LEVEL_COST_LIMIT / (2 * (k - 3)),
                });
            }
            // The C₃ check rejects early on most non-members and is cheap.
            if is_c3(u) {
                return Ok(true);
            }
            Ok(all_paulis(n).all(|p| in_level_unchecked(&u.conjugate_pauli(&p), k - 1)))
        }
    }
}

fn in_level_unchecked(u: &SignedPermGate, k: usize) -> bool {
    if k <= 3 {
        return match k {
            1 => is_pauli(u),
            2 => is_clifford(u),
            _ => is_c3(u),
        };
    }
    is_c3(u) || all_paulis(u.n()).all(|p| in_level_unchecked(&u.conjugate_pauli(&p), k - 1))
}

/// All `4ⁿ` Paulis `XᵘZᵛ` with phase 0.
pub(crate) fn all_paulis(n: usize) -> impl Iterator<Item = Pauli> {
    (0u32..1 << n).flat_map(move |u| {
        (0u32..1 << n)
            .map(move |v| Pauli::new(0, F2Vector::from_bits(n, u), F2Vector::from_bits(n, v)))
    })
}
