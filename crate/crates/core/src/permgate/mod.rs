//! Permutation and signed-permutation gates, their polynomial form and
//! hierarchy tests.

mod bitfn;
mod circuit;
mod gate;
mod hierarchy;

pub(crate) use bitfn::low_degree_mask;
pub use bitfn::{anf_of, mobius_word, AnfPolynomial, BitTable};
pub use circuit::{cx_commute, is_mismatch_free, is_staircase, Circuit, Gate};
pub use gate::{PermutationGate, SignedPermGate};
pub use hierarchy::{
    c3_witness, conjugate_pauli, diagonal_level, is_c3, is_clifford, is_in_level, is_pauli,
    C3Witness, LEVEL_COST_LIMIT,
};
