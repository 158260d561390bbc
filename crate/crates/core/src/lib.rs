//! Exact tools for permutation gates in the Clifford hierarchy.
//!
//! Conventions used throughout: qubit 1 is the most significant bit of a
//! basis index, qubit indices in gates and Paulis are 1-based, and circuits
//! list gates in the order they are applied.

pub mod decomp;
pub mod densemat;
pub mod error;
pub mod f2;
pub mod fixtures;
pub mod pauli;
pub mod permgate;
pub mod random;
pub mod search6;

pub use error::{Error, Result, MAX_QUBITS};
pub use f2::{F2Matrix, F2Vector};
pub use pauli::{Pauli, PauliSubgroup};
pub use permgate::{AnfPolynomial, Circuit, Gate, PermutationGate, SignedPermGate};
