//! Reference circuits shipped with the crate, in applied order.

use crate::permgate::Circuit;

pub const G_TEXT: &str = include_str!("../fixtures/g.circ");
pub const F_TEXT: &str = include_str!("../fixtures/f.circ");
pub const R_TEXT: &str = include_str!("../fixtures/r.circ");
pub const STAIRCASE4_TEXT: &str = include_str!("../fixtures/staircase4.circ");
pub const NOT_C3_TEXT: &str = include_str!("../fixtures/not_c3.circ");

fn load(text: &str) -> Circuit {
    Circuit::parse(text).expect("bundled fixture parses")
}

/// Seven-qubit C₃ gate built from three controlled swaps and four CCZs.
pub fn g() -> Circuit {
    load(G_TEXT)
}

/// Clifford conjugator with `F·G·F⁻¹ = R`.
pub fn f() -> Circuit {
    load(F_TEXT)
}

/// The seven-qubit non-semi-Clifford staircase permutation.
pub fn r() -> Circuit {
    load(R_TEXT)
}

/// Three Toffolis on four qubits with targets 3, 4, 4.
pub fn staircase4() -> Circuit {
    load(STAIRCASE4_TEXT)
}

/// `TOF₁,₂,₃` then `TOF₃,₄,₅`.
pub fn not_c3() -> Circuit {
    load(NOT_C3_TEXT)
}
