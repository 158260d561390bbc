//! Semi-Clifford decisions and the two `φ₁·μ·φ₂` decompositions.

mod affine;
mod mismatch;
mod stabilizer;
mod staircase;

use std::fmt;

use serde::Serialize;

pub use affine::{affine_circuit, clifford_perm_from_x_images, extend_to_basis};
pub use mismatch::{mismatch_free_decomposition, semi_clifford_level};
pub use stabilizer::{
    conjugation_stabilizer, is_semi_clifford, ConjugationStabilizer, SemiCliffordCertificate,
};
pub use staircase::staircase_decomposition;

use crate::error::{invariant, Error, Result};
use crate::permgate::{C3Witness, Circuit, PermutationGate};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("gate is not semi-Clifford")]
    NotSemiClifford,
    #[error("gate is not in C3: conjugate of {} is not Clifford", .0.generator)]
    NotC3(Box<C3Witness>),
    #[error(transparent)]
    Core(#[from] Error),
}

/// `π = φ₁ · μ · φ₂` with affine `φ₁`, `φ₂` (so `φ₂` is applied first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub left: PermutationGate,
    pub middle: Circuit,
    pub right: PermutationGate,
}

impl Decomposition {
    pub fn n(&self) -> usize {
        self.middle.n()
    }

    pub fn recompose(&self) -> Result<PermutationGate> {
        let mu = PermutationGate::from_circuit(&self.middle)?;
        Ok(self.left.compose(&mu.compose(&self.right)))
    }

    /// Errors unless the factors multiply back to `pi` and both outer
    /// factors are affine.
    pub fn verify(&self, pi: &PermutationGate) -> Result<()> {
        if !self.left.is_affine() || !self.right.is_affine() {
            return Err(invariant("outer factor is not affine"));
        }
        if &self.recompose()? != pi {
            return Err(invariant("decomposition does not recompose to the input"));
        }
        Ok(())
    }

    /// Largest control count among the middle gates, if any.
    pub fn max_controls(&self) -> Option<usize> {
        self.middle
            .gates()
            .iter()
            .filter_map(|g| g.as_cx().map(|(c, _)| c.len()))
            .max()
    }

    /// The whole decomposition as one circuit in applied order.
    pub fn to_circuit(&self) -> Result<Circuit> {
        Ok(affine_circuit(&self.right)?
            .then(&self.middle)
            .then(&affine_circuit(&self.left)?))
    }

    /// Circuit text with `# phi2`, `# mu`, `# phi1` section markers, in that
    /// (applied) order, so the text parses back to the original gate.
    pub fn to_text(&self) -> Result<String> {
        let mut out = format!("qubits {}\n", self.n());
        for (name, c) in [
            ("phi2", affine_circuit(&self.right)?),
            ("mu", self.middle.clone()),
            ("phi1", affine_circuit(&self.left)?),
        ] {
            out.push_str(&format!("# {name}\n"));
            for g in c.gates() {
                out.push_str(&format!("{g}\n"));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_text() {
            Ok(t) => f.write_str(&t),
            Err(_) => f.write_str("# invalid decomposition\n"),
        }
    }
}
