use std::fmt;

use clifperm::decomp::Decomposition;
use clifperm::decomp::{
    is_semi_clifford, semi_clifford_level, staircase_decomposition, DecompError,
};
use clifperm::permgate::{anf_of, c3_witness, is_clifford, is_in_level, is_pauli};
use clifperm::{Circuit, PauliSubgroup, SignedPermGate};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coordinate {
    pub qubit: usize,
    pub anf: String,
    pub degree: usize,
}

/// Per-coordinate ANFs of the permutation, plus the sign function's ANF
/// when it is not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnfReport {
    pub n: usize,
    pub coordinates: Vec<Coordinate>,
    pub sign: Option<String>,
    pub phase: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelFlag {
    pub k: usize,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub subgroup: Vec<String>,
    pub image: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub generator: String,
    /// ANFs of the conjugate's permutation coordinates.
    pub conjugate: AnfReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub gate_count: usize,
    pub polynomials: AnfReport,
    pub pauli: bool,
    pub clifford: bool,
    pub c3: bool,
    pub level: Option<LevelFlag>,
    /// `None` for gates with a nontrivial sign, which the semi-Clifford
    /// test does not cover.
    pub semi_clifford: Option<bool>,
    pub semi_clifford_level: Option<usize>,
    pub certificate: Option<Certificate>,
    pub c3_witness: Option<Witness>,
}

pub fn anf_report(u: &SignedPermGate) -> AnfReport {
    let coordinates = u
        .permutation()
        .polynomial_representation()
        .into_iter()
        .enumerate()
        .map(|(i, p)| Coordinate {
            qubit: i + 1,
            degree: p.degree(),
            anf: p.to_string(),
        })
        .collect();
    AnfReport {
        n: u.n(),
        coordinates,
        sign: (!u.sign().is_zero()).then(|| anf_of(u.sign()).to_string()),
        phase: u.phase(),
    }
}

fn generators(s: &PauliSubgroup) -> Vec<String> {
    s.generators().iter().map(|p| p.to_string()).collect()
}

pub fn analyze(circuit: &Circuit, level: Option<usize>) -> Result<AnalysisReport, CliError> {
    let u = SignedPermGate::from_circuit(circuit)?;
    let level = match level {
        Some(k) => Some(LevelFlag {
            k,
            member: is_in_level(&u, k)?,
        }),
        None => None,
    };
    let witness = c3_witness(&u);
    let (mut semi, mut sc_level, mut certificate) = (None, None, None);
    if let Some(pi) = u.as_permutation() {
        let cert = is_semi_clifford(pi);
        semi = Some(cert.is_some());
        if let Some(c) = cert {
            certificate = Some(Certificate {
                subgroup: generators(&c.subgroup),
                image: generators(&c.image),
            });
            sc_level = Some(semi_clifford_level(pi)?);
        }
    }
    Ok(AnalysisReport {
        n: u.n(),
        gate_count: circuit.len(),
        polynomials: anf_report(&u),
        pauli: is_pauli(&u),
        clifford: is_clifford(&u),
        c3: witness.is_none(),
        level,
        semi_clifford: semi,
        semi_clifford_level: sc_level,
        certificate,
        c3_witness: witness.map(|w| Witness {
            generator: w.generator.to_string(),
            conjugate: anf_report(&w.conjugate),
        }),
    })
}

impl fmt::Display for AnfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coordinates {
            writeln!(f, "x{} -> {}  (degree {})", c.qubit, c.anf, c.degree)?;
        }
        if let Some(s) = &self.sign {
            writeln!(f, "sign -> {s}")?;
        }
        if self.phase != 0 {
            writeln!(f, "phase -> i^{}", self.phase)?;
        }
        Ok(())
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits: {}  gates: {}", self.n, self.gate_count)?;
        write!(f, "{}", self.polynomials)?;
        writeln!(f, "pauli: {}", yes(self.pauli))?;
        writeln!(f, "clifford: {}", yes(self.clifford))?;
        writeln!(f, "c3: {}", yes(self.c3))?;
        if let Some(l) = &self.level {
            writeln!(f, "level {}: {}", l.k, yes(l.member))?;
        }
        match self.semi_clifford {
            Some(s) => writeln!(f, "semi-clifford: {}", yes(s))?,
            None => writeln!(f, "semi-clifford: n/a (signed gate)")?,
        }
        if let Some(l) = self.semi_clifford_level {
            writeln!(f, "semi-clifford level: {l}")?;
        }
        if let Some(c) = &self.certificate {
            writeln!(
                f,
                "certificate: <{}> -> <{}>",
                c.subgroup.join(", "),
                c.image.join(", ")
            )?;
        }
        if let Some(w) = &self.c3_witness {
            writeln!(f, "witness: conjugate of {} is not Clifford", w.generator)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Staircase,
    MismatchFree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub mode: Mode,
    pub n: usize,
    pub phi1: String,
    pub mu: String,
    pub phi2: String,
    pub mu_gates: usize,
    pub max_controls: Option<usize>,
    pub text: String,
}

fn gate_lines(c: &Circuit) -> String {
    c.gates().iter().map(|g| format!("{g}\n")).collect()
}

/// Runs the decomposition and checks that it recomposes to the input.
pub fn decompose(circuit: &Circuit, mode: Mode) -> Result<DecompositionReport, CliError> {
    let u = SignedPermGate::from_circuit(circuit)?;
    let pi = u.as_permutation().ok_or_else(|| {
        clifperm::Error::UnsupportedGate("decomposition needs an unsigned permutation".into())
    })?;
    let d: Decomposition = match mode {
        Mode::Staircase => staircase_decomposition(pi)?,
        Mode::MismatchFree => clifperm::decomp::mismatch_free_decomposition(pi)?,
    };
    d.verify(pi).map_err(DecompError::from)?;
    Ok(DecompositionReport {
        mode,
        n: d.n(),
        phi1: gate_lines(&clifperm::decomp::affine_circuit(&d.left)?),
        mu: gate_lines(&d.middle),
        phi2: gate_lines(&clifperm::decomp::affine_circuit(&d.right)?),
        mu_gates: d.middle.len(),
        max_controls: d.max_controls(),
        text: d.to_text()?,
    })
}
