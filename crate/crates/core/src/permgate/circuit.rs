//! Circuit descriptors and the line-oriented text format.
//!
//! ```text
//! qubits 3
//! # comments run to end of line
//! TOF 1 2 3
//! CX 1 2 3 4    # any number of controls, last index is the target
//! CCZ 1 2 3
//! ```
//!
//! Gates are listed in the order they are applied.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_QUBITS};

/// One gate with 1-based qubit indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gate {
    /// Multiply-controlled X. Prints as `X`, `CNOT`, `TOF` or `CX`.
    Cx { controls: Vec<usize>, target: usize },
    /// ±1 diagonal `(−1)^{∏ a_q}`: `Z`, `CZ`, `CCZ`.
    Cz { qubits: Vec<usize> },
    /// Controlled swap of `a` and `b`: `SWAP`, `CSWAP`.
    Swap {
        controls: Vec<usize>,
        a: usize,
        b: usize,
    },
    /// Hadamard; only the dense simulator accepts it.
    H { qubit: usize },
}

impl Gate {
    pub fn x(target: usize) -> Self {
        Self::cx(&[], target)
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Self::cx(&[control], target)
    }

    pub fn tof(c1: usize, c2: usize, target: usize) -> Self {
        Self::cx(&[c1, c2], target)
    }

    pub fn cx(controls: &[usize], target: usize) -> Self {
        Self::Cx {
            controls: controls.to_vec(),
            target,
        }
    }

    pub fn cz(qubits: &[usize]) -> Self {
        Self::Cz {
            qubits: qubits.to_vec(),
        }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::Swap {
            controls: Vec::new(),
            a,
            b,
        }
    }

    pub fn cswap(control: usize, a: usize, b: usize) -> Self {
        Self::Swap {
            controls: vec![control],
            a,
            b,
        }
    }

    pub fn h(qubit: usize) -> Self {
        Self::H { qubit }
    }

    /// Every qubit the gate touches, in descriptor order.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::Cx { controls, target } => controls.iter().copied().chain([*target]).collect(),
            Gate::Cz { qubits } => qubits.clone(),
            Gate::Swap { controls, a, b } => controls.iter().copied().chain([*a, *b]).collect(),
            Gate::H { qubit } => vec![*qubit],
        }
    }

    pub fn is_cx(&self) -> bool {
        matches!(self, Gate::Cx { .. })
    }

    /// `(controls, target)` of a C*X gate.
    pub fn as_cx(&self) -> Option<(&[usize], usize)> {
        match self {
            Gate::Cx { controls, target } => Some((controls, *target)),
            _ => None,
        }
    }

    fn validate(&self, n: usize) -> std::result::Result<(), String> {
        let qs = self.qubits();
        if let Gate::Cz { qubits } = self {
            if qubits.is_empty() {
                return Err("diagonal gate needs at least one qubit".into());
            }
        }
        let mut seen = BTreeSet::new();
        for &q in &qs {
            if q == 0 || q > n {
                return Err(format!("qubit {q} out of range 1..={n}"));
            }
            if !seen.insert(q) {
                return Err(format!("qubit {q} repeated in one gate"));
            }
        }
        Ok(())
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, qs: &[usize]) -> fmt::Result {
    f.write_str(name)?;
    for q in qs {
        write!(f, " {q}")?;
    }
    Ok(())
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let qs = self.qubits();
        let name = match self {
            Gate::Cx { controls, .. } => match controls.len() {
                0 => "X",
                1 => "CNOT",
                2 => "TOF",
                _ => "CX",
            },
            Gate::Cz { qubits } => match qubits.len() {
                1 => "Z",
                3 => "CCZ",
                _ => "CZ",
            },
            Gate::Swap { controls, .. } => {
                if controls.is_empty() {
                    "SWAP"
                } else {
                    "CSWAP"
                }
            }
            Gate::H { .. } => "H",
        };
        write_list(f, name, &qs)
    }
}

/// An `n`-qubit gate list in applied order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Self::empty(n)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::DimensionTooLarge {
                what: "circuit",
                n,
                limit: MAX_QUBITS,
            });
        }
        Ok(Self {
            n,
            gates: Vec::new(),
        })
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n).map_err(Error::PreconditionViolated)?;
        self.gates.push(gate);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Circuit) -> Circuit {
        assert_eq!(self.n, other.n, "qubit count mismatch");
        Circuit {
            n: self.n,
            gates: self.gates.iter().chain(&other.gates).cloned().collect(),
        }
    }

    /// Every supported gate is an involution, so the inverse circuit is the
    /// reversed gate list.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            n: self.n,
            gates: self.gates.iter().rev().cloned().collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut circuit: Option<Circuit> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| Error::Parse { line, message };
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut tokens = body.split_whitespace();
            let head = tokens.next().unwrap_or_default();
            let args: Vec<usize> = tokens
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| err(format!("expected a qubit index, found `{t}`")))
                })
                .collect::<Result<_>>()?;

            let Some(c) = circuit.as_mut() else {
                if !head.eq_ignore_ascii_case("qubits") {
                    return Err(err("expected `qubits n` header".into()));
                }
                let [n] = args[..] else {
                    return Err(err("`qubits` takes exactly one number".into()));
                };
                if n == 0 {
                    return Err(err("circuits need at least one qubit".into()));
                }
                circuit = Some(Circuit::empty(n).map_err(|e| err(e.to_string()))?);
                continue;
            };

            let arity = |want: usize| {
                if args.len() == want {
                    Ok(())
                } else {
                    Err(err(format!(
                        "`{head}` takes {want} qubit(s), got {}",
                        args.len()
                    )))
                }
            };
            let gate = match head.to_ascii_uppercase().as_str() {
                "X" => arity(1).map(|_| Gate::x(args[0]))?,
                "CNOT" => arity(2).map(|_| Gate::cnot(args[0], args[1]))?,
                "TOF" => arity(3).map(|_| Gate::tof(args[0], args[1], args[2]))?,
                "CX" => {
                    let (&target, controls) = args
                        .split_last()
                        .ok_or_else(|| err("`CX` needs a target".into()))?;
                    Gate::cx(controls, target)
                }
                "Z" => arity(1).map(|_| Gate::cz(&args))?,
                "CZ" if args.len() >= 2 => Gate::cz(&args),
                "CZ" => arity(2).map(|_| Gate::cz(&args))?,
                "CCZ" => arity(3).map(|_| Gate::cz(&args))?,
                "SWAP" => arity(2).map(|_| Gate::swap(args[0], args[1]))?,
                "CSWAP" if args.len() >= 3 => {
                    let k = args.len() - 2;
                    Gate::Swap {
                        controls: args[..k].to_vec(),
                        a: args[k],
                        b: args[k + 1],
                    }
                }
                "CSWAP" => arity(3).map(|_| Gate::cswap(args[0], args[1], args[2]))?,
                "H" => arity(1).map(|_| Gate::h(args[0]))?,
                "QUBITS" => return Err(err("duplicate `qubits` header".into())),
                _ => return Err(err(format!("unknown gate `{head}`"))),
            };
            gate.validate(c.n).map_err(err)?;
            c.gates.push(gate);
        }
        circuit.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `qubits n` header".into(),
        })
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Circuit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn cx_parts(g: &Gate) -> Result<(&[usize], usize)> {
    g.as_cx()
        .ok_or_else(|| Error::UnsupportedGate(format!("{g} is not a C*X gate")))
}

/// No qubit is a target of one gate and a control of the other.
pub fn cx_commute(g: &Gate, h: &Gate) -> Result<bool> {
    let (gc, gt) = cx_parts(g)?;
    let (hc, ht) = cx_parts(h)?;
    Ok(!gc.contains(&ht) && !hc.contains(&gt))
}

/// No qubit is used both as a control and as a target anywhere in the
/// circuit.
pub fn is_mismatch_free(c: &Circuit) -> Result<bool> {
    let mut controls = BTreeSet::new();
    let mut targets = BTreeSet::new();
    for g in c.gates() {
        let (cs, t) = cx_parts(g)?;
        controls.extend(cs.iter().copied());
        targets.insert(t);
    }
    Ok(controls.is_disjoint(&targets))
}

/// Toffolis only, both controls below the target, targets nondecreasing.
pub fn is_staircase(c: &Circuit) -> bool {
    let mut last = 0;
    c.gates().iter().all(|g| match g.as_cx() {
        Some((&[c1, c2], t)) if c1 < t && c2 < t && t >= last => {
            last = t;
            true
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let text = "qubits 5\n# header\nX 1\nCNOT 1 2  # trailing\nTOF 1 2 3\nCX 1 2 3 4\nCX 5\nZ 2\nCZ 1 2\nCCZ 1 2 3\nSWAP 1 2\nCSWAP 3 4 5\nH 1\n";
        let c = Circuit::parse(text).unwrap();
        assert_eq!(c.len(), 11);
        assert_eq!(c.gates()[4], Gate::x(5));
        let rendered = c.render();
        assert_eq!(
            rendered,
            "qubits 5\nX 1\nCNOT 1 2\nTOF 1 2 3\nCX 1 2 3 4\nX 5\nZ 2\nCZ 1 2\nCCZ 1 2 3\nSWAP 1 2\nCSWAP 3 4 5\nH 1\n"
        );
        assert_eq!(Circuit::parse(&rendered).unwrap(), c);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("TOF 1 2 3", 1),
            ("qubits 3\n\nTOF 1 2 4", 3),
            ("qubits 3\nTOF 1 1 2", 2),
            ("qubits 3\nFOO 1", 2),
            ("qubits 3\nCNOT 1", 2),
            ("qubits 3\nX a", 2),
            ("qubits 0", 1),
            ("qubits 17", 1),
            ("# nothing", 1),
        ];
        for (text, want) in cases {
            match Circuit::parse(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn staircase_predicate() {
        let c = |s: &str| Circuit::parse(s).unwrap();
        assert!(is_staircase(&c(
            "qubits 4\nTOF 1 2 3\nTOF 1 3 4\nTOF 1 2 4"
        )));
        assert!(!is_staircase(&c(
            "qubits 4\nTOF 1 2 4\nTOF 1 2 3\nTOF 1 3 4"
        )));
        assert!(!is_staircase(&c("qubits 4\nTOF 1 4 3")));
        assert!(!is_staircase(&c("qubits 4\nCNOT 1 2")));
        assert!(is_staircase(&c("qubits 4\n")));
    }

    #[test]
    fn mismatch_predicates() {
        let c = Circuit::parse("qubits 4\nTOF 1 2 3\nTOF 1 3 4\nTOF 1 2 4").unwrap();
        assert!(!is_mismatch_free(&c).unwrap());
        let (a, b, d) = (Gate::tof(1, 2, 3), Gate::tof(1, 2, 4), Gate::tof(3, 4, 5));
        assert!(cx_commute(&a, &b).unwrap());
        assert!(!cx_commute(&a, &d).unwrap());
        assert!(matches!(
            cx_commute(&a, &Gate::h(1)),
            Err(Error::UnsupportedGate(_))
        ));
        let free = Circuit::parse("qubits 4\nTOF 1 2 3\nTOF 1 2 4\nX 3").unwrap();
        assert!(is_mismatch_free(&free).unwrap());
    }

    #[test]
    fn inverse_reverses() {
        let c = Circuit::parse("qubits 3\nX 1\nCNOT 1 2").unwrap();
        assert_eq!(c.inverse().gates(), &[Gate::cnot(1, 2), Gate::x(1)]);
    }
}
