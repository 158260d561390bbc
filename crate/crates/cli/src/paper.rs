//! The fixed checklist of published results.

use std::fmt;
use std::time::Instant;

use clifperm::decomp::{is_semi_clifford, mismatch_free_decomposition, DecompError};
use clifperm::densemat::build;
use clifperm::permgate::{c3_witness, cx_commute, is_c3, is_clifford};
use clifperm::search6::{self, SearchReport};
use clifperm::{fixtures, Circuit, Gate, Pauli, PermutationGate, SignedPermGate};
use serde::Serialize;

/// Circuits the checklist runs on; defaults to the bundled fixtures.
#[derive(Clone, Debug)]
pub struct PaperFixtures {
    pub g: Circuit,
    pub f: Circuit,
    pub r: Circuit,
}

impl Default for PaperFixtures {
    fn default() -> Self {
        Self {
            g: fixtures::g(),
            f: fixtures::f(),
            r: fixtures::r(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Checklist {
    pub checks: Vec<Check>,
    pub search: Option<SearchReport>,
}

impl Checklist {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl fmt::Display for Checklist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag}  {}  ({}; {:.3}s)", c.name, c.detail, c.seconds)?;
        }
        match self.first_failure() {
            None => writeln!(f, "all {} checks passed", self.checks.len()),
            Some(c) => writeln!(
                f,
                "{} of {} checks failed; first: {}",
                self.failed(),
                self.checks.len(),
                c.name
            ),
        }
    }
}

type Outcome = Result<(bool, String), String>;

fn run(checks: &mut Vec<Check>, name: &str, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    checks.push(Check {
        name: name.to_string(),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    });
}

fn signed(c: &Circuit) -> Result<SignedPermGate, String> {
    SignedPermGate::from_circuit(c).map_err(|e| e.to_string())
}

fn perm(c: &Circuit) -> Result<PermutationGate, String> {
    signed(c)?
        .into_permutation()
        .ok_or_else(|| "circuit is not an unsigned permutation".to_string())
}

fn verdict(ok: bool, yes: &str, no: &str) -> Outcome {
    Ok((ok, if ok { yes } else { no }.to_string()))
}

/// All C*X gates on `n` qubits touching at most `max_qubits` qubits.
fn small_cx_gates(n: usize, max_qubits: usize) -> Vec<Gate> {
    let mut gates = Vec::new();
    for target in 1..=n {
        for mask in 0u32..1 << n {
            let controls: Vec<usize> = (1..=n).filter(|q| mask >> (q - 1) & 1 == 1).collect();
            if !controls.contains(&target) && controls.len() < max_qubits {
                gates.push(Gate::cx(&controls, target));
            }
        }
    }
    gates
}

/// Truth-table commutation equals the no-mismatch predicate for every pair
/// of C*X gates on at most three of five qubits.
pub fn commutation_check() -> Outcome {
    let n = 5;
    let gates = small_cx_gates(n, 3);
    let tables = gates
        .iter()
        .map(|g| PermutationGate::from_circuit(&Circuit::new(n, vec![g.clone()])?))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for (a, ta) in gates.iter().zip(&tables) {
        for (b, tb) in gates.iter().zip(&tables) {
            pairs += 1;
            let commute = ta.compose(tb) == tb.compose(ta);
            if cx_commute(a, b).map_err(|e| e.to_string())? != commute {
                return Ok((false, format!("{a} and {b} disagree")));
            }
        }
    }
    Ok((true, format!("{pairs} ordered pairs agree")))
}

/// Runs the checklist; `search_threads` adds the six-qubit search.
pub fn verify_paper(fx: &PaperFixtures, search_threads: Option<usize>) -> Checklist {
    let mut checks = Vec::new();

    run(&mut checks, "G is in C3", || {
        let g = signed(&fx.g)?;
        let w = c3_witness(&g);
        let detail = match &w {
            None => "all 2n generator conjugates are Clifford".to_string(),
            Some(w) => format!("conjugate of {} is not Clifford", w.generator),
        };
        Ok((w.is_none(), detail))
    });
    run(&mut checks, "G^-1 is not in C3, X7 witness", || {
        let gi = signed(&fx.g)?.inverse();
        let n = gi.n();
        if n < 7 {
            return Err(format!("G has {n} qubits"));
        }
        let x7 = gi.conjugate_pauli(&Pauli::x_on(n, 7));
        verdict(
            !is_clifford(&x7) && !is_c3(&gi),
            "G^-1 X7 G is not Clifford",
            "G^-1 X7 G is Clifford",
        )
    });
    run(&mut checks, "F G F^-1 = R exactly", || {
        let [f, g, r] = [&fx.f, &fx.g, &fx.r].map(build);
        let (f, g, r) = (
            f.map_err(|e| e.to_string())?,
            g.map_err(|e| e.to_string())?,
            r.map_err(|e| e.to_string())?,
        );
        let fgf = f
            .multiply(&g)
            .and_then(|m| m.multiply(&f.inverse()?))
            .map_err(|e| e.to_string())?;
        verdict(
            fgf.equals_exact(&r),
            &format!("{0}x{0} scaled-integer matrices are equal", r.dim()),
            "matrices differ",
        )
    });
    run(&mut checks, "R coordinate 7 has degree 3", || {
        let polys = perm(&fx.r)?.polynomial_representation();
        let last = polys.last().ok_or("R has no qubits")?;
        Ok((polys.len() == 7 && last.degree() == 3, last.to_string()))
    });
    run(&mut checks, "R^-1 coordinates are quadratic", || {
        let d = perm(&fx.r)?
            .inverse()
            .polynomial_representation()
            .iter()
            .map(|p| p.degree())
            .max();
        Ok((
            d.unwrap_or(0) <= 2,
            format!("max degree {}", d.unwrap_or(0)),
        ))
    });
    run(&mut checks, "R is in C3", || {
        let r = signed(&fx.r)?;
        let w = c3_witness(&r);
        let detail = match &w {
            None => "all generator conjugates are Clifford".to_string(),
            Some(w) => format!("conjugate of {} is not Clifford", w.generator),
        };
        Ok((w.is_none(), detail))
    });
    run(&mut checks, "R is not semi-Clifford", || {
        let r = perm(&fx.r)?;
        let cert = is_semi_clifford(&r);
        let decomposition = mismatch_free_decomposition(&r);
        verdict(
            cert.is_none() && decomposition == Err(DecompError::NotSemiClifford),
            "no maximal abelian subgroup maps to a Pauli subgroup",
            "a semi-Clifford certificate exists",
        )
    });
    run(&mut checks, "R^-1 is not in C3", || {
        let w = c3_witness(&signed(&fx.r)?.inverse());
        Ok(match w {
            Some(w) => (
                true,
                format!("conjugate of {} is not Clifford", w.generator),
            ),
            None => (false, "R^-1 passed every generator".to_string()),
        })
    });
    run(&mut checks, "staircase polynomial x4 -> a4+a1a3", || {
        let p = perm(&fixtures::staircase4())?.polynomial_representation()[3].to_string();
        Ok((p == "a4+a1a3", p))
    });
    run(&mut checks, "TOF(3,4,5)TOF(1,2,3) witness X1", || {
        let u = signed(&fixtures::not_c3())?;
        let expected = signed(
            &Circuit::parse("qubits 5\nTOF 2 4 5\nCNOT 2 3\nX 1").map_err(|e| e.to_string())?,
        )?;
        let w = c3_witness(&u).ok_or("gate is in C3")?;
        verdict(
            w.generator == Pauli::x_on(5, 1) && w.conjugate == expected,
            "X1 maps to X1 CNOT(2,3) TOF(2,4,5)",
            "witness differs",
        )
    });
    run(
        &mut checks,
        "mismatch-free iff commuting",
        commutation_check,
    );

    let mut search = None;
    if let Some(threads) = search_threads {
        run(
            &mut checks,
            "six-qubit staircase search certifies every C3 mask",
            || match search6::run_search(threads) {
                Ok(report) => {
                    let detail = format!(
                        "{} masks, {} in C3, {} mismatch-free, {} certified, 0 uncertified",
                        report.total,
                        report.c3_count,
                        report.mismatch_free_count,
                        report.certified_count()
                    );
                    search = Some(report);
                    Ok((true, detail))
                }
                Err(search6::SearchError::CertificationFailure { masks, report }) => {
                    search = Some(*report);
                    Ok((false, format!("{} uncertified masks", masks.len())))
                }
                Err(e) => Err(e.to_string()),
            },
        );
    }
    Checklist { checks, search }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gate_set() {
        // 5 targets, each with 1 + 4 + 6 control sets.
        assert_eq!(small_cx_gates(5, 3).len(), 55);
    }

    #[test]
    fn errors_become_failed_checks() {
        let fx = PaperFixtures {
            r: Circuit::parse("qubits 7\nH 1").unwrap(),
            ..Default::default()
        };
        let list = verify_paper(&fx, None);
        let c = list.checks.iter().find(|c| c.name == "R is in C3").unwrap();
        assert!(!c.passed && c.detail.starts_with("error:"));
    }
}
