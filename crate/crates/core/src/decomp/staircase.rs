use super::affine::clifford_perm_from_x_images;
use super::{DecompError, Decomposition};
use crate::error::{invariant, Error, Result};
use crate::f2::{
    simultaneous_strict_lower_triangularize, twisted_gaussian_elimination, AffinePair,
    EliminationOutcome, F2Matrix, F2Vector,
};
use crate::pauli::Pauli;
use crate::permgate::{C3Witness, Circuit, Gate, PermutationGate, SignedPermGate};

fn not_c3(pi: &PermutationGate, generator: Pauli) -> DecompError {
    let conjugate = SignedPermGate::from(pi.clone()).conjugate_pauli(&generator);
    DecompError::NotC3(Box::new(C3Witness {
        generator,
        conjugate,
    }))
}

fn as_internal(e: Error) -> Error {
    match e {
        Error::PreconditionViolated(m) => invariant(m),
        other => other,
    }
}

/// `π = φ₁·μ·φ₂` with `μ` a product of Toffolis in staircase form, for any
/// permutation in C₃.
pub fn staircase_decomposition(pi: &PermutationGate) -> Result<Decomposition, DecompError> {
    let n = pi.n();
    let identity = F2Matrix::identity(n);

    // Fix the zero state.
    let w0 = F2Vector::from_bits(n, pi.apply(0) as u32);
    let shift = PermutationGate::translation(&w0);
    let pi1 = shift.compose(pi);

    // πXⱼπ⁻¹ : v ↦ (Aⱼ + I)v + bⱼ.
    let signed1 = SignedPermGate::from(pi1.clone());
    let mut pairs: Vec<AffinePair> = Vec::with_capacity(n);
    for j in 1..=n {
        let generator = Pauli::x_on(n, j);
        let conj = signed1.conjugate_pauli(&generator);
        let affine = conj.as_permutation().and_then(PermutationGate::as_affine);
        let Some((l, c)) = affine else {
            return Err(not_c3(pi, generator));
        };
        pairs.push((&l + &identity, c));
    }

    // Make every Aⱼ strictly lower triangular.
    let mats: Vec<F2Matrix> = pairs.iter().map(|(a, _)| a.clone()).collect();
    let m = simultaneous_strict_lower_triangularize(n, &mats).map_err(as_internal)?;
    let m_inv = m
        .inverse()
        .ok_or_else(|| invariant("triangularizer is singular"))?;
    let mu_m = PermutationGate::affine(&m, &F2Vector::zero(n))?;
    let pi2 = mu_m.compose(&pi1);
    let pairs: Vec<AffinePair> = pairs
        .iter()
        .map(|(a, b)| (&(&m * a) * &m_inv, m.mul_vec(b)))
        .collect();

    // Change X basis so that bᵢ = eᵢ.
    let record = match twisted_gaussian_elimination(&pairs).map_err(as_internal)? {
        EliminationOutcome::Reduced(r) => r,
        EliminationOutcome::ZeroVectorReached(i) => {
            return Err(invariant(format!("pair {} reached b = 0 with π(0) = 0", i + 1)).into())
        }
    };
    let images: Vec<Pauli> = record.basis.iter().map(|&u| Pauli::from_x(u)).collect();
    let nu = clifford_perm_from_x_images(n, &images)?;
    let pi3 = pi2.compose(&nu);

    // π₃⁻¹ has coordinates a_k + q_k with q_k built from aᵢaⱼ, i < j < k.
    let inv = pi3.inverse();
    let mut inverse_circuit = Circuit::empty(n)?;
    let polys = inv.polynomial_representation();
    for k in (1..=n).rev() {
        let poly = &polys[k - 1];
        if poly.degree() > 2 {
            let zk = SignedPermGate::from(nu.clone()).conjugate_pauli(&Pauli::z_on(n, k));
            let witness = zk
                .as_pauli()
                .ok_or_else(|| invariant("linear conjugate of Z is not Pauli"))?;
            return Err(not_c3(pi, witness));
        }
        let own = 1usize << (n - k);
        if !poly.coefficient(own) {
            return Err(invariant(format!("coordinate {k} of the inverse lost a{k}")).into());
        }
        for mask in poly.monomials().filter(|&m| m != own) {
            let vars = poly.variables_of(mask);
            match vars[..] {
                [i, j] if j < k => inverse_circuit.push(Gate::tof(i, j, k))?,
                _ => {
                    return Err(invariant(format!(
                        "coordinate {k} of the inverse has monomial {vars:?}"
                    ))
                    .into())
                }
            }
        }
    }

    let decomposition = Decomposition {
        left: shift.compose(&mu_m.inverse()),
        middle: inverse_circuit.inverse(),
        right: nu.inverse(),
    };
    decomposition.verify(pi)?;
    Ok(decomposition)
}
