use clifperm::permgate::{
    anf_of, cx_commute, is_c3, is_clifford, is_in_level, is_mismatch_free, BitTable,
};
use clifperm::{fixtures, random, Circuit, Gate, PermutationGate, SignedPermGate};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn signed(c: &Circuit) -> SignedPermGate {
    SignedPermGate::from_circuit(c).unwrap()
}

proptest! {
    #[test]
    fn anf_round_trips(n in 0usize..=10, seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = BitTable::from_fn(n, |_| rng.gen());
        prop_assert_eq!(anf_of(&t).evaluate(), t);
    }

    #[test]
    fn circuits_give_bijections(seed: u64, n in 1usize..=7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let c = random::signed_perm_circuit(&mut rng, n, 12);
        let g = signed(&c);
        let mut table = g.permutation().table().to_vec();
        table.sort_unstable();
        prop_assert!(table.iter().enumerate().all(|(i, &y)| i as u32 == y));
    }

    #[test]
    fn compose_with_inverse_is_identity(seed: u64, n in 1usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let u = signed(&random::signed_perm_circuit(&mut rng, n, 10));
        prop_assert_eq!(u.compose(&u.inverse()), SignedPermGate::identity(n));
        prop_assert_eq!(u.inverse().compose(&u), SignedPermGate::identity(n));
    }

    #[test]
    fn conjugation_is_a_homomorphism(seed: u64, n in 1usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let u = signed(&random::signed_perm_circuit(&mut rng, n, 10));
        let (p, q) = (random::pauli(&mut rng, n), random::pauli(&mut rng, n));
        let lhs = u.conjugate_pauli(&(p * q));
        let rhs = u.conjugate_pauli(&p).compose(&u.conjugate_pauli(&q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn c3_closed_under_clifford_products(seed: u64, n in 2usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let u = SignedPermGate::from(random::semi_clifford_perm(&mut rng, n, 2));
        prop_assert!(is_c3(&u));
        let v = signed(&random::clifford_circuit(&mut rng, n, 2 * n));
        prop_assert!(is_clifford(&v));
        prop_assert!(is_c3(&v.compose(&u)));
        prop_assert!(is_c3(&u.compose(&v)));
    }

    #[test]
    fn c3_permutation_inverses_are_quadratic(seed: u64, n in 1usize..=7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let pi = random::semi_clifford_perm(&mut rng, n, 2);
        prop_assert!(is_c3(&SignedPermGate::from(pi.clone())));
        prop_assert!(pi.inverse().polynomial_representation().iter().all(|p| p.degree() <= 2));
    }
}

#[test]
fn r_inverse_is_quadratic_while_r_is_not() {
    let r = PermutationGate::from_circuit(&fixtures::r()).unwrap();
    assert_eq!(
        r.polynomial_representation()
            .iter()
            .map(|p| p.degree())
            .max(),
        Some(3)
    );
    assert!(r
        .inverse()
        .polynomial_representation()
        .iter()
        .all(|p| p.degree() <= 2));
}

#[test]
fn level_checks() {
    let r = signed(&fixtures::r());
    assert!(is_in_level(&r, 3).unwrap());
    let tof = signed(&Circuit::parse("qubits 3\nTOF 1 2 3").unwrap());
    let wide = tof.extend_with_inert_qubits(1).unwrap();
    assert!(is_c3(&wide));
    assert!(!is_clifford(&wide));
}

fn cx_gates_on(n: usize, max_qubits: usize) -> Vec<Gate> {
    let mut out = Vec::new();
    for target in 1..=n {
        for mask in 0u32..1 << n {
            let controls: Vec<usize> = (1..=n).filter(|q| mask >> (q - 1) & 1 == 1).collect();
            if controls.contains(&target) || controls.len() + 1 > max_qubits {
                continue;
            }
            out.push(Gate::cx(&controls, target));
        }
    }
    out
}

/// No-mismatch holds exactly when the truth tables commute, for every pair
/// of C*X gates on at most three qubits within five.
#[test]
fn commutation_matches_no_mismatch() {
    let n = 5;
    let gates = cx_gates_on(n, 3);
    let tables: Vec<PermutationGate> = gates
        .iter()
        .map(|g| PermutationGate::from_circuit(&Circuit::new(n, vec![g.clone()]).unwrap()).unwrap())
        .collect();
    for (a, ta) in gates.iter().zip(&tables) {
        for (b, tb) in gates.iter().zip(&tables) {
            let commute = ta.compose(tb) == tb.compose(ta);
            assert_eq!(cx_commute(a, b).unwrap(), commute, "{a} / {b}");
        }
    }
}

#[test]
fn mismatch_free_random_products_commute() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let c = random::mismatch_free(&mut rng, 6, 3, 6);
        assert!(is_mismatch_free(&c).unwrap());
        for a in c.gates() {
            for b in c.gates() {
                assert!(cx_commute(a, b).unwrap());
            }
        }
    }
}

fn tokens(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split_whitespace().map(str::to_string))
        .collect()
}

#[test]
fn fixture_text_round_trips() {
    for text in [
        fixtures::G_TEXT,
        fixtures::F_TEXT,
        fixtures::R_TEXT,
        fixtures::STAIRCASE4_TEXT,
        fixtures::NOT_C3_TEXT,
    ] {
        let c = Circuit::parse(text).unwrap();
        assert_eq!(tokens(&c.render()), tokens(text));
        assert_eq!(Circuit::parse(&c.render()).unwrap(), c);
    }
}
