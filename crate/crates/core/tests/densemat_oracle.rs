use clifperm::densemat::{build, dense_is_c3, dense_is_clifford, ScaledIntMatrix};
use clifperm::permgate::{is_c3, is_clifford};
use clifperm::{random, Circuit, SignedPermGate};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn fast_and_dense_predicates_agree() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.gen_range(1..=3);
        let len = rng.gen_range(0..=6);
        let c = random::signed_perm_circuit(&mut rng, n, len);
        let u = SignedPermGate::from_circuit(&c).unwrap();
        let m = build(&c).unwrap();
        assert!(
            m.equals_exact(&ScaledIntMatrix::from_signed_perm(&u)),
            "{c}"
        );
        assert_eq!(is_clifford(&u), dense_is_clifford(&m).unwrap(), "{c}");
        assert_eq!(is_c3(&u), dense_is_c3(&m).unwrap(), "{c}");
    }
}

fn with_hadamards(rng: &mut StdRng, n: usize, len: usize) -> Circuit {
    let base = random::signed_perm_circuit(rng, n, len);
    let mut c = Circuit::empty(n).unwrap();
    for g in base.gates() {
        if rng.gen_bool(0.3) {
            c.push(clifperm::Gate::h(rng.gen_range(1..=n))).unwrap();
        }
        c.push(g.clone()).unwrap();
    }
    c
}

proptest! {
    #[test]
    fn inverse_and_unitarity(seed: u64, n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = build(&with_hadamards(&mut rng, n, 8)).unwrap();
        prop_assert!(m.is_unitary());
        let id = m.multiply(&m.inverse().unwrap()).unwrap();
        prop_assert!(id.equals_exact(&ScaledIntMatrix::identity(n)));
        let m2 = build(&with_hadamards(&mut rng, n, 8)).unwrap();
        prop_assert!(m.multiply(&m2).unwrap().is_unitary());
    }

    #[test]
    fn circuit_concatenation_is_multiplication(seed: u64, n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, b) = (with_hadamards(&mut rng, n, 5), with_hadamards(&mut rng, n, 5));
        let lhs = build(&a.then(&b)).unwrap();
        let rhs = build(&b).unwrap().multiply(&build(&a).unwrap()).unwrap();
        prop_assert!(lhs.equals_exact(&rhs));
        prop_assert!(lhs.equals_up_to_sign(&rhs));
    }
}
