use clifperm::decomp::{
    is_semi_clifford, mismatch_free_decomposition, semi_clifford_level, staircase_decomposition,
    DecompError,
};
use clifperm::permgate::{is_c3, is_in_level, is_mismatch_free, is_staircase};
use clifperm::{fixtures, random, search6, Circuit, PermutationGate, SignedPermGate};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn c3(p: &PermutationGate) -> bool {
    is_c3(&SignedPermGate::from(p.clone()))
}

#[test]
fn mismatch_free_round_trips() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 3..=7 {
        for _ in 0..200 {
            let pi = random::semi_clifford_perm(&mut rng, n, 3);
            let d = mismatch_free_decomposition(&pi).unwrap();
            d.verify(&pi).unwrap();
            assert!(is_mismatch_free(&d.middle).unwrap());
            let text = d.to_text().unwrap();
            let back = PermutationGate::from_circuit(&Circuit::parse(&text).unwrap()).unwrap();
            assert_eq!(back, pi);
        }
    }
}

#[test]
fn staircase_round_trips() {
    let mut rng = StdRng::seed_from_u64(12);
    for n in 3..=7 {
        for _ in 0..200 {
            let pi = random::semi_clifford_perm(&mut rng, n, 2);
            let d = staircase_decomposition(&pi).unwrap();
            d.verify(&pi).unwrap();
            assert!(is_staircase(&d.middle));
            assert!(d.max_controls().unwrap_or(0) <= 2);
            assert_eq!(
                PermutationGate::from_circuit(&d.to_circuit().unwrap()).unwrap(),
                pi
            );
        }
    }
}

#[test]
fn semi_clifford_iff_mismatch_free_succeeds() {
    let mut rng = StdRng::seed_from_u64(13);
    let mut outcomes = [0usize; 2];
    for _ in 0..300 {
        let n = rng.gen_range(3..=6);
        // Mixes semi-Clifford inputs with generic Toffoli circuits, most of
        // which are not.
        let pi = if rng.gen_bool(0.5) {
            random::semi_clifford_perm(&mut rng, n, 3)
        } else {
            let c = random::mismatch_free(&mut rng, n, 2, 2)
                .then(&random::mismatch_free(&mut rng, n, 2, 2));
            PermutationGate::from_circuit(&c).unwrap()
        };
        let certified = is_semi_clifford(&pi).is_some();
        outcomes[certified as usize] += 1;
        match mismatch_free_decomposition(&pi) {
            Ok(d) => {
                assert!(certified);
                d.verify(&pi).unwrap();
            }
            Err(DecompError::NotSemiClifford) => assert!(!certified),
            Err(e) => panic!("unexpected error {e}"),
        }
    }
    assert!(outcomes.iter().all(|&c| c > 0), "{outcomes:?}");
}

#[test]
fn semi_clifford_level_matches_hierarchy() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..150 {
        let n = rng.gen_range(2..=4);
        let pi = random::semi_clifford_perm(&mut rng, n, 3);
        let level = semi_clifford_level(&pi).unwrap();
        let u = SignedPermGate::from(pi);
        assert!(is_in_level(&u, level).unwrap(), "level {level}");
        if level > 1 {
            assert!(!is_in_level(&u, level - 1).unwrap(), "level {level}");
        }
    }
}

#[test]
fn every_c3_search_mask_has_a_staircase() {
    let mut seen = 0;
    for mask in 0..search6::TOTAL_MASKS {
        if search6::check_one(mask) == search6::Classification::NotC3 {
            continue;
        }
        seen += 1;
        let pi = search6::build_perm6(mask);
        let d = staircase_decomposition(&pi).unwrap_or_else(|e| panic!("mask {mask:#x}: {e}"));
        d.verify(&pi).unwrap();
        assert!(is_staircase(&d.middle));
    }
    assert_eq!(seen, 6640);
}

#[test]
fn staircase_shape_does_not_imply_c3() {
    let c = fixtures::staircase4();
    assert!(is_staircase(&c));
    let pi = PermutationGate::from_circuit(&c).unwrap();
    assert!(!c3(&pi));
    assert!(matches!(
        staircase_decomposition(&pi),
        Err(DecompError::NotC3(_))
    ));
}

#[test]
fn r_stays_non_semi_clifford_with_an_extra_qubit() {
    let r = PermutationGate::from_circuit(&fixtures::r()).unwrap();
    let wide = r.extend_with_inert_qubits(1).unwrap();
    assert!(c3(&wide));
    assert!(is_semi_clifford(&wide).is_none());
    assert_eq!(
        mismatch_free_decomposition(&wide),
        Err(DecompError::NotSemiClifford)
    );
    staircase_decomposition(&wide)
        .unwrap()
        .verify(&wide)
        .unwrap();
}
