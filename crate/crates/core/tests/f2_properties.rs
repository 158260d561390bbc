use clifperm::f2::{
    kernel_intersection, simultaneous_strict_lower_triangularize, twisted_gaussian_elimination,
    EliminationOutcome, F2Matrix, F2Vector,
};
use clifperm::random;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

proptest! {
    #[test]
    fn lower_triangular_pushes_alpha_right(seed: u64, n in 1usize..=10) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random::strictly_lower_triangular(&mut rng, n);
        let b = random::nonzero_vector(&mut rng, n);
        prop_assert!(a.mul_vec(&b).alpha() > b.alpha());
    }

    #[test]
    fn triangularization_is_valid(seed: u64, n in 0usize..=8, count in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let family = random::commuting_square_zero_family(&mut rng, n, count);
        let m = simultaneous_strict_lower_triangularize(n, &family).unwrap();
        let inv = m.inverse().expect("invertible");
        for a in &family {
            prop_assert!((&(&m * a) * &inv).is_strictly_lower_triangular());
        }
    }

    #[test]
    fn elimination_replays(seed: u64, n in 1usize..=8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let pairs: Vec<_> = (0..n)
            .map(|_| (random::strictly_lower_triangular(&mut rng, n), random::vector(&mut rng, n)))
            .collect();
        match twisted_gaussian_elimination(&pairs).unwrap() {
            EliminationOutcome::Reduced(rec) => {
                let replayed = rec.replay(&pairs);
                prop_assert_eq!(&replayed, &rec.pairs);
                for (i, (a, b)) in replayed.iter().enumerate() {
                    prop_assert_eq!(*b, F2Vector::unit(n, i));
                    prop_assert!(a.is_strictly_lower_triangular());
                }
                prop_assert!(F2Matrix::from_rows(n, rec.basis.clone()).is_invertible());
            }
            EliminationOutcome::ZeroVectorReached(i) => prop_assert!(i < n),
        }
    }

    #[test]
    fn kernel_vectors_are_killed(seed: u64, n in 1usize..=8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mats = vec![random::matrix(&mut rng, n), random::matrix(&mut rng, n)];
        for v in kernel_intersection(n, &mats) {
            for a in &mats {
                prop_assert!(a.mul_vec(&v).is_zero());
            }
        }
    }
}

#[test]
fn noncommuting_family_rejected() {
    let a = F2Matrix::from_strs(&["000", "100", "000"]);
    let b = F2Matrix::from_strs(&["000", "000", "010"]);
    assert!(simultaneous_strict_lower_triangularize(3, &[a, b]).is_err());
}
