mod common;

use common::*;
use omega_core::form::standard_matrix;
use omega_core::ratmat::int;
use omega_core::{Error, RationalMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transpose_reverses_products(seed: u64, n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_square(&mut rng, n);
        let b = random_square(&mut rng, n);
        prop_assert_eq!(a.mul(&b).unwrap().transpose(), b.transpose().mul(&a.transpose()).unwrap());
    }

    #[test]
    fn det_is_multiplicative(seed: u64, n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_square(&mut rng, n);
        let b = random_square(&mut rng, n);
        let lhs = a.mul(&b).unwrap().det().unwrap();
        prop_assert_eq!(lhs, a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn inverse_is_involutive(seed: u64, n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_square(&mut rng, n);
        match m.inverse() {
            Ok(inv) => {
                prop_assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(n));
                prop_assert_eq!(inv.inverse().unwrap(), m.clone());
            }
            Err(e) => {
                prop_assert_eq!(e, Error::Singular);
                prop_assert!(m.det().unwrap() == int(0));
            }
        }
    }

    #[test]
    fn darboux_basis_reaches_standard_form(seed: u64, half in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 2 * half);
        let d = f.darboux_basis();
        let p = d.p();
        prop_assert_eq!(p.transpose().mul(f.omega()).unwrap().mul(p).unwrap(), standard_matrix(half));
        prop_assert!(d.residual(&f).unwrap().is_zero());
        prop_assert_eq!(f.darboux_basis(), d);
    }

    #[test]
    fn pfaffian_squared_is_positive(seed: u64, half in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 2 * half);
        // det Ω = det(P)⁻², a nonzero square
        let p_det = f.darboux_basis().p().det().unwrap();
        prop_assert_eq!(f.det() * &p_det * &p_det, int(1));
    }
}
