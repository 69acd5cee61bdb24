mod common;

use common::*;
use omega_core::group::random_member;
use omega_core::hamfield::{
    field_from_hamiltonian, is_hamiltonian_field, pushforward, recognition_residual, recover_hamiltonian,
};
use omega_core::liealg::{commutator, from_symmetric, is_hamiltonian_matrix, to_symmetric};
use omega_core::poly::euler_integrate;
use omega_core::ratmat::{int, to_f64};
use omega_core::{ConstantPart, PolyMatrix, PolyVectorField};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn euler_identity(seed: u64, n in 1usize..4, d in 1u32..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_poly(&mut rng, n, 5, 6).homogeneous_part(d);
        // x·∇h = d·h
        let mut lhs = omega_core::MultiPoly::zero(n);
        for i in 0..n {
            lhs = &lhs + &(&omega_core::MultiPoly::var(n, i) * &h.derivative(i));
        }
        prop_assert_eq!(lhs, h.scale(&int(d.into())));
        if d >= 2 {
            prop_assert_eq!(euler_integrate(&h.grad(), d - 1).unwrap(), h);
        }
    }

    #[test]
    fn gradients_have_symmetric_jacobians(seed: u64, n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_poly(&mut rng, n, 5, 8);
        prop_assert!(h.grad().jacobian().is_symmetric());
        for (d, part) in h.grad().homogeneous_parts() {
            if d > 0 {
                prop_assert_eq!(euler_integrate(&part, d).unwrap(), h.homogeneous_part(d + 1));
            }
        }
    }

    #[test]
    fn homogeneous_parts_reassemble(seed: u64, n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let comps = (0..n).map(|_| random_poly(&mut rng, n, 4, 5)).collect();
        let x = PolyVectorField::new(n, comps).unwrap();
        let mut sum = PolyVectorField::zero(n, n);
        for (d, part) in x.homogeneous_parts() {
            prop_assert!(part.is_homogeneous(d));
            sum = sum.try_add(&part).unwrap();
        }
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn recovery_round_trips(seed: u64, half in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 2 * half);
        let h = random_poly(&mut rng, 2 * half, 5, 6);
        let hf = field_from_hamiltonian(&f, &h).unwrap();
        let back = recover_hamiltonian(&f, hf.field(), ConstantPart::Allow).unwrap();
        prop_assert_eq!(back.hamiltonian(), &h);
    }

    #[test]
    fn residual_splits_by_degree(seed: u64, half in 1usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 2 * half);
        let n = 2 * half;
        let comps = (0..n).map(|_| random_poly(&mut rng, n, 3, 4)).collect();
        let x = PolyVectorField::new(n, comps).unwrap();
        let full = recognition_residual(&f, &x).unwrap();
        let mut sum = PolyMatrix::from_constant(&omega_core::RationalMatrix::zeros(n, n), n);
        for (_, part) in x.homogeneous_parts() {
            sum = sum.add(&recognition_residual(&f, &part).unwrap()).unwrap();
        }
        prop_assert_eq!(full, sum);
        let rec = is_hamiltonian_field(&f, &x, ConstantPart::Allow).unwrap();
        prop_assert_eq!(rec.hamiltonian, x.is_zero() || recognition_residual(&f, &x).unwrap().is_zero());
    }

    #[test]
    fn hamiltonian_jacobians_lie_in_the_algebra(seed: u64, half in 1usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 2 * half);
        let h = random_poly(&mut rng, 2 * half, 4, 6);
        let jac = field_from_hamiltonian(&f, &h).unwrap().field().jacobian();
        for _ in 0..3 {
            let at = jac.eval(&random_point(&mut rng, 2 * half)).unwrap();
            prop_assert!(is_hamiltonian_matrix(&f, &at).unwrap());
        }
    }

    #[test]
    fn algebra_is_closed_and_trace_free(seed: u64, half in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 2 * half);
        let a = from_symmetric(&f, &random_symmetric(&mut rng, 2 * half)).unwrap();
        let b = from_symmetric(&f, &random_symmetric(&mut rng, 2 * half)).unwrap();
        prop_assert_eq!(a.matrix().trace().unwrap(), int(0));
        prop_assert!(to_symmetric(&a).is_symmetric().unwrap());
        let c = commutator(a.matrix(), b.matrix()).unwrap();
        prop_assert!(is_hamiltonian_matrix(&f, &c).unwrap());
        if f.is_minus_identity_square() {
            prop_assert!(is_hamiltonian_matrix(&f, &a.matrix().transpose()).unwrap());
        }
    }

    #[test]
    fn pushforward_identity(seed: u64, half in 1usize..3, lambda in prop::sample::select(vec![1i64, -1, 4])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 2 * half);
        let h = random_poly(&mut rng, 2 * half, 4, 5);
        let s = random_member(&f, &int(lambda), seed).unwrap();
        let report = pushforward(&field_from_hamiltonian(&f, &h).unwrap(), &s).unwrap();
        prop_assert!(report.identity_holds);
        prop_assert_eq!(report.lambda, int(lambda));
    }

    #[test]
    fn compose_linear_matches_numeric_evaluation(seed: u64, n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poly(&mut rng, n, 4, 5);
        let s = random_square(&mut rng, n);
        let v = random_point(&mut rng, n);
        let composed = p.compose_linear(&s).unwrap();
        prop_assert_eq!(composed.eval(&v).unwrap(), p.eval(&s.mul_vec(&v).unwrap()).unwrap());
        // chain rule: ∇(p∘S)(v) = Sᵀ ∇p(Sv), checked by central differences
        let vf: Vec<f64> = v.iter().map(to_f64).collect();
        let cp = omega_core::poly::CompiledPoly::new(&composed);
        let grad = p.grad().eval(&s.mul_vec(&v).unwrap()).unwrap();
        let exact = s.transpose().mul_vec(&grad).unwrap();
        for i in 0..n {
            let h = 1e-5;
            let mut up = vf.clone();
            let mut down = vf.clone();
            up[i] += h;
            down[i] -= h;
            let fd = (cp.eval(&up) - cp.eval(&down)) / (2.0 * h);
            let want = to_f64(&exact[i]);
            prop_assert!((fd - want).abs() <= 1e-4 * (1.0 + want.abs()), "{} vs {}", fd, want);
        }
    }
}
