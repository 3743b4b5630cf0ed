mod common;

use common::{max_abs_diff, naive_power, rotated_diagonal, taylor_exp_minus_i};
use proptest::prelude::*;
use zeno_trotter::evolutions::{
    block_diagonal_part, generalized_trotter_error, intermediate_zeno_error, kicked_evolution,
    pulsed_error, theorem1_bound, theorem4_bound, BoundConstants, ControlledSystem, KickOperator,
    ScalingSchedule,
};
use zeno_trotter::experiments::{random_hermitian, random_hermitian_stream};
use zeno_trotter::{ComplexMatrix, Error};

fn controlled(seed: u64, diag: &[f64]) -> (ComplexMatrix, ComplexMatrix) {
    (random_hermitian(seed, diag.len()), rotated_diagonal(seed ^ 0x5eed, diag))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn zeno_hamiltonian_structure(seed in any::<u64>(), diag in prop::collection::vec(-2i32..=2, 2..=5)) {
        let diag: Vec<f64> = diag.into_iter().map(f64::from).collect();
        let (h, v) = controlled(seed, &diag);
        let sys = ControlledSystem::new(&h, &v).unwrap();
        let hz = sys.zeno_hamiltonian();
        prop_assert!(v.commutator(hz).hs_norm() < 1e-10);
        prop_assert!(hz.hermiticity_defect() < 1e-12);
        let again = block_diagonal_part(hz, sys.decomposition().projectors()).unwrap();
        prop_assert!(max_abs_diff(&again, hz) < 1e-12);
        prop_assert!((hz.trace() - h.trace()).norm() < 1e-10);
    }

    #[test]
    fn product_formula_is_unitary(seed in any::<u64>(), k in 0.0f64..100.0, n in 1u64..10_000) {
        let h = random_hermitian(seed, 4);
        let v = random_hermitian_stream(seed, 1, 4);
        let sys = ControlledSystem::new(&h, &v).unwrap();
        prop_assert!(sys.trotter_step_power(k, 1.0, n).unwrap().unitarity_defect() < 1e-10);
    }

    #[test]
    fn pulsed_and_intermediate_agree(seed in any::<u64>(), n in 2u64..2000, alpha in 0.1f64..0.9) {
        let h = random_hermitian(seed, 4);
        let v = rotated_diagonal(seed, &[1.0, 1.0, 0.0, -0.5]);
        let schedule = ScalingSchedule::power(alpha);
        let k = schedule.evaluate(n).unwrap();
        let kick = KickOperator::from_generator(&v, k / n as f64).unwrap();
        prop_assume!(kick.sectors() == 3);
        let pulsed = pulsed_error(&kick, &h, 1.0, n).unwrap();
        let zeno = intermediate_zeno_error(&h, &v, &schedule, 1.0, n).unwrap();
        prop_assert!((pulsed - zeno).abs() < 1e-10, "{pulsed} vs {zeno}");
    }

    #[test]
    fn error_triangle_inequality(seed in any::<u64>(), n in 10u64..100_000, alpha in 0.05f64..0.95) {
        let h = random_hermitian(seed, 4);
        let v = random_hermitian_stream(seed, 1, 4);
        let sys = ControlledSystem::new(&h, &v).unwrap();
        let k = ScalingSchedule::power(alpha).evaluate(n).unwrap();
        let zeno = sys.zeno_error_at(k, 1.0, n).unwrap();
        let trotter = sys.trotter_error_at(k, 1.0, n).unwrap();
        let strong = sys.strong_coupling_error(k, 1.0).unwrap();
        prop_assert!(zeno <= trotter + strong + 1e-10);
        prop_assert!(trotter <= zeno + strong + 1e-10);
    }
}

#[test]
fn kicked_evolution_matches_oracles() {
    let h = random_hermitian(3, 3);
    let v = random_hermitian_stream(3, 1, 3);
    let kick = KickOperator::from_generator(&v, 0.7).unwrap();
    let step = &taylor_exp_minus_i(&v, 0.7) * &taylor_exp_minus_i(&h, 1.0 / 50.0);
    let d = max_abs_diff(&kicked_evolution(&kick, &h, 1.0, 50).unwrap(), &naive_power(&step, 50));
    assert!(d < 1e-12, "{d:e}");
}

#[test]
fn from_unitary_agrees_with_from_generator() {
    let v = rotated_diagonal(11, &[1.0, 1.0, -1.0, 0.25]);
    let a = KickOperator::from_generator(&v, 0.9).unwrap();
    let b = KickOperator::from_unitary(a.matrix()).unwrap();
    assert_eq!(a.sectors(), b.sectors());
    for (pa, pb) in a.projectors().iter().zip(b.projectors()) {
        assert!(max_abs_diff(pa, pb) < 1e-9);
    }
}

#[test]
fn trotter_error_below_leading_bound() {
    for seed in 0..5 {
        let h = random_hermitian(seed, 5);
        let v = random_hermitian_stream(seed, 1, 5);
        let (a, b) = (v.hs_norm(), h.hs_norm());
        for alpha in [0.3, 0.5, 0.8, 1.0] {
            let schedule = ScalingSchedule::power(alpha);
            for n in [1_000u64, 10_000, 100_000, 1_000_000] {
                let k = schedule.evaluate(n).unwrap();
                let eps = generalized_trotter_error(&h, &v, &schedule, 1.0, n).unwrap();
                assert!(eps <= 2.0 * theorem4_bound(a, b, k, n), "seed {seed} alpha {alpha} n {n}");
            }
        }
    }
}

#[test]
fn kicked_bound_for_random_kicks() {
    for seed in 0..5 {
        let h = random_hermitian(seed, 4);
        let v = rotated_diagonal(seed, &[0.0, 1.0, 1.0, 2.5]);
        let kick = KickOperator::from_generator(&v, 1.0).unwrap();
        let bc = BoundConstants::for_kick(&kick, &h, 1.0).unwrap();
        for n in [10u64, 1_000, 100_000] {
            assert!(pulsed_error(&kick, &h, 1.0, n).unwrap() <= theorem1_bound(&bc, n));
        }
    }
}

#[test]
fn zeno_error_rejects_linear_coupling() {
    let h = random_hermitian(0, 3);
    let v = random_hermitian_stream(0, 1, 3);
    let err = intermediate_zeno_error(&h, &v, &ScalingSchedule::Linear, 1.0, 100).unwrap_err();
    assert!(matches!(err, Error::ScheduleViolation { n: 100, .. }));
    assert!(generalized_trotter_error(&h, &v, &ScalingSchedule::Linear, 1.0, 100).is_ok());
}
