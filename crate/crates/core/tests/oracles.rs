mod common;

use common::{max_abs_diff, naive_power, taylor_exp_minus_i};
use num_complex::Complex64;
use zeno_trotter::experiments::random_hermitian;
use zeno_trotter::matcore::{expm_hermitian, unitary_power};
use zeno_trotter::ComplexMatrix;

#[test]
fn taylor_oracle_reproduces_pauli_rotation() {
    let theta = 0.83;
    let u = taylor_exp_minus_i(&ComplexMatrix::pauli_x(), theta);
    let expected = ComplexMatrix::from_rows(&[
        vec![Complex64::new(theta.cos(), 0.0), Complex64::new(0.0, -theta.sin())],
        vec![Complex64::new(0.0, -theta.sin()), Complex64::new(theta.cos(), 0.0)],
    ])
    .unwrap();
    assert!(max_abs_diff(&u, &expected) < 1e-14);
}

#[test]
fn eigen_expm_matches_taylor_oracle() {
    for seed in 0..40 {
        let dim = 2 + (seed as usize % 5);
        let h = random_hermitian(seed, dim);
        for s in [0.1, 1.0, -2.5] {
            let ours = expm_hermitian(&h, s).unwrap();
            let oracle = taylor_exp_minus_i(&h, s);
            let d = max_abs_diff(&ours, &oracle);
            assert!(d < 1e-12, "seed {seed} s {s}: {d:e}");
        }
    }
}

#[test]
fn binary_power_matches_naive_power() {
    for seed in 0..5 {
        let u = expm_hermitian(&random_hermitian(seed, 4), 0.3).unwrap();
        for n in [0, 1, 2, 3, 7, 64, 255, 1000] {
            let d = max_abs_diff(&unitary_power(&u, n).unwrap(), &naive_power(&u, n));
            assert!(d < 1e-12, "seed {seed} n {n}: {d:e}");
        }
    }
}
