//! Reference implementations used only by the tests. They operate on plain row-major
//! arrays and share no code with the library's linear algebra.
#![allow(dead_code)]

use num_complex::Complex64;
use zeno_trotter::ComplexMatrix;

pub type Dense = Vec<Complex64>;

pub fn dense(m: &ComplexMatrix) -> Dense {
    m.as_slice().to_vec()
}

pub fn to_matrix(dim: usize, d: Dense) -> ComplexMatrix {
    ComplexMatrix::from_row_major(dim, d).expect("finite oracle output")
}

pub fn eye(dim: usize) -> Dense {
    let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        out[i * dim + i] = Complex64::new(1.0, 0.0);
    }
    out
}

pub fn matmul(dim: usize, a: &[Complex64], b: &[Complex64]) -> Dense {
    let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            let aik = a[i * dim + k];
            for j in 0..dim {
                out[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
    out
}

fn one_norm(dim: usize, a: &[Complex64]) -> f64 {
    (0..dim)
        .map(|j| (0..dim).map(|i| a[i * dim + j].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(A)` for a general complex matrix by scaling and squaring with a truncated
/// Taylor series.
pub fn taylor_expm(dim: usize, a: &[Complex64]) -> Dense {
    let norm = one_norm(dim, a);
    let mut squarings = 0u32;
    while norm / 2f64.powi(squarings as i32) > 0.25 {
        squarings += 1;
    }
    let scale = 2f64.powi(-(squarings as i32));
    let scaled: Dense = a.iter().map(|z| z * scale).collect();

    let mut sum = eye(dim);
    let mut term = eye(dim);
    for k in 1..=40 {
        term = matmul(dim, &term, &scaled);
        for z in term.iter_mut() {
            *z /= k as f64;
        }
        for (s, t) in sum.iter_mut().zip(&term) {
            *s += t;
        }
        if one_norm(dim, &term) < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = matmul(dim, &sum, &sum);
    }
    sum
}

/// `exp(-i s H)` via [`taylor_expm`].
pub fn taylor_exp_minus_i(h: &ComplexMatrix, s: f64) -> ComplexMatrix {
    let a: Dense = h.as_slice().iter().map(|z| z * Complex64::new(0.0, -s)).collect();
    to_matrix(h.dim(), taylor_expm(h.dim(), &a))
}

/// `U^n` by `n` successive multiplications.
pub fn naive_power(u: &ComplexMatrix, n: u64) -> ComplexMatrix {
    let dim = u.dim();
    let base = dense(u);
    let mut acc = eye(dim);
    for _ in 0..n {
        acc = matmul(dim, &acc, &base);
    }
    to_matrix(dim, acc)
}

pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// A random unitary built independently of the library's eigensolver.
pub fn random_unitary(seed: u64, dim: usize) -> ComplexMatrix {
    let h = zeno_trotter::experiments::random_hermitian_stream(seed, 99, dim);
    taylor_exp_minus_i(&h, 1.0)
}

/// `W D W^dagger` for a real diagonal `D`, with `W` from [`random_unitary`]. Lets tests
/// prescribe exact eigenvalue multiplicities.
pub fn rotated_diagonal(seed: u64, diag: &[f64]) -> ComplexMatrix {
    let w = random_unitary(seed, diag.len());
    let d = ComplexMatrix::from_real_diagonal(diag);
    (&(&w * &d) * &w.adjoint()).hermitian_part()
}
