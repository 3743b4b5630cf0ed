use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matcore::ComplexMatrix;

/// `(A + A^dagger)/2` with `Re A_ij`, `Im A_ij` i.i.d. uniform on [-1, 1], drawn from
/// ChaCha8 stream `stream` of `seed`.
pub fn random_hermitian_stream(seed: u64, stream: u64, dim: usize) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let entries: Vec<Complex64> = (0..dim * dim)
        .map(|_| {
            let re = rng.gen_range(-1.0..=1.0);
            let im = rng.gen_range(-1.0..=1.0);
            Complex64::new(re, im)
        })
        .collect();
    ComplexMatrix::from_row_major(dim, entries)
        .expect("uniform draws are finite")
        .hermitian_part()
}

/// Random Hermitian matrix for `seed`; deterministic across runs and platforms.
pub fn random_hermitian(seed: u64, dim: usize) -> ComplexMatrix {
    random_hermitian_stream(seed, 0, dim)
}

/// Diagonal control potential with the given eigenvalues.
pub fn diag_potential(eigs: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(eigs)
}

/// `diag(1, ..., 1, -1, ..., -1)` with `ceil(dim/2)` positive entries, so `V^2 = I`.
pub fn involutive_potential(dim: usize) -> ComplexMatrix {
    let plus = dim.div_ceil(2);
    let eigs: Vec<f64> = (0..dim).map(|i| if i < plus { 1.0 } else { -1.0 }).collect();
    diag_potential(&eigs)
}
