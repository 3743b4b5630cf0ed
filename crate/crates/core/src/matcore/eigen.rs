//! Hermitian eigensolver (cyclic complex Jacobi), exponentials and integer powers.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Relative tolerance on `||H - H^dagger||` before a matrix is rejected as non-Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Absolute tolerance on `||U^dagger U - I||` before a matrix is rejected as non-unitary.
pub const UNITARITY_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

pub fn check_hermitian(h: &ComplexMatrix) -> Result<()> {
    let deviation = h.hermiticity_defect();
    if deviation > HERMITICITY_TOL * h.hs_norm().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

pub fn check_unitary(u: &ComplexMatrix) -> Result<()> {
    let deviation = u.unitarity_defect();
    if deviation > UNITARITY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(())
}

impl HermitianEigen {
    pub fn new(h: &ComplexMatrix) -> Result<Self> {
        check_hermitian(h)?;
        Ok(jacobi(h.hermitian_part()))
    }

    /// `e^{-i s H} = W diag(e^{-i s lambda}) W^dagger`.
    pub fn exp_minus_i(&self, s: f64) -> ComplexMatrix {
        let n = self.values.len();
        let w = &self.vectors;
        let phases: Vec<Complex64> = self
            .values
            .iter()
            .map(|&l| Complex64::from_polar(1.0, -s * l))
            .collect();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, ph) in phases.iter().enumerate() {
                    acc += w[(i, k)] * ph * w[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

fn off_diagonal_norm_sqr(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

fn jacobi(mut a: ComplexMatrix) -> HermitianEigen {
    let n = a.dim();
    let mut v = ComplexMatrix::identity(n);
    let total = a.hs_norm();
    let threshold = (f64::EPSILON * total).powi(2) * 1e-4;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm_sqr(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, new_col)] = v[(r, old_col)];
        }
    }
    HermitianEigen { values, vectors }
}

/// One Jacobi rotation annihilating the (p, q) entry: A <- G^dagger A G, V <- V G
/// with G = diag(1, conj(e)) composed with a real plane rotation, e = a_pq/|a_pq|.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    if r <= f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let e = apq / r;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // G restricted to (p, q): [[c, s], [-s conj(e), c conj(e)]]
    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = -e.conj() * s;
    let g_qq = e.conj() * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// `e^{-i s H}` for Hermitian `H`.
pub fn expm_hermitian(h: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    Ok(HermitianEigen::new(h)?.exp_minus_i(s))
}

/// `U^n` by binary exponentiation.
pub fn unitary_power(u: &ComplexMatrix, n: u64) -> Result<ComplexMatrix> {
    check_unitary(u)?;
    Ok(binary_power(u, n))
}

pub(crate) fn binary_power(u: &ComplexMatrix, mut n: u64) -> ComplexMatrix {
    let mut result = ComplexMatrix::identity(u.dim());
    if n == 0 {
        return result;
    }
    let mut base = u.clone();
    let mut first = true;
    loop {
        if n & 1 == 1 {
            if first {
                result = base.clone();
                first = false;
            } else {
                result = &result * &base;
            }
        }
        n >>= 1;
        if n == 0 {
            break;
        }
        base = &base * &base;
    }
    result
}
