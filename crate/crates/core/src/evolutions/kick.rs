use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{
    check_unitary, cluster_sorted, expm_hermitian, projector_from_vectors, spectral_projectors,
    default_cluster_tol, ComplexMatrix, HermitianEigen,
};

/// Arc-length tolerance for identifying two kick eigenphases on the unit circle.
pub const PHASE_CLUSTER_TOL: f64 = 1e-8;

/// Tolerance used to split eigenvalues of Re(U) before resolving them with Im(U).
const REAL_PART_CLUSTER_TOL: f64 = 1e-9;

/// A unitary kick `U_k = sum_mu e^{-i phi_mu} P_mu` with distinct eigenphases.
#[derive(Debug, Clone)]
pub struct KickOperator {
    matrix: ComplexMatrix,
    phases: Vec<f64>,
    projectors: Vec<ComplexMatrix>,
}

/// Maps an angle to the principal branch (-pi, pi].
pub fn wrap_phase(phi: f64) -> f64 {
    let w = (phi + PI).rem_euclid(2.0 * PI) - PI;
    if w <= -PI {
        PI
    } else {
        w
    }
}

impl KickOperator {
    /// Kick generated by a Hermitian control, `U_k = e^{-i s V}`. The eigenprojections
    /// are those of `V`, merged wherever `s * lambda` collide modulo 2 pi.
    pub fn from_generator(v: &ComplexMatrix, s: f64) -> Result<Self> {
        let dec = spectral_projectors(v, default_cluster_tol(v))?;
        let matrix = expm_hermitian(v, s)?;
        let members: Vec<(f64, ComplexMatrix)> = dec
            .eigenvalues()
            .iter()
            .zip(dec.projectors())
            .map(|(&l, p)| (wrap_phase(s * l), p.clone()))
            .collect();
        let (phases, projectors) = merge_on_circle(members, PHASE_CLUSTER_TOL);
        Ok(Self {
            matrix,
            phases,
            projectors,
        })
    }

    /// Spectral resolution of an arbitrary unitary kick.
    ///
    /// `U = A + iB` with commuting Hermitian `A`, `B`; `A` is diagonalized first and
    /// each of its eigenspaces is resolved by `B`.
    pub fn from_unitary(u: &ComplexMatrix) -> Result<Self> {
        check_unitary(u)?;
        let n = u.dim();
        let ud = u.adjoint();
        let re_part = (u + &ud).scale_real(0.5).hermitian_part();
        let im_part = (u - &ud)
            .scale(Complex64::new(0.0, -0.5))
            .hermitian_part();

        let eig_a = HermitianEigen::new(&re_part)?;
        let mut members: Vec<(f64, Vec<Complex64>)> = Vec::with_capacity(n);
        for group in cluster_sorted(&eig_a.values, REAL_PART_CLUSTER_TOL) {
            let basis: Vec<Vec<Complex64>> =
                group.iter().map(|&i| eig_a.vectors.column(i)).collect();
            let k = basis.len();
            let mut restricted = ComplexMatrix::zeros(k);
            for a in 0..k {
                let bq = mat_vec(&im_part, &basis[a]);
                for b in 0..k {
                    restricted[(b, a)] = dot(&basis[b], &bq);
                }
            }
            let eig_b = HermitianEigen::new(&restricted.hermitian_part())?;
            for j in 0..k {
                let mut x = vec![Complex64::new(0.0, 0.0); n];
                for (a, q) in basis.iter().enumerate() {
                    let coeff = eig_b.vectors[(a, j)];
                    for (xi, qi) in x.iter_mut().zip(q) {
                        *xi += coeff * qi;
                    }
                }
                let lambda = dot(&x, &mat_vec(u, &x));
                members.push((wrap_phase(-lambda.arg()), x));
            }
        }

        let grouped: Vec<(f64, ComplexMatrix)> = members
            .into_iter()
            .map(|(phi, x)| (phi, projector_from_vectors(&[x])))
            .collect();
        let (phases, projectors) = merge_on_circle(grouped, PHASE_CLUSTER_TOL);
        let kick = Self {
            matrix: u.clone(),
            phases,
            projectors,
        };
        let defect = (&kick.reconstruct() - u).hs_norm();
        if defect > 1e-8 {
            return Err(Error::InvalidMatrix(format!(
                "spectral resolution of kick failed to reconstruct it (defect {defect:e})"
            )));
        }
        Ok(kick)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Eigenphases `phi_mu` in (-pi, pi], sorted ascending.
    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    /// Number of distinct eigenphases.
    pub fn sectors(&self) -> usize {
        self.phases.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `sum_mu e^{-i phi_mu} P_mu`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.dim());
        for (phi, p) in self.phases.iter().zip(&self.projectors) {
            acc = &acc + &p.scale(Complex64::from_polar(1.0, -phi));
        }
        acc
    }
}

fn mat_vec(m: &ComplexMatrix, x: &[Complex64]) -> Vec<Complex64> {
    let n = m.dim();
    (0..n)
        .map(|i| (0..n).map(|j| m[(i, j)] * x[j]).sum())
        .collect()
}

/// `<a, b>` conjugate-linear in `a`.
fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Merges phases closer than `tol` in arc length (including across the branch cut),
/// summing their projectors. Output is sorted by phase.
fn merge_on_circle(
    mut members: Vec<(f64, ComplexMatrix)>,
    tol: f64,
) -> (Vec<f64>, Vec<ComplexMatrix>) {
    members.sort_by(|a, b| a.0.total_cmp(&b.0));
    // (unwrapped phases, projector sum)
    let mut groups: Vec<(Vec<f64>, ComplexMatrix)> = Vec::new();
    for (phi, p) in members {
        match groups.last_mut() {
            Some((ph, acc)) if phi - ph.last().unwrap() <= tol => {
                ph.push(phi);
                *acc = &*acc + &p;
            }
            _ => groups.push((vec![phi], p)),
        }
    }
    if groups.len() > 1 {
        let first = groups[0].0[0];
        let last = *groups.last().unwrap().0.last().unwrap();
        if first + 2.0 * PI - last <= tol {
            let (ph, acc) = groups.remove(0);
            let tail = groups.last_mut().unwrap();
            tail.0.extend(ph.into_iter().map(|x| x + 2.0 * PI));
            tail.1 = &tail.1 + &acc;
        }
    }
    let mut out: Vec<(f64, ComplexMatrix)> = groups
        .into_iter()
        .map(|(ph, acc)| {
            let mean = ph.iter().sum::<f64>() / ph.len() as f64;
            (wrap_phase(mean), acc.hermitian_part())
        })
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out.into_iter().unzip()
}
