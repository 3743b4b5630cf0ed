use num_complex::Complex64;

use super::eigen::HermitianEigen;
use super::matrix::ComplexMatrix;
use crate::error::Result;

/// Distinct eigenvalues of a Hermitian matrix with their orthogonal eigenprojections.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    projectors: Vec<ComplexMatrix>,
}

impl SpectralDecomposition {
    /// Assembles a decomposition from eigenvalue clusters. Each cluster carries its
    /// representative value and the orthonormal eigenvectors spanning it.
    pub(crate) fn from_clusters(clusters: Vec<(f64, Vec<Vec<Complex64>>)>) -> Self {
        let mut eigenvalues = Vec::with_capacity(clusters.len());
        let mut projectors = Vec::with_capacity(clusters.len());
        for (value, vecs) in clusters {
            eigenvalues.push(value);
            projectors.push(projector_from_vectors(&vecs));
        }
        Self {
            eigenvalues,
            projectors,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.projectors[0].dim()
    }

    /// `sum_mu lambda_mu P_mu`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.dim());
        for (l, p) in self.eigenvalues.iter().zip(&self.projectors) {
            acc = &acc + &p.scale_real(*l);
        }
        acc
    }

    /// Worst violation of Hermiticity, `P_mu P_nu = delta_{mu nu} P_mu` and completeness.
    pub fn axiom_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        let mut sum = ComplexMatrix::zeros(n);
        for (mu, p) in self.projectors.iter().enumerate() {
            worst = worst.max(p.hermiticity_defect());
            for (nu, q) in self.projectors.iter().enumerate() {
                let pq = p * q;
                let expect = if mu == nu {
                    p.clone()
                } else {
                    ComplexMatrix::zeros(n)
                };
                worst = worst.max((&pq - &expect).hs_norm());
            }
            sum = &sum + p;
        }
        worst.max((&sum - &ComplexMatrix::identity(n)).hs_norm())
    }
}

pub(crate) fn projector_from_vectors(vecs: &[Vec<Complex64>]) -> ComplexMatrix {
    let n = vecs[0].len();
    let mut p = ComplexMatrix::zeros(n);
    for v in vecs {
        p = &p + &ComplexMatrix::outer(v, v);
    }
    p.hermitian_part()
}

/// Default clustering tolerance `1e-8 * max(1, ||V||)`.
pub fn default_cluster_tol(v: &ComplexMatrix) -> f64 {
    1e-8 * v.hs_norm().max(1.0)
}

/// Groups ascending eigenvalues into clusters: consecutive values closer than `tol` merge.
pub(crate) fn cluster_sorted(values: &[f64], tol: f64) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if (v - values[*g.last().unwrap()]).abs() <= tol => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    groups
}

/// Spectral decomposition of a Hermitian `V` into distinct eigenvalues (ascending) and
/// eigenprojections; eigenvalues within `cluster_tol` of a neighbour are merged.
pub fn spectral_projectors(v: &ComplexMatrix, cluster_tol: f64) -> Result<SpectralDecomposition> {
    let eig = HermitianEigen::new(v)?;
    let groups = cluster_sorted(&eig.values, cluster_tol);
    let clusters = groups
        .into_iter()
        .map(|g| {
            let mean = g.iter().map(|&i| eig.values[i]).sum::<f64>() / g.len() as f64;
            let vecs = g.iter().map(|&i| eig.vectors.column(i)).collect();
            (mean, vecs)
        })
        .collect();
    Ok(SpectralDecomposition::from_clusters(clusters))
}
