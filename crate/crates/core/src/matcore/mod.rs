//! Dense complex linear algebra for small Hermitian and unitary matrices.

mod eigen;
mod matrix;
mod spectral;

pub use eigen::{
    check_hermitian, check_unitary, expm_hermitian, unitary_power, HermitianEigen,
    HERMITICITY_TOL, UNITARITY_TOL,
};
pub(crate) use eigen::binary_power;
pub use matrix::{hs_norm, ComplexMatrix};
pub use spectral::{default_cluster_tol, spectral_projectors, SpectralDecomposition};
pub(crate) use spectral::{cluster_sorted, projector_from_vectors};
