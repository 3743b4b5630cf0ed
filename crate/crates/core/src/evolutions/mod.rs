//! Evolution operators of the four control protocols, their limits and error functionals.
//!
//! Conventions: every evolution is `e^{-i t G}` for a Hermitian generator `G`, and all
//! distances are Hilbert-Schmidt norms.

mod bounds;
mod kick;
mod schedule;

pub use bounds::{
    nonresonance_check, resonance_constant, theorem1_bound, theorem4_bound, BoundConstants,
    RESONANCE_TOL,
};
pub use kick::{wrap_phase, KickOperator, PHASE_CLUSTER_TOL};
pub use schedule::ScalingSchedule;

use crate::error::{Error, Result};
use crate::matcore::{
    binary_power, check_hermitian, default_cluster_tol, expm_hermitian, spectral_projectors,
    ComplexMatrix, HermitianEigen, SpectralDecomposition,
};

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("number of steps n must be positive".into()))
    } else {
        Ok(())
    }
}

/// `sum_mu P_mu H P_mu` for an arbitrary projector family.
pub fn block_diagonal_part(h: &ComplexMatrix, projectors: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let mut acc = ComplexMatrix::zeros(h.dim());
    for p in projectors {
        h.check_same_dim(p)?;
        acc = &acc + &(&(p * h) * p);
    }
    Ok(acc.hermitian_part())
}

/// Zeno Hamiltonian `H_Z = sum_mu P_mu H P_mu`.
pub fn zeno_hamiltonian(h: &ComplexMatrix, dec: &SpectralDecomposition) -> Result<ComplexMatrix> {
    h.check_same_dim(&dec.projectors()[0])?;
    check_hermitian(h)?;
    block_diagonal_part(h, dec.projectors())
}

/// `(U_k e^{-itH/n})^n`.
pub fn kicked_evolution(kick: &KickOperator, h: &ComplexMatrix, t: f64, n: u64) -> Result<ComplexMatrix> {
    h.check_same_dim(kick.matrix())?;
    check_n(n)?;
    let step = kick.matrix() * &expm_hermitian(h, t / n as f64)?;
    Ok(binary_power(&step, n))
}

/// `e^{-it(H + KV)}`.
pub fn coupled_evolution(h: &ComplexMatrix, v: &ComplexMatrix, k: f64, t: f64) -> Result<ComplexMatrix> {
    h.check_same_dim(v)?;
    check_hermitian(h)?;
    check_hermitian(v)?;
    expm_hermitian(&(h + &v.scale_real(k)), t)
}

/// `U_{n,K}(t) = (e^{-i(t/n)KV} e^{-i(t/n)H})^n`.
pub fn trotter_step_power(
    h: &ComplexMatrix,
    v: &ComplexMatrix,
    k: f64,
    t: f64,
    n: u64,
) -> Result<ComplexMatrix> {
    ControlledSystem::new(h, v)?.trotter_step_power(k, t, n)
}

/// `|| U_k^{dagger n} (U_k e^{-itH/n})^n - e^{-itH_Z} ||` with `H_Z` built from the kick's
/// eigenprojections.
pub fn pulsed_error(kick: &KickOperator, h: &ComplexMatrix, t: f64, n: u64) -> Result<f64> {
    let evolved = kicked_evolution(kick, h, t, n)?;
    let undo = binary_power(&kick.matrix().adjoint(), n);
    let h_zeno = block_diagonal_part(h, kick.projectors())?;
    let target = expm_hermitian(&h_zeno, t)?;
    Ok((&(&undo * &evolved) - &target).hs_norm())
}

/// `|| e^{itKV} e^{-it(H+KV)} - e^{-itH_Z} ||`.
pub fn strong_coupling_error(h: &ComplexMatrix, v: &ComplexMatrix, k: f64, t: f64) -> Result<f64> {
    ControlledSystem::new(h, v)?.strong_coupling_error(k, t)
}

/// `eps^Z(n) = || U_{n,K_n}(t) - e^{-itK_nV} e^{-itH_Z} ||`. Requires `K_n < n`.
pub fn intermediate_zeno_error(
    h: &ComplexMatrix,
    v: &ComplexMatrix,
    schedule: &ScalingSchedule,
    t: f64,
    n: u64,
) -> Result<f64> {
    ControlledSystem::new(h, v)?.zeno_error(schedule, t, n)
}

/// `eps^T(n) = || U_{n,K_n}(t) - e^{-it(K_nV + H)} ||`.
pub fn generalized_trotter_error(
    h: &ComplexMatrix,
    v: &ComplexMatrix,
    schedule: &ScalingSchedule,
    t: f64,
    n: u64,
) -> Result<f64> {
    ControlledSystem::new(h, v)?.trotter_error(schedule, t, n)
}

/// A free Hamiltonian `H` with control potential `V`, with the spectral data reused
/// across many evaluations (sweeps over `n` or `K`).
#[derive(Debug, Clone)]
pub struct ControlledSystem {
    h: ComplexMatrix,
    v: ComplexMatrix,
    h_eig: HermitianEigen,
    v_eig: HermitianEigen,
    decomposition: SpectralDecomposition,
    h_zeno: ComplexMatrix,
    h_zeno_eig: HermitianEigen,
}

impl ControlledSystem {
    pub fn new(h: &ComplexMatrix, v: &ComplexMatrix) -> Result<Self> {
        h.check_same_dim(v)?;
        let h_eig = HermitianEigen::new(h)?;
        let v_eig = HermitianEigen::new(v)?;
        let decomposition = spectral_projectors(v, default_cluster_tol(v))?;
        let h_zeno = block_diagonal_part(h, decomposition.projectors())?;
        let h_zeno_eig = HermitianEigen::new(&h_zeno)?;
        Ok(Self {
            h: h.hermitian_part(),
            v: v.hermitian_part(),
            h_eig,
            v_eig,
            decomposition,
            h_zeno,
            h_zeno_eig,
        })
    }

    pub fn h(&self) -> &ComplexMatrix {
        &self.h
    }

    pub fn v(&self) -> &ComplexMatrix {
        &self.v
    }

    pub fn decomposition(&self) -> &SpectralDecomposition {
        &self.decomposition
    }

    pub fn zeno_hamiltonian(&self) -> &ComplexMatrix {
        &self.h_zeno
    }

    pub fn trotter_step_power(&self, k: f64, t: f64, n: u64) -> Result<ComplexMatrix> {
        check_n(n)?;
        let tau = t / n as f64;
        let step = &self.v_eig.exp_minus_i(tau * k) * &self.h_eig.exp_minus_i(tau);
        Ok(binary_power(&step, n))
    }

    pub fn coupled_evolution(&self, k: f64, t: f64) -> Result<ComplexMatrix> {
        expm_hermitian(&(&self.h + &self.v.scale_real(k)), t)
    }

    pub fn strong_coupling_error(&self, k: f64, t: f64) -> Result<f64> {
        let rotated = &self.v_eig.exp_minus_i(-t * k) * &self.coupled_evolution(k, t)?;
        Ok((&rotated - &self.h_zeno_eig.exp_minus_i(t)).hs_norm())
    }

    pub fn zeno_error(&self, schedule: &ScalingSchedule, t: f64, n: u64) -> Result<f64> {
        let k = schedule.evaluate(n)?;
        if k >= n as f64 {
            return Err(Error::ScheduleViolation { n, k_n: k });
        }
        self.zeno_error_at(k, t, n)
    }

    /// `eps^Z` at an explicit coupling `k`, without the `K < n` guard.
    pub fn zeno_error_at(&self, k: f64, t: f64, n: u64) -> Result<f64> {
        let evolved = self.trotter_step_power(k, t, n)?;
        let target = &self.v_eig.exp_minus_i(t * k) * &self.h_zeno_eig.exp_minus_i(t);
        Ok((&evolved - &target).hs_norm())
    }

    pub fn trotter_error(&self, schedule: &ScalingSchedule, t: f64, n: u64) -> Result<f64> {
        let k = schedule.evaluate(n)?;
        self.trotter_error_at(k, t, n)
    }

    pub fn trotter_error_at(&self, k: f64, t: f64, n: u64) -> Result<f64> {
        let evolved = self.trotter_step_power(k, t, n)?;
        Ok((&evolved - &self.coupled_evolution(k, t)?).hs_norm())
    }
}
