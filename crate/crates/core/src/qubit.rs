//! Closed-form analysis of the qubit example `V = Z`, `H = X`, `t = 1`, `K_n = n^alpha`.
//!
//! One Trotter step `e^{-i (K_n/n) Z} e^{-i X/n}` is a rotation `e^{-i theta_n u_n . sigma}`,
//! so `U_n = e^{-i n theta_n u_n . sigma}`; the exact evolution is
//! `V_n = e^{-i phi_n v_n . sigma}` with `phi_n = sqrt(K_n^2 + 1)` and
//! `v_n = (1, 0, K_n) / phi_n`. The distance `U_n - V_n` is governed by the phase gap
//! `phi_n - n theta_n` and the axis gap `u_n - v_n`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

fn check_args(n: u64, alpha: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in [0, 1), got {alpha}"
        )));
    }
    Ok(())
}

fn norm3(v: &[f64; 3]) -> f64 {
    v[0].hypot(v[1]).hypot(v[2])
}

/// `cos(angle) I - i sin(angle) (axis . sigma)`.
pub fn pauli_rotation(angle: f64, axis: &[f64; 3]) -> ComplexMatrix {
    let (s, c) = angle.sin_cos();
    let [x, y, z] = *axis;
    let mi = Complex64::new(0.0, -s);
    ComplexMatrix::from_row_major(
        2,
        vec![
            Complex64::new(c, 0.0) + mi * z,
            mi * Complex64::new(x, -y),
            mi * Complex64::new(x, y),
            Complex64::new(c, 0.0) - mi * z,
        ],
    )
    .expect("finite rotation entries")
}

/// Rotation angle and axis of a single Trotter step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitStep {
    pub n: u64,
    pub alpha: f64,
    pub theta_n: f64,
    pub u_n: [f64; 3],
}

pub fn qubit_step(n: u64, alpha: f64) -> Result<QubitStep> {
    check_args(n, alpha)?;
    let nf = n as f64;
    let a = nf.powf(alpha) / nf;
    let b = 1.0 / nf;
    let (sa, ca) = a.sin_cos();
    let (sb, cb) = b.sin_cos();
    let w = [ca * sb, sa * sb, sa * cb];
    let sin_theta = norm3(&w);
    if sin_theta < 1e-300 {
        return Err(Error::DegenerateAngle { n });
    }
    // atan2 on the quaternion components; arccos(cos a cos b) loses half the digits here
    let theta_n = sin_theta.atan2(ca * cb);
    Ok(QubitStep {
        n,
        alpha,
        theta_n,
        u_n: [w[0] / sin_theta, w[1] / sin_theta, w[2] / sin_theta],
    })
}

impl QubitStep {
    /// `e^{-i theta_n u_n . sigma}`.
    pub fn rotation(&self) -> ComplexMatrix {
        pauli_rotation(self.theta_n, &self.u_n)
    }

    /// `U_n = e^{-i n theta_n u_n . sigma}`.
    pub fn evolution(&self) -> ComplexMatrix {
        pauli_rotation(self.n as f64 * self.theta_n, &self.u_n)
    }
}

/// Angle and axis of the exact evolution `e^{-i (K_n Z + X)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitTarget {
    pub n: u64,
    pub alpha: f64,
    pub phi_n: f64,
    pub v_n: [f64; 3],
}

pub fn qubit_target(n: u64, alpha: f64) -> Result<QubitTarget> {
    check_args(n, alpha)?;
    let k = (n as f64).powf(alpha);
    let phi_n = k.hypot(1.0);
    Ok(QubitTarget {
        n,
        alpha,
        phi_n,
        v_n: [1.0 / phi_n, 0.0, k / phi_n],
    })
}

impl QubitTarget {
    /// `V_n = e^{-i phi_n v_n . sigma}`.
    pub fn evolution(&self) -> ComplexMatrix {
        pauli_rotation(self.phi_n, &self.v_n)
    }
}

/// `U_n - V_n` with its norm and the two gaps controlling it.
#[derive(Debug, Clone)]
pub struct QubitDiff {
    pub step: QubitStep,
    pub target: QubitTarget,
    pub diff: ComplexMatrix,
    pub norm: f64,
    /// `phi_n - n theta_n`.
    pub phase_gap: f64,
    /// `u_n - v_n`.
    pub axis_gap: [f64; 3],
}

pub fn qubit_diff(n: u64, alpha: f64) -> Result<QubitDiff> {
    let step = qubit_step(n, alpha)?;
    let target = qubit_target(n, alpha)?;
    let diff = &step.evolution() - &target.evolution();
    let norm = diff.hs_norm();
    let phase_gap = target.phi_n - n as f64 * step.theta_n;
    let axis_gap = [
        step.u_n[0] - target.v_n[0],
        step.u_n[1] - target.v_n[1],
        step.u_n[2] - target.v_n[2],
    ];
    Ok(QubitDiff {
        step,
        target,
        diff,
        norm,
        phase_gap,
        axis_gap,
    })
}

impl QubitDiff {
    fn nf(&self) -> f64 {
        self.step.n as f64
    }

    pub fn coupling(&self) -> f64 {
        self.nf().powf(self.step.alpha)
    }

    /// `K_n / phi_n`, which tends to 1 for `alpha > 0` and equals `1/sqrt 2` at `alpha = 0`.
    pub fn coupling_factor(&self) -> f64 {
        self.coupling() / self.target.phi_n
    }

    /// `(phi_n - n theta_n) n^2 / K_n`, asymptotically `K_n / (6 phi_n)`.
    pub fn scaled_phase_gap(&self) -> f64 {
        self.phase_gap * self.nf() * self.nf() / self.coupling()
    }

    /// `n (u_n - v_n)`.
    pub fn scaled_axis_gap(&self) -> [f64; 3] {
        let n = self.nf();
        [self.axis_gap[0] * n, self.axis_gap[1] * n, self.axis_gap[2] * n]
    }

    /// `|| n (U_n - V_n) + i c sin(phi_n) Y ||` for a prefactor `c`.
    fn residual_with(&self, c: f64) -> f64 {
        let lead = ComplexMatrix::pauli_y().scale(Complex64::new(0.0, c * self.target.phi_n.sin()));
        (&self.diff.scale_real(self.nf()) + &lead).hs_norm()
    }

    /// `|| n (U_n - V_n) + i sin(phi_n) Y ||`, the remainder after the leading term.
    pub fn leading_residual(&self) -> f64 {
        self.residual_with(1.0)
    }

    /// Same remainder with the finite-coupling prefactor `K_n / phi_n` on the leading term.
    pub fn finite_coupling_residual(&self) -> f64 {
        self.residual_with(self.coupling_factor())
    }
}
