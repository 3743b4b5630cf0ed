use std::f64::consts::PI;

use super::kick::KickOperator;
use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

/// Two kick phases closer than this (in `|sin(dphi/2)|`) are treated as resonant.
pub const RESONANCE_TOL: f64 = 1e-8;

/// Inputs to the explicit kicked-limit error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    /// Resonance constant `C`.
    pub c: f64,
    /// Number of kick sectors.
    pub m: usize,
    /// `||H||` (Hilbert-Schmidt).
    pub h_norm: f64,
    pub t: f64,
}

impl BoundConstants {
    pub fn new(c: f64, m: usize, h_norm: f64, t: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) || m == 0 || !(h_norm.is_finite() && h_norm >= 0.0) || !t.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "invalid bound constants: C = {c}, m = {m}, ||H|| = {h_norm}, t = {t}"
            )));
        }
        Ok(Self { c, m, h_norm, t })
    }

    /// Constants for a given kick and free Hamiltonian. A single-sector kick is a
    /// global phase and the error vanishes identically; `C = 1` is used there.
    pub fn for_kick(kick: &KickOperator, h: &ComplexMatrix, t: f64) -> Result<Self> {
        let c = if kick.sectors() >= 2 {
            resonance_constant(kick.phases())?
        } else {
            1.0
        };
        Self::new(c, kick.sectors(), h.hs_norm(), t)
    }
}

/// `C = max_{mu != nu} |sin((phi_mu - phi_nu)/2)|^{-1}`.
pub fn resonance_constant(phases: &[f64]) -> Result<f64> {
    if phases.len() < 2 {
        return Err(Error::InvalidArgument(
            "the resonance constant needs at least two phases".into(),
        ));
    }
    let mut worst = 0.0_f64;
    for (i, &a) in phases.iter().enumerate() {
        for &b in &phases[i + 1..] {
            let s = ((a - b) / 2.0).sin().abs();
            if s <= RESONANCE_TOL {
                return Err(Error::ResonantPhases { first: a, second: b });
            }
            worst = worst.max(1.0 / s);
        }
    }
    Ok(worst)
}

/// `C |t| m^2 ||H|| (1 + 2 e^{|t| m ||H||}) / n`.
pub fn theorem1_bound(bc: &BoundConstants, n: u64) -> f64 {
    let t = bc.t.abs();
    let m = bc.m as f64;
    bc.c * t * m * m * bc.h_norm * (1.0 + 2.0 * (t * m * bc.h_norm).exp()) / n as f64
}

/// Leading term `K_n ||A|| ||B|| / n` of the generalized Trotter bound, with
/// `A = -iV` and `B = -itH`. The remainder is `O(K_n (K_n + 1) / n^2)` and is not
/// included.
pub fn theorem4_bound(a_norm: f64, b_norm: f64, k_n: f64, n: u64) -> f64 {
    k_n * a_norm * b_norm / n as f64
}

/// True iff `e^{-i t lambda_mu}` are pairwise distinct, i.e. no `t (lambda_mu - lambda_nu)`
/// lies within `tol` of a multiple of 2 pi.
pub fn nonresonance_check(t: f64, eigenvalues: &[f64], tol: f64) -> bool {
    let two_pi = 2.0 * PI;
    for (i, &a) in eigenvalues.iter().enumerate() {
        for &b in &eigenvalues[i + 1..] {
            let x = t * (a - b);
            let dist = (x - two_pi * (x / two_pi).round()).abs();
            if dist <= tol {
                return false;
            }
        }
    }
    true
}
