//! Numerical campaigns: random instances, error sweeps over `n`, power-law fits and the
//! resonance counterexample.

mod config;
mod fit;
pub mod output;
mod random;

pub use config::{ExperimentConfig, HamiltonianSpec, LogSpacing, NGrid, PotentialSpec, Protocol};
pub use fit::{fit_outcome, fit_points, loglog_fit, FitOutcome, PowerLawFit, DEGENERATE_EPS};
pub use random::{diag_potential, involutive_potential, random_hermitian, random_hermitian_stream};

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::evolutions::{ControlledSystem, ScalingSchedule};
use crate::matcore::{binary_power, ComplexMatrix, HermitianEigen};

/// Integers `round(10^(start + k/per_decade))`, deduplicated.
pub fn log_spaced_grid(start_exp: u32, stop_exp: u32, per_decade: u32) -> Vec<u64> {
    let per = per_decade.max(1);
    let steps = stop_exp.saturating_sub(start_exp) * per;
    let mut grid: Vec<u64> = (0..=steps)
        .map(|k| 10f64.powf(start_exp as f64 + k as f64 / per as f64).round() as u64)
        .collect();
    grid.dedup();
    grid
}

/// `(n, epsilon(n))` samples of one error functional for one instance and alpha.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceSeries {
    pub protocol: Protocol,
    pub alpha: f64,
    pub seed: u64,
    pub points: Vec<(u64, f64)>,
}

/// The `(H, V)` pair used for `seed` (and, when `H` is not shared, for the alpha index).
pub fn instance(config: &ExperimentConfig, seed: u64, alpha_index: usize) -> (ComplexMatrix, ComplexMatrix) {
    let dim = config.dim;
    let h = match &config.hamiltonian {
        HamiltonianSpec::Random => {
            let stream = if config.share_hamiltonian { 0 } else { 2 + alpha_index as u64 };
            random_hermitian_stream(seed, stream, dim)
        }
        HamiltonianSpec::Zero => ComplexMatrix::zeros(dim),
        HamiltonianSpec::Diagonal(d) => diag_potential(d),
    };
    let v = match &config.potential {
        PotentialSpec::Diagonal(eigs) => diag_potential(eigs),
        PotentialSpec::Random => random_hermitian_stream(seed, 1, dim),
    };
    (h, v)
}

/// Evaluates the chosen error functional on every grid point for every `(alpha, seed)`.
/// Series come back sorted by `(alpha, seed)` whatever the thread schedule.
pub fn sweep(config: &ExperimentConfig, protocol: Protocol) -> Result<Vec<ConvergenceSeries>> {
    config.validate()?;
    let grid = config.n_values();
    let jobs: Vec<(usize, f64, u64)> = config
        .alphas
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| config.seeds.iter().map(move |&s| (i, a, s)))
        .collect();
    let mut series = jobs
        .par_iter()
        .map(|&(alpha_index, alpha, seed)| {
            let (h, v) = instance(config, seed, alpha_index);
            let system = ControlledSystem::new(&h, &v)?;
            let schedule = ScalingSchedule::power(alpha);
            let points = grid
                .iter()
                .map(|&n| {
                    let eps = match protocol {
                        Protocol::Zeno => system.zeno_error(&schedule, config.t, n)?,
                        Protocol::Trotter => system.trotter_error(&schedule, config.t, n)?,
                    };
                    Ok((n, eps))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ConvergenceSeries {
                protocol,
                alpha,
                seed,
                points,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    series.sort_by(|a, b| a.alpha.total_cmp(&b.alpha).then(a.seed.cmp(&b.seed)));
    Ok(series)
}

/// One row of the beta(alpha) table.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaRow {
    pub alpha: f64,
    pub seed: u64,
    pub outcome: FitOutcome,
}

impl BetaRow {
    pub fn beta(&self) -> Option<f64> {
        self.outcome.slope()
    }
}

/// Fits every series of `sweep(config, Trotter)` over the configured window.
pub fn fit_all(series: &[ConvergenceSeries], window: (u64, u64)) -> Result<Vec<BetaRow>> {
    series
        .iter()
        .map(|s| {
            Ok(BetaRow {
                alpha: s.alpha,
                seed: s.seed,
                outcome: fit_outcome(s, window)?,
            })
        })
        .collect()
}

/// Exponent of `eps^T(n) ~ n^beta` for every alpha and seed of the configuration.
pub fn beta_curve(config: &ExperimentConfig) -> Result<Vec<BetaRow>> {
    beta_curve_with_series(config).map(|(rows, _)| rows)
}

/// [`beta_curve`] together with the underlying series.
pub fn beta_curve_with_series(config: &ExperimentConfig) -> Result<(Vec<BetaRow>, Vec<ConvergenceSeries>)> {
    let series = sweep(config, Protocol::Trotter)?;
    let rows = fit_all(&series, config.fit_window)?;
    Ok((rows, series))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Self::Even
        } else {
            Self::Odd
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Even => "even",
            Self::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceRow {
    pub n: u64,
    pub parity: Parity,
    pub deviation: f64,
}

/// Super-linear coupling `K_n = n^2` at `t = pi/2` with an involutive control `V^2 = I`:
/// reports `|| U_{n,n^2}(pi/2) - e^{-i pi H / 2} ||` for each `n`.
pub fn resonance_demo(h: &ComplexMatrix, n_list: &[u64]) -> Result<Vec<ResonanceRow>> {
    let dim = h.dim();
    let v = involutive_potential(dim);
    let h_eig = HermitianEigen::new(h)?;
    let free = h_eig.exp_minus_i(FRAC_PI_2);
    let identity = ComplexMatrix::identity(dim);
    n_list
        .iter()
        .map(|&n| {
            crate::evolutions::ScalingSchedule::Linear.evaluate(n)?;
            // kick e^{-i (n pi/2) V}; V^2 = I makes it 2 pi periodic, so reduce n mod 4 exactly
            let kick = match n % 4 {
                0 => identity.clone(),
                1 => v.scale(Complex64::new(0.0, -1.0)),
                2 => identity.scale_real(-1.0),
                _ => v.scale(Complex64::new(0.0, 1.0)),
            };
            let step = &kick * &h_eig.exp_minus_i(FRAC_PI_2 / n as f64);
            let evolved = binary_power(&step, n);
            Ok(ResonanceRow {
                n,
                parity: Parity::of(n),
                deviation: (&evolved - &free).hs_norm(),
            })
        })
        .collect()
}
