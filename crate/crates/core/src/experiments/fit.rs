use serde::{Deserialize, Serialize};

use super::ConvergenceSeries;
use crate::error::{Error, Result};

/// Series whose values inside the window all fall below this are reported as degenerate
/// (commuting instances, where the error is pure roundoff).
pub const DEGENERATE_EPS: f64 = 1e-10;

/// Ordinary least-squares line through `(log10 n, log10 epsilon)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub slope: f64,
    pub intercept: f64,
    pub window: (u64, u64),
    pub rms_residual: f64,
    pub point_count: usize,
}

impl PowerLawFit {
    pub fn predict(&self, n: u64) -> f64 {
        10f64.powf(self.intercept + self.slope * (n as f64).log10())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FitOutcome {
    Fit(PowerLawFit),
    /// Every value in the window is below [`DEGENERATE_EPS`]; no meaningful slope.
    Degenerate,
}

impl FitOutcome {
    pub fn slope(&self) -> Option<f64> {
        match self {
            Self::Fit(f) => Some(f.slope),
            Self::Degenerate => None,
        }
    }
}

/// Least-squares slope of `log10 epsilon` against `log10 n` for the points with
/// `n_min <= n <= n_max`.
pub fn fit_points(points: &[(u64, f64)], window: (u64, u64)) -> Result<PowerLawFit> {
    let inside: Vec<(u64, f64)> = points
        .iter()
        .copied()
        .filter(|&(n, _)| n >= window.0 && n <= window.1)
        .collect();
    if let Some(&(n, value)) = inside.iter().find(|p| p.1.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)) {
        return Err(Error::NonpositiveValues { n, value });
    }
    let count = inside.len();
    if count < 2 {
        return Err(Error::InsufficientPoints { found: count });
    }
    let xs: Vec<f64> = inside.iter().map(|p| (p.0 as f64).log10()).collect();
    let ys: Vec<f64> = inside.iter().map(|p| p.1.log10()).collect();
    let mx = xs.iter().sum::<f64>() / count as f64;
    let my = ys.iter().sum::<f64>() / count as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InsufficientPoints { found: 1 });
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    Ok(PowerLawFit {
        slope,
        intercept,
        window,
        rms_residual: (ss / count as f64).sqrt(),
        point_count: count,
    })
}

pub fn loglog_fit(series: &ConvergenceSeries, window: (u64, u64)) -> Result<PowerLawFit> {
    fit_points(&series.points, window)
}

/// Like [`loglog_fit`] but reports commuting (all-roundoff) series as degenerate.
pub fn fit_outcome(series: &ConvergenceSeries, window: (u64, u64)) -> Result<FitOutcome> {
    let inside: Vec<f64> = series
        .points
        .iter()
        .filter(|&&(n, _)| n >= window.0 && n <= window.1)
        .map(|p| p.1)
        .collect();
    if inside.len() >= 2 && inside.iter().all(|&e| e.abs() <= DEGENERATE_EPS) {
        return Ok(FitOutcome::Degenerate);
    }
    loglog_fit(series, window).map(FitOutcome::Fit)
}
