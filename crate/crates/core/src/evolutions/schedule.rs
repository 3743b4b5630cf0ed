use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coupling schedule `n -> K_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingSchedule {
    /// `K_n = n^alpha`.
    Power { alpha: f64 },
    /// `K_n = n` (bang-bang scaling).
    Linear,
    /// Explicit `(n, K_n)` pairs.
    Table { entries: Vec<(u64, f64)> },
}

impl ScalingSchedule {
    pub fn power(alpha: f64) -> Self {
        Self::Power { alpha }
    }

    pub fn table(mut entries: Vec<(u64, f64)>) -> Self {
        entries.sort_by_key(|e| e.0);
        Self::Table { entries }
    }

    pub fn evaluate(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let k = match self {
            Self::Power { alpha } => (n as f64).powf(*alpha),
            Self::Linear => n as f64,
            Self::Table { entries } => entries
                .binary_search_by_key(&n, |e| e.0)
                .map(|i| entries[i].1)
                .map_err(|_| Error::InvalidArgument(format!("schedule table has no entry for n = {n}")))?,
        };
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "K_n must be positive and finite, got {k} at n = {n}"
            )));
        }
        Ok(k)
    }

    /// `K_n < n` at this `n` (the coupling per step stays below one unit of time).
    pub fn is_sublinear_at(&self, n: u64) -> Result<bool> {
        Ok(self.evaluate(n)? < n as f64)
    }

    /// `K_n / n` strictly decreasing along the grid, the sampled form of `K_n = o(n)`.
    pub fn ratio_decreasing_on(&self, grid: &[u64]) -> Result<bool> {
        let ratios = grid
            .iter()
            .map(|&n| Ok(self.evaluate(n)? / n as f64))
            .collect::<Result<Vec<f64>>>()?;
        Ok(ratios.windows(2).all(|w| w[1] < w[0]))
    }
}
