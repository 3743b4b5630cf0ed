use std::fmt;

use serde::{Deserialize, Serialize};

use super::log_spaced_grid;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Protocol {
    /// `eps^Z`: distance to the controlled limit `e^{-itK_nV} e^{-itH_Z}`.
    Zeno,
    /// `eps^T`: distance to the exact coupled evolution `e^{-it(K_nV + H)}`.
    Trotter,
}

impl Protocol {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Zeno => "zeno",
            Self::Trotter => "trotter",
        }
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Protocol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeno" => Ok(Self::Zeno),
            "trotter" => Ok(Self::Trotter),
            other => Err(Error::InvalidArgument(format!("unknown protocol {other:?}"))),
        }
    }
}

/// The sampled `n` values: either listed or log-spaced between two powers of ten.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NGrid {
    Explicit(Vec<u64>),
    LogSpaced { log_spaced: LogSpacing },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogSpacing {
    pub start_exp: u32,
    pub stop_exp: u32,
    pub per_decade: u32,
}

impl NGrid {
    pub fn values(&self) -> Vec<u64> {
        match self {
            Self::Explicit(v) => v.clone(),
            Self::LogSpaced { log_spaced: s } => log_spaced_grid(s.start_exp, s.stop_exp, s.per_decade),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialSpec {
    /// `V = diag(eigenvalues)`.
    Diagonal(Vec<f64>),
    /// Random Hermitian `V` drawn from its own stream of the seed.
    Random,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonianSpec {
    Random,
    Zero,
    Diagonal(Vec<f64>),
}

/// One numerical campaign. Every field has a default so a config file may set only
/// what it changes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub dim: usize,
    pub t: f64,
    pub alphas: Vec<f64>,
    pub n_grid: NGrid,
    pub fit_window: (u64, u64),
    pub seeds: Vec<u64>,
    pub potential: PotentialSpec,
    pub hamiltonian: HamiltonianSpec,
    /// Reuse one random `H` per seed for every alpha; otherwise draw a fresh `H` per alpha.
    pub share_hamiltonian: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self::paper_fig4()
    }
}

fn doublet_potential() -> PotentialSpec {
    PotentialSpec::Diagonal(vec![1.0, 1.0, 0.0, 0.0, 0.0])
}

impl ExperimentConfig {
    /// Zeno error campaign: alpha in {0.3, 0.5, 0.8}, `n` in [10, 10^6], fit over the
    /// last decade, `V = diag(1,1,0,0,0)`.
    pub fn paper_fig4() -> Self {
        Self {
            dim: 5,
            t: 1.0,
            alphas: vec![0.3, 0.5, 0.8],
            n_grid: NGrid::LogSpaced {
                log_spaced: LogSpacing {
                    start_exp: 1,
                    stop_exp: 6,
                    per_decade: 25,
                },
            },
            fit_window: (100_000, 1_000_000),
            seeds: vec![0, 1, 2],
            potential: doublet_potential(),
            hamiltonian: HamiltonianSpec::Random,
            share_hamiltonian: true,
        }
    }

    /// Generalized Trotter campaign over the same alphas, random `H` and `V`.
    pub fn paper_fig5() -> Self {
        Self {
            potential: PotentialSpec::Random,
            ..Self::paper_fig4()
        }
    }

    /// beta(alpha): 21 alphas in steps of 0.05, `n` in [10^4, 10^6], 10 random instances.
    pub fn paper_fig6() -> Self {
        Self {
            alphas: (0..=20).map(|k| k as f64 / 20.0).collect(),
            n_grid: NGrid::LogSpaced {
                log_spaced: LogSpacing {
                    start_exp: 4,
                    stop_exp: 6,
                    per_decade: 25,
                },
            },
            fit_window: (10_000, 1_000_000),
            seeds: (0..10).collect(),
            potential: PotentialSpec::Random,
            ..Self::paper_fig4()
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "paper-fig4" => Ok(Self::paper_fig4()),
            "paper-fig5" => Ok(Self::paper_fig5()),
            "paper-fig6" => Ok(Self::paper_fig6()),
            other => Err(Error::InvalidArgument(format!(
                "unknown preset {other:?} (expected paper-fig4, paper-fig5 or paper-fig6)"
            ))),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("config: {e}")))
    }

    pub fn n_values(&self) -> Vec<u64> {
        self.n_grid.values()
    }

    /// The same configuration with the `n` grid written out explicitly.
    pub fn resolved(&self) -> Self {
        Self {
            n_grid: NGrid::Explicit(self.n_values()),
            ..self.clone()
        }
    }

    /// Structural checks. Alphas above 1 violate `K_n = o(n)` and are reported as
    /// [`Error::ScheduleViolation`]; everything else is [`Error::InvalidArgument`].
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.dim == 0 {
            return bad("dim must be positive".into());
        }
        if !self.t.is_finite() {
            return bad("t must be finite".into());
        }
        if self.alphas.is_empty() || self.seeds.is_empty() {
            return bad("alphas and seeds must be non-empty".into());
        }
        if let Some(a) = self.alphas.iter().find(|a| !a.is_finite() || **a < 0.0) {
            return bad(format!("alpha {a} must be finite and non-negative"));
        }
        let grid = self.n_values();
        if grid.first() == Some(&0) {
            return bad("n grid must contain positive integers".into());
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return bad("n grid must be strictly increasing".into());
        }
        let (lo, hi) = self.fit_window;
        let (Some(&gmin), Some(&gmax)) = (grid.first(), grid.last()) else {
            return bad("n grid is empty".into());
        };
        if lo > hi || lo < gmin || hi > gmax {
            return bad(format!(
                "fit window [{lo}, {hi}] must lie inside the grid range [{gmin}, {gmax}]"
            ));
        }
        let in_window = grid.iter().filter(|&&n| n >= lo && n <= hi).count();
        if in_window < 2 {
            return bad(format!(
                "fit window [{lo}, {hi}] holds {in_window} grid point(s); at least 2 are needed"
            ));
        }
        if let PotentialSpec::Diagonal(eigs) = &self.potential {
            if eigs.len() != self.dim {
                return bad(format!("potential has {} eigenvalues for dim {}", eigs.len(), self.dim));
            }
        }
        if let HamiltonianSpec::Diagonal(d) = &self.hamiltonian {
            if d.len() != self.dim {
                return bad(format!("hamiltonian diagonal has {} entries for dim {}", d.len(), self.dim));
            }
        }
        if let Some(&alpha) = self.alphas.iter().find(|&&a| a > 1.0) {
            // first grid point where n^alpha >= n
            let n = grid.iter().copied().find(|&n| n > 1).unwrap_or(gmax);
            return Err(Error::ScheduleViolation {
                n,
                k_n: (n as f64).powf(alpha),
            });
        }
        Ok(())
    }
}
