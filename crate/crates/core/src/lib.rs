//! Generalized product formulas for controlled quantum evolution.
//!
//! The crate evaluates four ways of taming a free evolution `e^{-itH}` with a
//! control: instantaneous unitary kicks, strong continuous coupling `H + KV`,
//! Trotterized coupling with an `n`-dependent strength `K_n = n^alpha`, and the
//! generalized Trotter formula itself. Each regime comes with its error
//! functional, explicit bounds where they exist, and sweep/fit drivers that
//! measure convergence rates.
//!
//! Module map:
//!
//! * [`matcore`] - dense complex matrices, Hermitian exponentials, unitary powers,
//!   spectral projectors.
//! * [`evolutions`] - protocol evolution operators, Zeno Hamiltonian, error
//!   functionals and bounds.
//! * [`qubit`] - closed-form analysis of the `V = Z`, `H = X` example.
//! * [`experiments`] - random instances, sweeps, log-log fits, the beta(alpha) curve.
//! * [`cli`] - command-line frontend used by the `zeno-trotter` binary.

pub mod cli;
pub mod error;
pub mod evolutions;
pub mod experiments;
pub mod matcore;
pub mod qubit;

pub use error::{Error, Result};
pub use matcore::ComplexMatrix;
