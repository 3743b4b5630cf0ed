use thiserror::Error;

/// Errors raised by the numerical core and the experiment drivers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian: ||A - A^dagger|| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary: ||U^dagger U - I|| = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error(
        "schedule violates the K_n = o(n) hypothesis at n = {n}: K_n = {k_n} >= n \
         (kick phases may wrap and the Zeno projectors are no longer those of V)"
    )]
    ScheduleViolation { n: u64, k_n: f64 },

    #[error("resonant phases: e^(-i {first}) and e^(-i {second}) coincide")]
    ResonantPhases { first: f64, second: f64 },

    #[error("degenerate step angle at n = {n}: sin(theta_n) underflows")]
    DegenerateAngle { n: u64 },

    #[error("need at least 2 points for a fit, found {found}")]
    InsufficientPoints { found: usize },

    #[error("non-positive value {value:e} at n = {n} inside the fit window")]
    NonpositiveValues { n: u64, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
