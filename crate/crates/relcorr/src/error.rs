use thiserror::Error;

/// Errors reported by constructors and evaluators in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("x must be finite and >= 0, got {0}")]
    InvalidX(f64),

    #[error("mass must be finite and > 0, got {0}")]
    InvalidMass(f64),

    #[error("direction ({0}, {1}, {2}) has norm {3:.9}, not a unit vector")]
    NonUnitDirection(f64, f64, f64, f64),

    #[error("four-momentum is off shell: k.k = {found:.9e}, expected m^2 = {expected:.9e}")]
    OffShell { found: f64, expected: f64 },

    #[error("four-momentum has non-positive energy {0}")]
    NonPositiveEnergy(f64),

    #[error("momenta carry different masses: {0} vs {1}")]
    MassMismatch(f64, f64),

    #[error("operator dimension {observable} does not match state dimension {state}")]
    DimensionMismatch { observable: usize, state: usize },

    #[error("observable was built at a different momentum than the state leg it acts on")]
    MomentumMismatch,

    #[error("no closed form for {0}; use the oracle backend")]
    ClosedFormUnavailable(String),

    #[error("{0} requires spin one")]
    SpinOneRequired(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("evaluation returned a non-finite value at x = {0}")]
    NonFiniteValue(f64),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
