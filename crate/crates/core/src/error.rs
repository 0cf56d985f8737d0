use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("fractional order must lie in (0, 1], got {0}")]
    InvalidOrder(f64),

    #[error("integration order must be positive and finite, got {0}")]
    InvalidIntegralOrder(f64),

    #[error("weight index j = {j} outside [0, {max}]")]
    WeightIndex { j: i64, max: i64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("non-finite state at step {step} (t = {time})")]
    NonFinite { step: usize, time: f64 },

    #[error("incompatible trajectories: {0}")]
    IncompatibleTrajectories(String),

    #[error("degenerate error estimate: orders need strictly positive inputs, got {coarse} and {fine}")]
    DegenerateEstimate { coarse: f64, fine: f64 },

    #[error("convergence study at N = {steps}: {source}")]
    Study {
        steps: usize,
        #[source]
        source: Box<Error>,
    },
}
