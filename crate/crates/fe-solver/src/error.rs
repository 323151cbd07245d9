use fe_core::CoreError;
use fe_systems::SystemsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Systems(#[from] SystemsError),
    #[error("SVD failed to converge after {sweeps} sweeps")]
    SvdNoConvergence { sweeps: usize },
    #[error("system carries no data vector; attach one before solving")]
    RhsMissing,
    #[error(
        "smallest singular value ~1e{log10_sigma_min:.1} underflows the \
         {digits}-digit budget"
    )]
    PrecisionInsufficient { log10_sigma_min: f64, digits: u32 },
    #[error("evaluation point {x} lies outside [-T,T] with T={t}")]
    PointOutsideDomain { x: f64, t: f64 },
    #[error("singular index {index} out of range ({count} values)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("exact extensions need at least 30 digits (got {0})")]
    InvalidDigits(u32),
}
