use fe_core::CoreError;
use fe_solver::SolverError;
use fe_systems::SystemsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Systems(#[from] SystemsError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("fit window holds {points} points; at least {min} needed")]
    WindowTooSmall { points: usize, min: usize },
    #[error(
        "sigma_min at N={nmax} is still {sigma_min:.3e} > epsilon; \
         raise Nmax to bracket the breakpoint"
    )]
    NmaxTooSmall { nmax: usize, sigma_min: f64 },
    #[error("degenerate fit input: {0}")]
    DegenerateFit(&'static str),
}
