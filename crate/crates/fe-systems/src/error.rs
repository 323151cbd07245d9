use fe_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SystemsError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("system of {rows}x{cols} exceeds the dense-assembly cap of {cap} entries")]
    TooLarge { rows: usize, cols: usize, cap: usize },
    #[error("quadrature refinements still disagree by {achieved:.3e} (tolerance {tol:.3e})")]
    QuadratureNoConvergence { achieved: f64, tol: f64 },
    #[error("unsupported basis/grid combination: {0}")]
    UnsupportedCombination(&'static str),
    #[error("norm '{kind}' is not defined for {object}")]
    UnsupportedNorm {
        kind: &'static str,
        object: &'static str,
    },
    #[error("extended precision needs at least 30 digits (got {0})")]
    InvalidDigits(u32),
}
