use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("extension parameter T must exceed 1 (got {0})")]
    InvalidT(f64),
    #[error("truncation degree N must be at least 1")]
    InvalidN,
    #[error("equispaced grid needs M >= N (M={m}, N={n})")]
    UndersampledGrid { m: usize, n: usize },
    #[error("point lies strictly inside (-1,1), on the branch cut")]
    BranchCut,
    #[error("basis index {index} is outside the valid range for N={n}")]
    IndexOutOfRange { index: i64, n: usize },
    #[error("tolerance must lie strictly inside (0,1), got {0}")]
    InvalidTolerance(f64),
    #[error("node density is undefined at z = +/-1")]
    DensityEndpoint,
    #[error("singularity of '{0}' lies on [-1,1]; no geometric rate applies")]
    NotAnalytic(&'static str),
    #[error("unknown builtin function '{0}'")]
    UnknownFunction(String),
}
