//! Factorization and solving for Fourier extension systems: dense SVD in
//! both precisions, truncated-SVD and minimum-norm least-squares solves,
//! zero-cutoff reference extensions in extended precision, evaluation of
//! solved extensions, and the singular (frame) functions.

pub mod backend;
pub mod error;
pub mod evaluate;
pub mod exact;
pub mod frame;
pub mod jacobi;
pub mod solve;
pub mod svd;

pub use backend::SvdScalar;
pub use error::SolverError;
pub use evaluate::evaluate;
pub use exact::{exact_extension, MIN_DIGITS};
pub use frame::{frame_function, FrameFunction};
pub use jacobi::{jacobi_svd, RawSvd};
pub use solve::{lsq_solve, lsq_solve_with, truncated_solve, truncated_solve_with, ExtensionSolution};
pub use svd::{svd, SvdFactorization};
