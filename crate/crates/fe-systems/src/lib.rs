//! Assembly of Fourier-extension least-squares systems, the Gram matrices
//! behind every norm in use, composite Gauss-Legendre quadrature, and the
//! precision-mode plumbing shared by the solver and analysis layers.

pub mod assembly;
pub mod error;
pub mod gram;
pub mod norms;
pub mod precision;
pub mod quadrature;

pub use assembly::{
    build_system, continuous_rhs, gram_limit_check, grid_nodes, LinearSystem, SystemKind,
    ENTRY_CAP,
};
pub use error::SystemsError;
pub use gram::{continuous_gram, extended_gram, gram_matrices, weighted_gram, GramMatrices};
pub use norms::{
    coefficient_norm, fn_l2, fn_norm, fn_sup_grid, synthesize, uniform_grid, vec_norm, NormKind,
    DEFAULT_SUP_GRID,
};
pub use precision::{PrecisionContext, DEFAULT_EXTENDED_DIGITS, MIN_EXTENDED_DIGITS};
pub use quadrature::{
    gauss_legendre, integrate_adaptive, integrate_cx, integrate_real, refinement_tol,
    QuadratureRule,
};
