//! Shared foundations for Fourier extension computations on [-1,1]:
//! extension-interval constants, the x -> z coordinate maps, collocation
//! node generators, basis evaluation, the builtin target-function registry,
//! and the scalar/complex/matrix plumbing every other crate builds on.
//!
//! All values are immutable after construction and every function here is
//! pure, so anything in this crate can be shared freely across threads.

pub mod analyticity;
pub mod bigfloat;
pub mod config;
pub mod constants;
pub mod cx;
pub mod density;
pub mod error;
pub mod mat;
pub mod nodes;
pub mod registry;
pub mod scalar;

pub use analyticity::{analyticity_rate, AnalyticityInfo, Singularity};
pub use bigfloat::{current_digits, with_digits, BigReal};
pub use config::{basis_eval, BasisKind, ExtensionConfig, GridKind};
pub use constants::{
    adaptive_t, c_of_t, fe_constant, joukowski_index, joukowski_index_cx, map_to_z, map_to_z_cx,
    MappedDomain,
};
pub use cx::Cx;
pub use density::node_density;
pub use error::CoreError;
pub use mat::Mat;
pub use nodes::{equispaced_nodes, mapped_chebyshev_nodes, NodeKind, NodeSet};
pub use registry::Builtin;
pub use scalar::Real;
