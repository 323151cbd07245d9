//! Diagnostics layer: spectrum clustering, convergence breakpoints,
//! condition-number bounds, stability constants and their growth rates,
//! slope fitting, and the node-potential description of the Runge region.

pub mod breakpoints;
pub mod condition;
pub mod error;
pub mod growth;
pub mod kappa;
pub mod potential;
pub mod ratefit;
pub mod spectrum;
pub mod stability;

pub use breakpoints::{breakpoints, n0_formula, sigma_min_equispaced, BreakpointReport};
pub use condition::condition_bound;
pub use error::AnalysisError;
pub use growth::{default_window, growth_rates, GrowthRates};
pub use kappa::{
    empirical_map_norm, kappa_tsvd_formula, kept_left_singular_vectors, random_unit_vectors,
};
pub use potential::{
    potential_at, potential_profile, runge_indicator, runge_region_scan, RungeScan,
};
pub use ratefit::{fit_slope, plateau_onset, rate_fit};
pub use spectrum::{spectrum_report, top_eigenvalue_gap_asymptote, SpectrumReport, DEFAULT_CLUSTER_DELTA};
pub use stability::{stability_constants, StabilityReport};
