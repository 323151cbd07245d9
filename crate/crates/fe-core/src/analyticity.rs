//! Predicted geometric convergence rates from singularity locations.

use crate::constants::{fe_constant, joukowski_index_cx, map_to_z_cx};
use crate::cx::Cx;
use crate::error::CoreError;

/// Nearest obstruction to analyticity of a target function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Singularity {
    /// Entire function; no finite singularity.
    Entire,
    /// Nearest complex singularity off [-1,1].
    At(f64, f64),
    /// Singular point on [-1,1] itself (finite regularity only).
    OnInterval(f64),
}

/// Convergence-rate summary for one (function, T) pair.
#[derive(Clone, Copy, Debug)]
pub struct AnalyticityInfo {
    pub singularity: Singularity,
    /// Bernstein index of the mapped singularity; infinity when entire.
    pub rho_star: f64,
    /// Expected geometric rate rho = min(rho_star, E(T)).
    pub expected_rate: f64,
    /// d_f = log rho / log E(T), in (0,1].
    pub d_f: f64,
}

/// Rate prediction for a function with nearest singularity `x0`
/// (`None` for entire functions).
pub fn analyticity_rate(x0: Option<(f64, f64)>, t: f64) -> Result<AnalyticityInfo, CoreError> {
    let e_t = fe_constant(&t)?;
    let (singularity, rho_star) = match x0 {
        None => (Singularity::Entire, f64::INFINITY),
        Some((re, im)) => {
            if im == 0.0 && (-1.0..=1.0).contains(&re) {
                return Err(CoreError::BranchCut);
            }
            let z = map_to_z_cx(&Cx::new(re, im), &t);
            (Singularity::At(re, im), joukowski_index_cx(&z)?)
        }
    };
    let rho = rho_star.min(e_t);
    Ok(AnalyticityInfo {
        singularity,
        rho_star,
        expected_rate: rho,
        d_f: rho.ln() / e_t.ln(),
    })
}
