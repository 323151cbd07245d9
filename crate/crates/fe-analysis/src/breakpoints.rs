//! Regime breakpoints of the truncated extensions.
//!
//! N0 = -log(eps) / (2 log E(T)) ends guaranteed geometric convergence of
//! the continuous extension; the discrete regime is exactly twice as long,
//! N1 = 2 N0. The equispaced breakpoint N2 is empirical: the largest N at
//! which every singular value of the collocation matrix stays above eps.

use fe_core::{fe_constant, with_digits, BigReal, ExtensionConfig};
use fe_solver::svd;
use fe_systems::build_system;

use crate::error::AnalysisError;
use crate::ratefit::fit_slope;

#[derive(Clone, Debug)]
pub struct BreakpointReport {
    pub t: f64,
    pub epsilon: f64,
    pub gamma: f64,
    pub n0: f64,
    pub n1: f64,
    /// Largest scanned N with sigma_min above epsilon.
    pub n2: usize,
    /// -log(eps)/log(d_hat) from the fitted sigma_min decay.
    pub n2_predicted: Option<f64>,
    pub d_hat: Option<f64>,
}

/// Closed-form continuous breakpoint.
pub fn n0_formula(t: f64, epsilon: f64) -> Result<f64, AnalysisError> {
    let e = fe_constant(&t)?;
    Ok(-epsilon.ln() / (2.0 * e.ln()))
}

/// sigma_min of the equispaced system, escalating to extended precision
/// once the double-precision value dips under its trust floor.
pub fn sigma_min_equispaced(
    n: usize,
    m: usize,
    t: f64,
    extended_digits: u32,
) -> Result<f64, AnalysisError> {
    let cfg = ExtensionConfig::equispaced(t, n, m)?;
    let sys = build_system::<f64>(&cfg)?;
    let sd = svd(&sys)?.sigma_min();
    if sd > 1e-12 {
        return Ok(sd);
    }
    Ok(with_digits(extended_digits, || -> Result<f64, AnalysisError> {
        let sys = build_system::<BigReal>(&cfg)?;
        Ok(svd(&sys)?.sigma_min().to_f64())
    })?)
}

pub fn breakpoints(
    t: f64,
    epsilon: f64,
    gamma: f64,
    nmax: usize,
) -> Result<BreakpointReport, AnalysisError> {
    let n0 = n0_formula(t, epsilon)?;
    let digits = ((-epsilon.log10()).ceil() as u32 + 25).max(40);

    let mut n2 = None;
    let mut history: Vec<(usize, f64)> = Vec::new();
    let mut misses = 0usize;
    for n in 1..=nmax {
        let m = ((gamma * n as f64).round() as usize).max(n);
        let sigma = sigma_min_equispaced(n, m, t, digits)?;
        history.push((n, sigma));
        if sigma > epsilon {
            n2 = Some(n);
            misses = 0;
        } else {
            misses += 1;
            if misses >= 3 {
                break;
            }
        }
    }
    let n2 = match n2 {
        Some(v) if v < nmax => v,
        _ => {
            return Err(AnalysisError::NmaxTooSmall {
                nmax,
                sigma_min: history.last().map(|p| p.1).unwrap_or(f64::NAN),
            })
        }
    };

    // decay base of sigma_min over the pre-breakpoint window
    let fit_pts: Vec<(f64, f64)> = history
        .iter()
        .filter(|&&(n, s)| n >= 2 && n <= n2 && s > 0.0)
        .map(|&(n, s)| (n as f64, -s.ln()))
        .collect();
    let (d_hat, n2_predicted) = if fit_pts.len() >= 4 {
        let d = fit_slope(&fit_pts)?.exp();
        (Some(d), Some(-epsilon.ln() / d.ln()))
    } else {
        (None, None)
    };

    Ok(BreakpointReport {
        t,
        epsilon,
        gamma,
        n0,
        n1: 2.0 * n0,
        n2,
        n2_predicted,
        d_hat,
    })
}
