//! Exponential growth rates of the equispaced stability constants.
//!
//! D(N, gamma N) and B(N, gamma N) both grow geometrically in N below the
//! rank breakpoint; the fitted bases c_hat and d_hat determine the
//! accuracy-loss exponent a_hat = log c_hat / log d_hat in (0, 1].

use crate::error::AnalysisError;
use crate::ratefit::fit_slope;
use crate::stability::stability_constants;

#[derive(Clone, Debug)]
pub struct GrowthRates {
    pub gamma: f64,
    pub t: f64,
    pub c_hat: f64,
    pub d_hat: f64,
    pub a_hat: f64,
    pub window: Vec<usize>,
}

pub fn growth_rates(
    gamma: f64,
    t: f64,
    n_window: &[usize],
    epsilon: f64,
    digits: u32,
) -> Result<GrowthRates, AnalysisError> {
    if n_window.len() < 4 {
        return Err(AnalysisError::WindowTooSmall {
            points: n_window.len(),
            min: 4,
        });
    }
    let mut log_d = Vec::with_capacity(n_window.len());
    let mut log_b = Vec::with_capacity(n_window.len());
    for &n in n_window {
        let m = ((gamma * n as f64).round() as usize).max(n);
        let rep = stability_constants(n, m, t, epsilon, digits)?;
        if rep.d_is_infinite || !rep.d.is_finite() || !rep.b.is_finite() {
            return Err(AnalysisError::DegenerateFit(
                "stability constant not resolvable in the window",
            ));
        }
        log_d.push((n as f64, rep.d.ln()));
        log_b.push((n as f64, rep.b.ln()));
    }
    let c_hat = fit_slope(&log_d)?.exp();
    let d_hat = fit_slope(&log_b)?.exp();
    Ok(GrowthRates {
        gamma,
        t,
        c_hat,
        d_hat,
        a_hat: c_hat.ln() / d_hat.ln(),
        window: n_window.to_vec(),
    })
}

/// Default fit window below a known rank breakpoint.
pub fn default_window(n2: usize) -> Vec<usize> {
    let hi = n2.saturating_sub(2).min(24);
    let lo = 6.min(hi.saturating_sub(3)).max(2);
    (lo..=hi).collect()
}
