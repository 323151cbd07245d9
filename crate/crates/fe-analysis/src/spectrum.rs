//! Eigenvalue/singular-value clustering statistics.
//!
//! The continuous Gram is a prolate matrix: eigenvalues pile up
//! exponentially at 1 and at 0 with a transition region of logarithmic
//! width around index dim/T. At T=2 the spectrum is exactly symmetric
//! about 1/2, which doubles as a high-precision self-check.

use fe_core::Real;
use fe_solver::{svd, SvdScalar};
use fe_systems::{LinearSystem, SystemKind};

use crate::error::AnalysisError;

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    /// Eigenvalues (continuous) or singular values (otherwise), descending.
    pub values: Vec<f64>,
    pub delta: f64,
    /// Count with value > 1 - delta.
    pub near_one: usize,
    /// Count with value < delta.
    pub near_zero: usize,
    /// Count inside [delta, 1 - delta].
    pub transition_width: usize,
    /// Predicted transition location 2 W dim with W = 1/(2T).
    pub predicted_transition_index: f64,
    /// max_k |lambda_k + lambda_(dim-1-k) - 1|, continuous T=2 only.
    pub symmetry_residual: Option<f64>,
}

pub const DEFAULT_CLUSTER_DELTA: f64 = 0.1;

pub fn spectrum_report<R: SvdScalar>(
    system: &LinearSystem<R>,
    delta: f64,
) -> Result<SpectrumReport, AnalysisError> {
    let fact = svd(system)?;
    let values: Vec<f64> = fact.s.iter().map(|s| s.to_f64()).collect();
    let near_one = values.iter().filter(|v| **v > 1.0 - delta).count();
    let near_zero = values.iter().filter(|v| **v < delta).count();
    let transition_width = values.len() - near_one - near_zero;
    let dim = values.len() as f64;
    let symmetry_residual = if system.kind == SystemKind::Continuous
        && (system.config.t - 2.0).abs() < 1e-12
    {
        let worst = (0..values.len())
            .map(|k| {
                let pair = fact.s[k].clone() + fact.s[values.len() - 1 - k].clone()
                    - R::one();
                pair.abs().to_f64()
            })
            .fold(0.0_f64, f64::max);
        Some(worst)
    } else {
        None
    };
    Ok(SpectrumReport {
        values,
        delta,
        near_one,
        near_zero,
        transition_width,
        predicted_transition_index: dim / system.config.t,
        symmetry_residual,
    })
}

/// Slepian-type tail prediction for the deviation of the k-th largest
/// eigenvalue from 1: the asymptote in the matrix dimension `dim`, with
/// alpha = 1 - cos(pi/T) and decay base E(T).
pub fn top_eigenvalue_gap_asymptote(k: usize, dim: usize, t: f64) -> f64 {
    let alpha = 1.0 - (std::f64::consts::PI / t).cos();
    let beta = (2.0_f64.sqrt() + alpha.sqrt()) / (2.0_f64.sqrt() - alpha.sqrt());
    let kf = k as f64;
    let fact: f64 = (1..=k).map(|j| j as f64).product::<f64>().max(1.0);
    std::f64::consts::PI.sqrt() / fact
        * 2.0_f64.powf((14.0 * kf + 9.0) / 4.0)
        * alpha.powf((2.0 * kf + 1.0) / 4.0)
        * (2.0 - alpha).powf(-(kf + 0.5))
        * (dim as f64).powf(kf + 0.5)
        * beta.powf(-(dim as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fe_core::ExtensionConfig;
    use fe_systems::build_system;

    #[test]
    fn partition_sums_to_dimension() {
        let cfg = ExtensionConfig::continuous(2.0, 30).unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        let rep = spectrum_report(&sys, 0.1).unwrap();
        assert_eq!(rep.near_one + rep.near_zero + rep.transition_width, 61);
        assert!((rep.predicted_transition_index - 30.5).abs() < 1e-12);
        assert!(rep.symmetry_residual.is_some());
    }

    #[test]
    fn discrete_spectrum_has_no_symmetry_claim() {
        let cfg = ExtensionConfig::discrete(2.0, 10).unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        let rep = spectrum_report(&sys, 0.1).unwrap();
        assert!(rep.symmetry_residual.is_none());
        assert_eq!(rep.values.len(), 22);
    }

    #[test]
    fn beta_reduces_to_extension_constant() {
        // alpha = 1 - cos(pi/2) = 1 at T=2 makes the decay base E(2)
        let t = 2.0;
        let alpha: f64 = 1.0 - (std::f64::consts::PI / t).cos();
        let beta = (2.0_f64.sqrt() + alpha.sqrt()) / (2.0_f64.sqrt() - alpha.sqrt());
        assert!((beta - 5.82842712474619).abs() < 1e-12);
    }
}
