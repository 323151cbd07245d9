//! Computable upper bounds K on the condition number of the numerical
//! extension maps, via the column-sum identity
//!     K^2 = sum_n ||G(e_n)||^2 = sum_(kept j) (v_j^* Gram v_j) / sigma_j^2,
//! where the Gram realizes the norm of the target space: L2(-1,1) for the
//! continuous and equispaced maps, the weighted norm for the discrete map.

use fe_core::Real;
use fe_solver::{svd, SvdScalar};
use fe_systems::{build_system, continuous_gram, weighted_gram, SystemKind};
use fe_core::ExtensionConfig;

use crate::error::AnalysisError;

pub fn condition_bound<R: SvdScalar>(
    kind: SystemKind,
    n: usize,
    t: f64,
    gamma: f64,
    epsilon: f64,
) -> Result<f64, AnalysisError> {
    let cfg = match kind {
        SystemKind::Continuous => ExtensionConfig::continuous(t, n)?,
        SystemKind::Discrete => ExtensionConfig::discrete(t, n)?,
        SystemKind::Equispaced => {
            let m = ((gamma * n as f64).round() as usize).max(n);
            ExtensionConfig::equispaced(t, n, m)?
        }
    };
    let sys = build_system::<R>(&cfg)?;
    let fact = svd(&sys)?;
    let gram = match kind {
        SystemKind::Discrete => weighted_gram::<R>(n, t)?,
        _ => continuous_gram::<R>(&cfg)?,
    };
    let eps = R::from_f64(epsilon);
    let mut acc = R::zero();
    for (j, sigma) in fact.s.iter().enumerate() {
        if !(sigma > &eps) {
            continue;
        }
        let vj = fact.v.col(j);
        let q = gram.form(&vj, &vj).re.max_with(&R::zero());
        acc = acc + q / (sigma.clone() * sigma.clone());
    }
    Ok(acc.sqrt().to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_bound_counts_kept_directions() {
        // the weighted Gram is the normal matrix, so K^2 collapses to the
        // number of kept singular values
        let n = 12;
        let k = condition_bound::<f64>(SystemKind::Discrete, n, 2.0, 1.0, 1e-14).unwrap();
        let cfg = ExtensionConfig::discrete(2.0, n).unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        let q = svd(&sys).unwrap().rank_above(1e-14) as f64;
        assert!((k * k - q).abs() < 1e-6 * q, "K^2={} Q={q}", k * k);
    }

    #[test]
    fn continuous_bound_tracks_cutoff() {
        // K ~ 1/sqrt(cutoff) once the spectrum crosses it
        let k = condition_bound::<f64>(SystemKind::Continuous, 30, 2.0, 1.0, 1e-8).unwrap();
        let ideal = 1e4;
        assert!(k > 0.3 * ideal && k < 3.0 * ideal, "K = {k:.3e}");
    }
}
