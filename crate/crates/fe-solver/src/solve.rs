//! Truncated-SVD and minimum-norm least-squares solves.

use fe_core::{Cx, ExtensionConfig, Real};
use fe_systems::{vec_norm, LinearSystem};

use crate::backend::SvdScalar;
use crate::error::SolverError;
use crate::svd::{svd, SvdFactorization};

/// Solved extension: coefficient vector plus the truncation bookkeeping.
#[derive(Clone, Debug)]
pub struct ExtensionSolution<R: Real> {
    pub coefficients: Vec<Cx<R>>,
    pub config: ExtensionConfig,
    /// Truncation level used; 0 in exact mode.
    pub cutoff: f64,
    /// Number of singular values strictly above the cutoff.
    pub kept_rank: usize,
    pub residual_norm: R,
}

fn assemble_solution<R: Real>(
    system: &LinearSystem<R>,
    fact: &SvdFactorization<R>,
    rhs: &[Cx<R>],
    eps: &R,
    cutoff_label: f64,
) -> ExtensionSolution<R> {
    let mut kept = 0usize;
    let mut coeffs = vec![Cx::<R>::zero(); fact.v.rows()];
    let utb = fact.u.conj_t_vec(rhs);
    for (k, sigma) in fact.s.iter().enumerate() {
        if !(sigma > eps) {
            continue;
        }
        kept += 1;
        let w = utb[k].unscale(sigma);
        for i in 0..fact.v.rows() {
            coeffs[i].mul_acc(fact.v.at(i, k), &w);
        }
    }
    let ax = system.matrix.mat_vec(&coeffs);
    let res: Vec<Cx<R>> = ax
        .into_iter()
        .zip(rhs)
        .map(|(a, b)| a - b.clone())
        .collect();
    ExtensionSolution {
        coefficients: coeffs,
        config: system.config,
        cutoff: cutoff_label,
        kept_rank: kept,
        residual_norm: vec_norm(&res),
    }
}

/// Keep only singular directions with sigma strictly above `epsilon`.
pub fn truncated_solve<R: SvdScalar>(
    system: &LinearSystem<R>,
    epsilon: f64,
) -> Result<ExtensionSolution<R>, SolverError> {
    let fact = svd(system)?;
    truncated_solve_with(system, &fact, epsilon)
}

/// Same, reusing a factorization across cutoff sweeps.
pub fn truncated_solve_with<R: Real>(
    system: &LinearSystem<R>,
    fact: &SvdFactorization<R>,
    epsilon: f64,
) -> Result<ExtensionSolution<R>, SolverError> {
    let rhs = system.rhs.as_ref().ok_or(SolverError::RhsMissing)?;
    let eps = R::from_f64(epsilon);
    Ok(assemble_solution(system, fact, rhs, &eps, epsilon))
}

/// Minimum-norm least squares with the machine-level relative cutoff
/// sigma > u * sigma_max * max(rows, cols) — the stand-in for what a
/// generic dense solver produces.
pub fn lsq_solve<R: SvdScalar>(
    system: &LinearSystem<R>,
) -> Result<ExtensionSolution<R>, SolverError> {
    let fact = svd(system)?;
    lsq_solve_with(system, &fact)
}

pub fn lsq_solve_with<R: Real>(
    system: &LinearSystem<R>,
    fact: &SvdFactorization<R>,
) -> Result<ExtensionSolution<R>, SolverError> {
    let rhs = system.rhs.as_ref().ok_or(SolverError::RhsMissing)?;
    let dim = system.rows().max(system.cols());
    let eps = R::eps() * fact.sigma_max() * R::from_usize(dim);
    Ok(assemble_solution(system, fact, rhs, &eps, eps.to_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fe_core::{basis_eval, ExtensionConfig, Mat};
    use fe_systems::{build_system, SystemKind, PrecisionContext};

    fn diag_system(d: &[f64], rhs: &[(f64, f64)]) -> LinearSystem<f64> {
        let n = d.len();
        let cfg = ExtensionConfig::continuous(2.0, (n - 1) / 2).unwrap();
        let matrix = Mat::from_fn(n, n, |i, j| {
            if i == j {
                Cx::from_f64(d[i], 0.0)
            } else {
                Cx::zero()
            }
        });
        LinearSystem {
            matrix,
            rhs: Some(rhs.iter().map(|&(r, i)| Cx::from_f64(r, i)).collect()),
            kind: SystemKind::Continuous,
            config: cfg,
            precision: PrecisionContext::Double,
        }
    }

    #[test]
    fn discards_tiny_directions() {
        let sys = diag_system(&[1.0, 1e-8, 1.0], &[(2.0, 0.0), (3e-8, 0.0), (0.0, 0.0)]);
        let sol = truncated_solve(&sys, 1e-6).unwrap();
        assert_eq!(sol.kept_rank, 2);
        assert!((sol.coefficients[0].re - 2.0).abs() < 1e-12);
        assert!(sol.coefficients[1].abs() < 1e-15);
        // residual is exactly the discarded data component
        assert!((sol.residual_norm - 3e-8).abs() < 1e-20);
    }

    #[test]
    fn zero_cutoff_matches_lsq_on_well_conditioned() {
        let sys = diag_system(
            &[2.0, 1.5, 0.5],
            &[(1.0, 0.5), (-0.7, 0.2), (0.3, -0.9)],
        );
        let a = truncated_solve(&sys, 0.0).unwrap();
        let b = lsq_solve(&sys).unwrap();
        for (x, y) in a.coefficients.iter().zip(&b.coefficients) {
            assert!((x.clone() - y.clone()).abs() < 1e-10);
        }
        assert!(a.residual_norm < 1e-12);
    }

    #[test]
    fn minimum_norm_on_rank_deficient() {
        let cfg = ExtensionConfig::continuous(2.0, 0);
        // build by hand: [[1,1],[1,1]] with b = (2,2) -> min-norm (1,1)
        let matrix = Mat::from_fn(2, 2, |_, _| Cx::<f64>::one());
        let sys = LinearSystem {
            matrix,
            rhs: Some(vec![Cx::from_f64(2.0, 0.0), Cx::from_f64(2.0, 0.0)]),
            kind: SystemKind::Continuous,
            config: cfg.unwrap_or_else(|_| ExtensionConfig::continuous(2.0, 1).unwrap()),
            precision: PrecisionContext::Double,
        };
        let sol = lsq_solve(&sys).unwrap();
        assert!((sol.coefficients[0].re - 1.0).abs() < 1e-12);
        assert!((sol.coefficients[1].re - 1.0).abs() < 1e-12);
        assert_eq!(sol.kept_rank, 1);
    }

    #[test]
    fn recovers_known_coefficients_pre_breakpoint() {
        // f built from decaying coefficients inside the space; N small
        // enough that no singular value is truncated at 1e-14
        let n = 4usize;
        let cfg = ExtensionConfig::continuous(2.0, n).unwrap();
        let truth: Vec<Cx<f64>> = (0..2 * n + 1)
            .map(|k| {
                let d = (k as i64 - n as i64).unsigned_abs() as i32;
                Cx::from_f64(0.5_f64.powi(d), 0.25 * 0.4_f64.powi(d))
            })
            .collect();
        let truth_clone = truth.clone();
        let f = move |x: &f64| {
            let mut acc = Cx::zero();
            for (k, c) in truth_clone.iter().enumerate() {
                let idx = k as i64 - n as i64;
                acc = acc + c.clone() * basis_eval(idx, x, &cfg).unwrap();
            }
            acc
        };
        let mut sys = build_system::<f64>(&cfg).unwrap();
        sys.attach_fn(&f, 8).unwrap();
        let sol = truncated_solve(&sys, 1e-14).unwrap();
        assert_eq!(sol.kept_rank, 2 * n + 1);
        let norm: f64 = truth.iter().map(|c| c.abs_sq()).sum::<f64>().sqrt();
        for (a, c) in sol.coefficients.iter().zip(&truth) {
            assert!(
                (a.clone() - c.clone()).abs() <= 1e-8 * norm,
                "coefficient off: {a:?} vs {c:?}"
            );
        }
    }

    #[test]
    fn kept_rank_monotone_in_cutoff() {
        let cfg = ExtensionConfig::continuous(2.0, 6).unwrap();
        let mut sys = build_system::<f64>(&cfg).unwrap();
        sys.attach_fn(&|x: &f64| Cx::from_re(x.exp()), 8).unwrap();
        let fact = svd(&sys).unwrap();
        let mut prev = usize::MAX;
        for eps in [0.0, 1e-14, 1e-10, 1e-6, 1e-2, 1.0] {
            let sol = truncated_solve_with(&sys, &fact, eps).unwrap();
            assert!(sol.kept_rank <= prev);
            prev = sol.kept_rank;
        }
        // at zero cutoff every nonzero singular value is kept
        let sol = truncated_solve_with(&sys, &fact, 0.0).unwrap();
        assert_eq!(sol.kept_rank, fact.s.iter().filter(|s| **s > 0.0).count());
    }
}
