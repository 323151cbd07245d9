//! Pointwise evaluation of solved extensions on [-T,T].

use fe_core::{Cx, Real};
use fe_systems::synthesize;

use crate::error::SolverError;
use crate::solve::ExtensionSolution;

pub fn evaluate<R: Real>(
    solution: &ExtensionSolution<R>,
    points: &[R],
) -> Result<Vec<Cx<R>>, SolverError> {
    let t = solution.config.t;
    let slack = 1e-12 * t;
    for x in points {
        let xf = x.to_f64();
        if xf.abs() > t + slack || !xf.is_finite() {
            return Err(SolverError::PointOutsideDomain { x: xf, t });
        }
    }
    Ok(synthesize(&solution.coefficients, &solution.config, points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fe_core::ExtensionConfig;

    fn constant_solution() -> ExtensionSolution<f64> {
        let config = ExtensionConfig::continuous(2.0, 2).unwrap();
        let mut coefficients = vec![Cx::<f64>::zero(); 5];
        coefficients[2] = Cx::one();
        ExtensionSolution {
            coefficients,
            config,
            cutoff: 0.0,
            kept_rank: 5,
            residual_norm: 0.0,
        }
    }

    #[test]
    fn single_mode_is_constant_half() {
        let sol = constant_solution();
        let vals = evaluate(&sol, &[-2.0, -0.5, 0.0, 1.3, 2.0]).unwrap();
        for v in vals {
            assert!((v.re - 0.5).abs() < 1e-15 && v.im.abs() < 1e-15);
        }
    }

    #[test]
    fn zero_coefficients_give_zeros() {
        let mut sol = constant_solution();
        sol.coefficients = vec![Cx::zero(); 5];
        let vals = evaluate(&sol, &[0.1, 0.9]).unwrap();
        assert!(vals.iter().all(|v| v.abs() == 0.0));
    }

    #[test]
    fn rejects_points_beyond_extension() {
        let sol = constant_solution();
        assert!(matches!(
            evaluate(&sol, &[2.5]),
            Err(SolverError::PointOutsideDomain { .. })
        ));
    }
}
