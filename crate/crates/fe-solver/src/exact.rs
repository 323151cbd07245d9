//! Reference extensions computed in extended precision with no truncation.
//!
//! These realize the exact (infinite-precision) continuous, discrete and
//! equispaced extensions at desk scale, for comparison against their
//! finite-precision counterparts.

use fe_core::{with_digits, BigReal, Cx, ExtensionConfig, Real};
use fe_systems::build_system;

use crate::error::SolverError;
use crate::solve::{truncated_solve_with, ExtensionSolution};
use crate::svd::svd;

pub const MIN_DIGITS: u32 = 30;

/// Solve the full system in `digits`-digit arithmetic with zero cutoff.
///
/// Fails with `PrecisionInsufficient` when the smallest singular value
/// cannot be resolved within the digit budget (sigma_min * 10^digits < 1).
pub fn exact_extension(
    f: &dyn Fn(&BigReal) -> Cx<BigReal>,
    config: &ExtensionConfig,
    digits: u32,
    panel_floor: usize,
) -> Result<ExtensionSolution<BigReal>, SolverError> {
    if digits < MIN_DIGITS {
        return Err(SolverError::InvalidDigits(digits));
    }
    with_digits(digits, || {
        let mut sys = build_system::<BigReal>(config)?;
        sys.attach_fn(f, panel_floor)?;
        let fact = svd(&sys)?;
        let sigma_min = fact.sigma_min();
        let budget = BigReal::from_f64(10.0).powi(digits as i32);
        if sigma_min.clone() * budget < BigReal::one() {
            let log10 = if sigma_min.is_zero() {
                f64::NEG_INFINITY
            } else {
                (sigma_min.ln() / BigReal::from_f64(10.0).ln()).to_f64()
            };
            return Err(SolverError::PrecisionInsufficient {
                log10_sigma_min: log10,
                digits,
            });
        }
        truncated_solve_with(&sys, &fact, 0.0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fe_core::basis_eval;

    #[test]
    fn basis_member_reproduces_unit_vector() {
        // f = phi_1 in the continuous space: coefficients must be the unit
        // coordinate vector to far beyond double precision
        let cfg = ExtensionConfig::continuous(2.0, 3).unwrap();
        let sol = exact_extension(
            &|x: &BigReal| basis_eval(1, x, &cfg).unwrap(),
            &cfg,
            60,
            8,
        )
        .unwrap();
        assert_eq!(sol.cutoff, 0.0);
        assert_eq!(sol.kept_rank, 7);
        let tol = BigReal::from_f64(1e-20);
        for (k, c) in sol.coefficients.iter().enumerate() {
            let want = if k == 4 { 1.0 } else { 0.0 }; // index +1 at slot N+1
            let err = (c.clone() - Cx::from_f64(want, 0.0)).abs();
            assert!(err < tol, "slot {k}: {err}");
        }
    }

    #[test]
    fn digit_floor_enforced() {
        let cfg = ExtensionConfig::continuous(2.0, 2).unwrap();
        let r = exact_extension(&|_: &BigReal| Cx::one(), &cfg, 20, 8);
        assert!(matches!(r, Err(SolverError::InvalidDigits(20))));
    }

    #[test]
    fn budget_detection_fires() {
        // At N=25, T=2 the smallest prolate eigenvalue sits near
        // E(2)^(-2N) ~ 1e-38, far below a 30-digit budget.
        let cfg = ExtensionConfig::continuous(2.0, 25).unwrap();
        let r = exact_extension(&|_: &BigReal| Cx::one(), &cfg, 30, 8);
        assert!(
            matches!(r, Err(SolverError::PrecisionInsufficient { .. })),
            "expected budget failure"
        );
    }
}
