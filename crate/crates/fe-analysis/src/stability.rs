//! Stability constants of the truncated equispaced extension.
//!
//! With USV* the SVD of the equispaced matrix and A the continuous Gram of
//! the same basis:
//!   C1 = sqrt(|| (S^eps)+ V* A V (S^eps)+ ||_2)   over kept directions,
//!   C2 = sqrt(|| (V^eps)* A V^eps ||_2)           over discarded ones,
//!   D  = C1 with the cutoff at the numerical-rank floor 10^(-digits/2),
//!   B  = 1/sigma_min.
//! C1 is the condition number of the truncated map; C1 = D below the
//! matrix-rank breakpoint, and B tracks the exponential growth that the
//! truncation caps.

use fe_core::{with_digits, BigReal, ExtensionConfig, Mat, Real};
use fe_solver::{jacobi_svd, svd, SvdFactorization};
use fe_systems::{build_system, continuous_gram};

use crate::error::AnalysisError;

#[derive(Clone, Copy, Debug)]
pub struct StabilityReport {
    pub n: usize,
    pub m: usize,
    pub t: f64,
    pub epsilon: f64,
    pub c1: f64,
    pub c2: f64,
    pub d: f64,
    /// D exceeded every resolvable direction; its value is a floor.
    pub d_is_infinite: bool,
    pub b: f64,
}

/// spectral norm of C^* A C over the selected, optionally sigma-scaled,
/// columns of V; None when the selection is empty
fn projected_norm(
    fact: &SvdFactorization<BigReal>,
    a: &Mat<BigReal>,
    select: impl Fn(&BigReal) -> bool,
    scale_by_sigma: bool,
) -> Result<Option<f64>, AnalysisError> {
    let chosen: Vec<usize> = (0..fact.s.len())
        .filter(|&j| select(&fact.s[j]))
        .collect();
    if chosen.is_empty() {
        return Ok(None);
    }
    let rows = fact.v.rows();
    let mut c = Mat::<BigReal>::zeros(rows, chosen.len());
    for (slot, &j) in chosen.iter().enumerate() {
        let col = fact.v.col(j);
        for i in 0..rows {
            let e = if scale_by_sigma {
                col[i].unscale(&fact.s[j])
            } else {
                col[i].clone()
            };
            *c.at_mut(i, slot) = e;
        }
    }
    let quad = c.conj_t_mul(&a.mul(&c));
    let top = jacobi_svd(&quad)?.s[0].clone();
    Ok(Some(top.max_with(&BigReal::zero()).sqrt().to_f64()))
}

pub fn stability_constants(
    n: usize,
    m: usize,
    t: f64,
    epsilon: f64,
    digits: u32,
) -> Result<StabilityReport, AnalysisError> {
    with_digits(digits, || {
        let cfg = ExtensionConfig::equispaced(t, n, m)?;
        let sys = build_system::<BigReal>(&cfg)?;
        let fact = svd(&sys)?;
        let a = continuous_gram::<BigReal>(&cfg)?;

        let eps = BigReal::from_f64(epsilon);
        let c1 = projected_norm(&fact, &a, |s| s > &eps, true)?.unwrap_or(f64::INFINITY);
        let c2 = projected_norm(&fact, &a, |s| !(s > &eps), false)?.unwrap_or(0.0);

        let floor = BigReal::from_f64(10.0).powi(-((digits / 2) as i32));
        let (d, d_is_infinite) = match projected_norm(&fact, &a, |s| s > &floor, true)? {
            Some(v) => (v, false),
            None => (f64::INFINITY, true),
        };
        let b = (BigReal::one() / fact.sigma_min()).to_f64();

        Ok(StabilityReport {
            n,
            m,
            t,
            epsilon,
            c1,
            c2,
            d,
            d_is_infinite,
            b,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_function_is_a_lower_bound_for_d() {
        // D is a supremum over the space containing the constants, whose
        // continuous-to-grid norm ratio tends to 1
        let rep = stability_constants(4, 8, 2.0, 1e-6, 40).unwrap();
        assert!(rep.d >= 1.0 - 1e-10, "D = {}", rep.d);
        assert!(rep.c1 >= 1.0 - 1e-10);
        assert!(rep.b >= 1.0);
    }

    #[test]
    fn below_breakpoint_c1_equals_d_and_c2_vanishes() {
        // At N=3, gamma=2 the smallest singular value is far above 1e-6,
        // so no direction is discarded
        let rep = stability_constants(3, 6, 2.0, 1e-6, 40).unwrap();
        assert!(
            (rep.c1 - rep.d).abs() <= 1e-6 * rep.d,
            "C1={} D={}",
            rep.c1,
            rep.d
        );
        assert_eq!(rep.c2, 0.0);
        assert!(!rep.d_is_infinite);
    }

    #[test]
    fn b_is_reciprocal_sigma_min() {
        let n = 5;
        let m = 10;
        let rep = stability_constants(n, m, 2.0, 1e-6, 40).unwrap();
        let cfg = ExtensionConfig::equispaced(2.0, n, m).unwrap();
        let sig = with_digits(40, || {
            let sys = build_system::<BigReal>(&cfg).unwrap();
            svd(&sys).unwrap().sigma_min().to_f64()
        });
        assert!((rep.b * sig - 1.0).abs() < 1e-8, "B={} sigma={sig}", rep.b);
    }
}
