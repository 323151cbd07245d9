//! Empirical condition numbers of extension maps: drive data vectors
//! through the actual solve path and measure output norms.

use fe_core::{Cx, Real};
use fe_solver::SvdFactorization;
use fe_systems::{coefficient_norm, vec_norm, NormKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::AnalysisError;

/// Deterministic unit vectors in C^dim.
pub fn random_unit_vectors<R: Real>(dim: usize, count: usize, seed: u64) -> Vec<Vec<Cx<R>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let raw: Vec<(f64, f64)> = (0..dim)
                .map(|_| (rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                .collect();
            let norm = raw
                .iter()
                .map(|(a, b)| a * a + b * b)
                .sum::<f64>()
                .sqrt();
            raw.into_iter()
                .map(|(a, b)| Cx::new(R::from_f64(a / norm), R::from_f64(b / norm)))
                .collect()
        })
        .collect()
}

/// Kept left singular vectors: the data directions on which a truncated
/// map attains its norm.
pub fn kept_left_singular_vectors<R: Real>(
    fact: &SvdFactorization<R>,
    epsilon: f64,
) -> Vec<Vec<Cx<R>>> {
    let eps = R::from_f64(epsilon);
    (0..fact.s.len())
        .filter(|&j| fact.s[j] > eps)
        .map(|j| fact.u.col(j))
        .collect()
}

/// sup over candidates of ||map(b)||_kind / ||b||_2, where the map is the
/// truncated pseudo-inverse followed by the extension-space norm.
pub fn empirical_map_norm<R: Real>(
    fact: &SvdFactorization<R>,
    epsilon: f64,
    kind: NormKind,
    candidates: &[Vec<Cx<R>>],
) -> Result<f64, AnalysisError> {
    let mut sup = 0.0_f64;
    for b in candidates {
        let coeffs = fact.apply_tsvd(b, epsilon);
        let out = coefficient_norm(&coeffs, &fact.config, kind)?;
        let ratio = (out / vec_norm(b)).to_f64();
        if ratio > sup {
            sup = ratio;
        }
    }
    Ok(sup)
}

/// Condition number of the truncated map in closed form:
/// 1/sqrt(smallest kept sigma); infinite when nothing is kept.
pub fn kappa_tsvd_formula<R: Real>(fact: &SvdFactorization<R>, epsilon: f64) -> f64 {
    let eps = R::from_f64(epsilon);
    let mut smallest: Option<f64> = None;
    for s in &fact.s {
        if s > &eps {
            smallest = Some(s.to_f64());
        }
    }
    match smallest {
        Some(s) => 1.0 / s.sqrt(),
        None => f64::INFINITY,
    }
}
