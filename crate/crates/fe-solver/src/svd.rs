//! Factorization wrapper tying an SVD to the system it came from.

use fe_core::{Cx, ExtensionConfig, Mat, Real};
use fe_systems::{LinearSystem, SystemKind};

use crate::backend::SvdScalar;
use crate::error::SolverError;

#[derive(Clone, Debug)]
pub struct SvdFactorization<R: Real> {
    pub u: Mat<R>,
    /// Singular values, descending, all >= 0.
    pub s: Vec<R>,
    pub v: Mat<R>,
    pub kind: SystemKind,
    pub config: ExtensionConfig,
}

pub fn svd<R: SvdScalar>(system: &LinearSystem<R>) -> Result<SvdFactorization<R>, SolverError> {
    let raw = R::raw_svd(&system.matrix)?;
    Ok(SvdFactorization {
        u: raw.u,
        s: raw.s,
        v: raw.v,
        kind: system.kind,
        config: system.config,
    })
}

impl<R: Real> SvdFactorization<R> {
    pub fn rank_above(&self, epsilon: f64) -> usize {
        let eps = R::from_f64(epsilon);
        self.s.iter().filter(|s| **s > eps).count()
    }

    pub fn sigma_min(&self) -> R {
        self.s.last().cloned().unwrap_or_else(R::zero)
    }
    pub fn sigma_max(&self) -> R {
        self.s.first().cloned().unwrap_or_else(R::zero)
    }

    /// Apply the pseudo-inverse restricted to sigma > epsilon: V S^+ U^* b.
    pub fn apply_tsvd(&self, b: &[Cx<R>], epsilon: f64) -> Vec<Cx<R>> {
        let eps = R::from_f64(epsilon);
        let mut coeffs = vec![Cx::<R>::zero(); self.v.rows()];
        let utb = self.u.conj_t_vec(b);
        for (k, sigma) in self.s.iter().enumerate() {
            if !(sigma > &eps) {
                continue;
            }
            let w = utb[k].unscale(sigma);
            for i in 0..self.v.rows() {
                coeffs[i].mul_acc(self.v.at(i, k), &w);
            }
        }
        coeffs
    }
}
