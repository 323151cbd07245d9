//! The singular functions of an extension system: the extension-space
//! elements corresponding to right singular vectors. Orthonormal on [-T,T],
//! with L2(-1,1) mass exactly the associated singular value pattern, and
//! (for the continuous system) the n-th one oscillating with n zeros in
//! (-1,1) — discrete prolate spheroidal behaviour.

use fe_core::{Cx, ExtensionConfig, Real};
use fe_systems::{synthesize, uniform_grid};

use crate::error::SolverError;
use crate::svd::SvdFactorization;

#[derive(Clone, Debug)]
pub struct FrameFunction<R: Real> {
    pub index: usize,
    pub coefficients: Vec<Cx<R>>,
    pub sigma: R,
    pub config: ExtensionConfig,
}

pub fn frame_function<R: Real>(
    fact: &SvdFactorization<R>,
    n: usize,
) -> Result<FrameFunction<R>, SolverError> {
    if n >= fact.s.len() {
        return Err(SolverError::IndexOutOfRange {
            index: n,
            count: fact.s.len(),
        });
    }
    Ok(FrameFunction {
        index: n,
        coefficients: fact.v.col(n),
        sigma: fact.s[n].clone(),
        config: fact.config,
    })
}

impl<R: Real> FrameFunction<R> {
    pub fn eval(&self, points: &[R]) -> Vec<Cx<R>> {
        synthesize(&self.coefficients, &self.config, points)
    }

    /// Count zeros in (-1,1) by sign changes on a uniform grid.
    ///
    /// The singular functions of real symmetric systems are real up to a
    /// global phase that puts them entirely in the real or the imaginary
    /// part; whichever component carries the mass is the one whose sign
    /// changes are counted. Values below a precision-scaled floor are
    /// treated as zero crossings in progress and skipped.
    pub fn count_zeros(&self, grid_points: usize) -> usize {
        let grid = uniform_grid::<R>(grid_points);
        let inner = &grid[1..grid.len() - 1];
        let vals = self.eval(inner);
        let re_max = vals
            .iter()
            .map(|v| v.re.abs())
            .fold(R::zero(), |m, v| m.max_with(&v));
        let im_max = vals
            .iter()
            .map(|v| v.im.abs())
            .fold(R::zero(), |m, v| m.max_with(&v));
        let use_re = re_max >= im_max;
        let scale = re_max.max_with(&im_max);
        if scale.is_zero() {
            return 0;
        }
        let digits = R::working_digits();
        let floor = scale * R::from_f64(10.0).powi(-((digits as i32 * 4) / 5));
        let mut count = 0usize;
        let mut last_sign = 0i8;
        for v in &vals {
            let comp = if use_re { v.re.clone() } else { v.im.clone() };
            if comp.abs() <= floor {
                continue;
            }
            let sign = if comp > R::zero() { 1 } else { -1 };
            if last_sign != 0 && sign != last_sign {
                count += 1;
            }
            last_sign = sign;
        }
        count
    }
}
