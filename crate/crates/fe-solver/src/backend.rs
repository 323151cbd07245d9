//! Backend selection for dense factorization: LAPACK-style SVD from
//! nalgebra at double precision, one-sided Jacobi in extended precision.

use fe_core::{BigReal, Cx, Mat, Real};
use nalgebra::{Complex, DMatrix};

use crate::error::SolverError;
use crate::jacobi::{jacobi_svd, RawSvd};

/// Scalars that know how to factor a dense matrix.
pub trait SvdScalar: Real {
    fn raw_svd(mat: &Mat<Self>) -> Result<RawSvd<Self>, SolverError>;
}

impl SvdScalar for f64 {
    fn raw_svd(mat: &Mat<Self>) -> Result<RawSvd<Self>, SolverError> {
        let m = mat.rows();
        let n = mat.cols();
        let dm = DMatrix::from_fn(m, n, |i, j| {
            let z = mat.at(i, j);
            Complex::new(z.re, z.im)
        });
        let svd = nalgebra::SVD::try_new(dm, true, true, f64::EPSILON, 0)
            .ok_or(SolverError::SvdNoConvergence { sweeps: 0 })?;
        let u_na = svd.u.as_ref().expect("requested U");
        let vt_na = svd.v_t.as_ref().expect("requested V^T");
        let r = svd.singular_values.len();

        // sort descending (nalgebra orders, but do not rely on it)
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by(|&a, &b| {
            svd.singular_values[b]
                .partial_cmp(&svd.singular_values[a])
                .expect("finite singular values")
        });

        let mut u = Mat::<f64>::zeros(m, r);
        let mut v = Mat::<f64>::zeros(n, r);
        let mut s = Vec::with_capacity(r);
        for (slot, &k) in order.iter().enumerate() {
            s.push(svd.singular_values[k]);
            for i in 0..m {
                let z = u_na[(i, k)];
                *u.at_mut(i, slot) = Cx::new(z.re, z.im);
            }
            for j in 0..n {
                let z = vt_na[(k, j)].conj();
                *v.at_mut(j, slot) = Cx::new(z.re, z.im);
            }
        }
        Ok(RawSvd { u, s, v })
    }
}

impl SvdScalar for BigReal {
    fn raw_svd(mat: &Mat<Self>) -> Result<RawSvd<Self>, SolverError> {
        jacobi_svd(mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nalgebra_and_jacobi_agree() {
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for (m, n) in [(9, 9), (14, 6)] {
            let a = Mat::from_fn(m, n, |_, _| Cx::from_f64(rnd(), rnd()));
            let fast = f64::raw_svd(&a).unwrap();
            let slow = jacobi_svd(&a).unwrap();
            for (x, y) in fast.s.iter().zip(&slow.s) {
                assert!((x - y).abs() < 1e-12 * fast.s[0], "{x} vs {y}");
            }
        }
    }
}
