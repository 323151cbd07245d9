//! One-sided Jacobi SVD over any scalar backend.
//!
//! Columns of the working copy are orthogonalized pairwise by unitary plane
//! rotations accumulated into V; on convergence the column norms are the
//! singular values and the normalized columns form U. Small singular values
//! come out with high relative accuracy, which is what the severely graded
//! extension matrices need. This is the only factorization available in
//! extended precision; in double it doubles as the cross-check oracle for
//! the LAPACK-style path.

use fe_core::{Cx, Mat, Real};

use crate::error::SolverError;

pub struct RawSvd<R: Real> {
    pub u: Mat<R>,
    pub s: Vec<R>,
    pub v: Mat<R>,
}

const MAX_SWEEPS: usize = 64;

/// Economy SVD A = U diag(s) V^*, singular values descending.
pub fn jacobi_svd<R: Real>(a: &Mat<R>) -> Result<RawSvd<R>, SolverError> {
    if a.rows() < a.cols() {
        // factor the conjugate transpose and swap factors
        let t = jacobi_svd(&a.conj_transpose())?;
        return Ok(RawSvd {
            u: t.v,
            s: t.s,
            v: t.u,
        });
    }
    let m = a.rows();
    let n = a.cols();
    let mut w = a.clone();
    let mut v = Mat::<R>::identity(n);
    let tol = R::eps() * R::from_usize(m).sqrt();

    let mut converged = false;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        converged = true;
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let (alpha, beta, gamma) = column_gram(&w, p, q);
                let g = gamma.abs();
                if g <= tol.clone() * (alpha.clone() * beta.clone()).sqrt() || g.is_zero() {
                    continue;
                }
                converged = false;
                // phase that makes the off-diagonal coupling real
                let phase = gamma.unscale(&g).conj();
                let zeta = (beta - alpha) / (R::from_f64(2.0) * g.clone());
                let t = {
                    let denom = zeta.abs() + (R::one() + zeta.clone() * zeta.clone()).sqrt();
                    let mag = R::one() / denom;
                    if zeta >= R::zero() {
                        mag
                    } else {
                        -mag
                    }
                };
                let c = R::one() / (R::one() + t.clone() * t.clone()).sqrt();
                let s = t * c.clone();
                rotate_columns(&mut w, m, p, q, &c, &s, &phase);
                rotate_columns(&mut v, n, p, q, &c, &s, &phase);
            }
        }
    }
    if !converged {
        return Err(SolverError::SvdNoConvergence { sweeps });
    }

    // column norms and normalization
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<R> = (0..n)
        .map(|j| {
            let mut acc = R::zero();
            for i in 0..m {
                acc = acc + w.at(i, j).abs_sq();
            }
            acc.sqrt()
        })
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).expect("finite norms"));

    let mut u = Mat::<R>::zeros(m, n);
    let mut vv = Mat::<R>::zeros(n, n);
    let mut s = Vec::with_capacity(n);
    for (slot, &j) in order.iter().enumerate() {
        let sigma = norms[j].clone();
        for i in 0..m {
            let e = if sigma.is_zero() {
                Cx::zero()
            } else {
                w.at(i, j).unscale(&sigma)
            };
            *u.at_mut(i, slot) = e;
        }
        for i in 0..n {
            *vv.at_mut(i, slot) = v.at(i, j).clone();
        }
        s.push(sigma);
    }
    Ok(RawSvd { u, s, v: vv })
}

fn column_gram<R: Real>(w: &Mat<R>, p: usize, q: usize) -> (R, R, Cx<R>) {
    let mut alpha = R::zero();
    let mut beta = R::zero();
    let mut gamma = Cx::zero();
    for i in 0..w.rows() {
        let wp = w.at(i, p);
        let wq = w.at(i, q);
        alpha = alpha + wp.abs_sq();
        beta = beta + wq.abs_sq();
        gamma.conj_mul_acc(wp, wq);
    }
    (alpha, beta, gamma)
}

/// Right-multiply columns (p,q) by diag(1, phase) followed by the real
/// rotation [[c, s], [-s, c]]: de-phasing makes the coupling real, the
/// rotation annihilates it. V receives the identical transform.
fn rotate_columns<R: Real>(
    w: &mut Mat<R>,
    rows: usize,
    p: usize,
    q: usize,
    c: &R,
    s: &R,
    phase: &Cx<R>,
) {
    for i in 0..rows {
        let wp = w.at(i, p).clone();
        let wq = w.at(i, q).clone() * phase.clone();
        *w.at_mut(i, p) = wp.scale(c) - wq.scale(s);
        *w.at_mut(i, q) = wp.scale(s) + wq.scale(c);
    }
}
