//! Norms of raw functions and of extension-space elements.
//!
//! Function norms go through quadrature or grid sampling. Coefficient-space
//! norms use the closed-form Gram matrices, which keeps them exact down to
//! levels quadrature could never certify; the W-norm is only defined for
//! elements of the discrete extension space.

use fe_core::{BasisKind, Cx, ExtensionConfig, Mat, Real};

use crate::error::SystemsError;
use crate::gram::{continuous_gram, extended_gram, weighted_gram};
use crate::quadrature::{integrate_adaptive, refinement_tol, QuadratureRule};

pub const DEFAULT_SUP_GRID: usize = 10001;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormKind {
    /// L2(-1,1)
    L2,
    /// max |.| over a uniform grid on [-1,1] of the given size
    SupGrid(usize),
    /// the weighted norm of the discrete least-squares geometry
    Weighted,
    /// L2(-T,T)
    ExtendedDomain,
}

/// L2(-1,1) norm of a raw function by adaptive panel-doubling quadrature.
pub fn fn_l2<R: Real>(
    f: &dyn Fn(&R) -> Cx<R>,
    panel_floor: usize,
) -> Result<R, SystemsError> {
    let rule = QuadratureRule::for_degree(0, panel_floor, R::working_digits());
    let tol = refinement_tol::<R>();
    let sq = integrate_adaptive(
        &|x: &R| Cx::from_re(f(x).abs_sq()),
        &-R::one(),
        &R::one(),
        rule,
        &tol,
    )?;
    Ok(sq.re.max_with(&R::zero()).sqrt())
}

/// Uniform grid over [-1,1], endpoints included.
pub fn uniform_grid<R: Real>(points: usize) -> Vec<R> {
    let n = points.max(2);
    let step = R::from_f64(2.0) / R::from_usize(n - 1);
    (0..n)
        .map(|k| -R::one() + step.clone() * R::from_usize(k))
        .collect()
}

pub fn fn_sup_grid<R: Real>(f: &dyn Fn(&R) -> Cx<R>, points: usize) -> R {
    uniform_grid::<R>(points)
        .iter()
        .map(|x| f(x).abs())
        .fold(R::zero(), |m, v| m.max_with(&v))
}

/// Norm of a raw function; the W and extended-domain kinds are rejected
/// since they are only defined through the extension space.
pub fn fn_norm<R: Real>(
    f: &dyn Fn(&R) -> Cx<R>,
    kind: NormKind,
    panel_floor: usize,
) -> Result<R, SystemsError> {
    match kind {
        NormKind::L2 => fn_l2(f, panel_floor),
        NormKind::SupGrid(p) => Ok(fn_sup_grid(f, p)),
        NormKind::Weighted => Err(SystemsError::UnsupportedNorm {
            kind: "W",
            object: "a raw function",
        }),
        NormKind::ExtendedDomain => Err(SystemsError::UnsupportedNorm {
            kind: "extended-domain",
            object: "a raw function",
        }),
    }
}

/// Evaluate sum_n a_n phi_n at many points.
///
/// Exponential basis: one rotation per point, then a power walk across the
/// coefficients. Trig basis: cosine/sine recurrences in the index.
pub fn synthesize<R: Real>(
    coeffs: &[Cx<R>],
    config: &ExtensionConfig,
    points: &[R],
) -> Vec<Cx<R>> {
    assert_eq!(coeffs.len(), config.basis_size());
    let t = R::from_f64(config.t);
    match config.basis {
        BasisKind::ComplexExponential => {
            let n = config.n as i64;
            let amp = R::one() / (R::from_f64(2.0) * t.clone()).sqrt();
            points
                .iter()
                .map(|x| {
                    let theta = R::pi() * x.clone() / t.clone();
                    let step = Cx::from_polar(&R::one(), &theta);
                    let mut ph = Cx::from_polar(&amp, &(R::from_f64(-n as f64) * theta.clone()));
                    let mut acc = Cx::zero();
                    for a in coeffs {
                        acc.mul_acc(a, &ph);
                        ph = ph * step.clone();
                    }
                    acc
                })
                .collect()
        }
        BasisKind::SymmetricTrig => {
            let idx = config.indices();
            points
                .iter()
                .map(|x| {
                    let theta = R::pi() * x.clone() / t.clone();
                    // recurrences: c_k = cos(k theta), s_k = sin(k theta)
                    let c1 = theta.cos();
                    let s1 = theta.sin();
                    let top = config.n + 1;
                    let mut cs = Vec::with_capacity(top + 1);
                    let mut ss = Vec::with_capacity(top + 1);
                    cs.push(R::one());
                    ss.push(R::zero());
                    if top >= 1 {
                        cs.push(c1.clone());
                        ss.push(s1.clone());
                    }
                    for _ in 2..=top {
                        let ck = c1.clone() * cs[cs.len() - 1].clone()
                            - s1.clone() * ss[ss.len() - 1].clone();
                        let sk = s1.clone() * cs[cs.len() - 1].clone()
                            + c1.clone() * ss[ss.len() - 1].clone();
                        cs.push(ck);
                        ss.push(sk);
                    }
                    let mut acc = Cx::zero();
                    for (a, &k) in coeffs.iter().zip(&idx) {
                        let b = if k >= 0 {
                            cs[k as usize].clone()
                        } else {
                            ss[(-k) as usize].clone()
                        };
                        acc = acc + a.scale(&b);
                    }
                    acc
                })
                .collect()
        }
    }
}

fn gram_norm<R: Real>(coeffs: &[Cx<R>], g: &Mat<R>) -> R {
    let q = g.form(coeffs, coeffs).re;
    q.max_with(&R::zero()).sqrt()
}

/// Norm of an extension-space element given by its coefficient vector.
pub fn coefficient_norm<R: Real>(
    coeffs: &[Cx<R>],
    config: &ExtensionConfig,
    kind: NormKind,
) -> Result<R, SystemsError> {
    match kind {
        NormKind::L2 => Ok(gram_norm(coeffs, &continuous_gram::<R>(config)?)),
        NormKind::Weighted => match config.basis {
            BasisKind::SymmetricTrig => {
                Ok(gram_norm(coeffs, &weighted_gram::<R>(config.n, config.t)?))
            }
            BasisKind::ComplexExponential => Err(SystemsError::UnsupportedNorm {
                kind: "W",
                object: "an exponential-basis element",
            }),
        },
        NormKind::ExtendedDomain => Ok(gram_norm(coeffs, &extended_gram::<R>(config))),
        NormKind::SupGrid(p) => {
            let grid = uniform_grid::<R>(p);
            let vals = synthesize(coeffs, config, &grid);
            Ok(vals
                .iter()
                .map(|v| v.abs())
                .fold(R::zero(), |m, v| m.max_with(&v)))
        }
    }
}

/// Plain Euclidean norm of a complex vector.
pub fn vec_norm<R: Real>(v: &[Cx<R>]) -> R {
    let mut acc = R::zero();
    for z in v {
        acc = acc + z.abs_sq();
    }
    acc.sqrt()
}
