//! Gram matrices of the basis on [-1,1] (plain and weighted) and on the
//! extension interval [-T,T].

use fe_core::{Cx, ExtensionConfig, BasisKind, Mat, Real};

use crate::assembly::build_system;
use crate::error::SystemsError;

/// Gram of the basis in L2(-1,1).
///
/// For the exponential basis this is the continuous system matrix itself;
/// for the trig basis the entries come from closed-form sine integrals.
pub fn continuous_gram<R: Real>(config: &ExtensionConfig) -> Result<Mat<R>, SystemsError> {
    match config.basis {
        BasisKind::ComplexExponential => {
            let cont = ExtensionConfig::continuous(config.t, config.n)?;
            Ok(build_system::<R>(&cont)?.matrix)
        }
        BasisKind::SymmetricTrig => Ok(trig_gram_unit_interval(config)),
    }
}

// sinc(a) = sin(a pi / T)/(a pi / T) evaluated safely at a = 0
fn sinc_t<R: Real>(a: i64, t: &R) -> R {
    if a == 0 {
        return R::one();
    }
    let arg = R::from_f64(a as f64) * R::pi() / t.clone();
    arg.sin() / arg
}

fn trig_gram_unit_interval<R: Real>(config: &ExtensionConfig) -> Mat<R> {
    let idx = config.indices();
    let t = R::from_f64(config.t);
    Mat::from_fn(idx.len(), idx.len(), |i, j| {
        let a = idx[i];
        let b = idx[j];
        // cosine members have index >= 0, sine members index < 0
        let v = match (a >= 0, b >= 0) {
            (true, true) => sinc_t(a - b, &t) + sinc_t(a + b, &t),
            (false, false) => sinc_t(a - b, &t) - sinc_t(a + b, &t),
            // int cos(m.) sin(n.) over symmetric interval vanishes
            _ => return Cx::zero(),
        };
        Cx::from_re(v)
    })
}

/// Weighted Gram of the trig basis: the normal matrix of the discrete
/// system. No quadrature is involved; the collocation identity makes the
/// product exact.
pub fn weighted_gram<R: Real>(n: usize, t: f64) -> Result<Mat<R>, SystemsError> {
    let cfg = ExtensionConfig::discrete(t, n)?;
    let tilde = build_system::<R>(&cfg)?.matrix;
    Ok(tilde.conj_t_mul(&tilde))
}

/// Gram of the basis in L2(-T,T): identity for the exponential basis,
/// diagonal with entries 2T (constant member) and T (all others) for trig.
pub fn extended_gram<R: Real>(config: &ExtensionConfig) -> Mat<R> {
    let idx = config.indices();
    let t = R::from_f64(config.t);
    match config.basis {
        BasisKind::ComplexExponential => Mat::identity(idx.len()),
        BasisKind::SymmetricTrig => Mat::from_fn(idx.len(), idx.len(), |i, j| {
            if i != j {
                Cx::zero()
            } else if idx[i] == 0 {
                Cx::from_re(R::from_f64(2.0) * t.clone())
            } else {
                Cx::from_re(t.clone())
            }
        }),
    }
}

/// The three Gram matrices relevant to one config. The weighted Gram only
/// exists for the trig basis.
#[derive(Clone, Debug)]
pub struct GramMatrices<R: Real> {
    pub a: Mat<R>,
    pub aw: Option<Mat<R>>,
    pub gt: Mat<R>,
}

pub fn gram_matrices<R: Real>(config: &ExtensionConfig) -> Result<GramMatrices<R>, SystemsError> {
    let aw = match config.basis {
        BasisKind::SymmetricTrig => Some(weighted_gram::<R>(config.n, config.t)?),
        BasisKind::ComplexExponential => None,
    };
    Ok(GramMatrices {
        a: continuous_gram(config)?,
        aw,
        gt: extended_gram(config),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_cx, QuadratureRule};
    use fe_core::basis_eval;

    #[test]
    fn weighted_gram_is_hermitian_psd_diagonal_heavy() {
        let aw = weighted_gram::<f64>(6, 2.0).unwrap();
        for i in 0..aw.rows() {
            for j in 0..aw.cols() {
                let d = (aw.at(i, j).clone() - aw.at(j, i).conj()).abs();
                assert!(d < 1e-13);
            }
        }
        // Gershgorin-free PSD sanity: x^* AW x >= -tol for a few vectors
        for seed in 0..5u64 {
            let x: Vec<Cx<f64>> = (0..aw.rows())
                .map(|i| {
                    let v = ((i as u64 + 1) * (seed + 3) % 17) as f64 / 17.0 - 0.5;
                    Cx::from_f64(v, -v * 0.3)
                })
                .collect();
            let q = aw.form(&x, &x).re;
            assert!(q >= -1e-12 * aw.max_abs());
        }
    }

    #[test]
    fn trig_unit_gram_matches_quadrature() {
        let cfg = ExtensionConfig::discrete(2.0, 3).unwrap();
        let g = continuous_gram::<f64>(&cfg).unwrap();
        let idx = cfg.indices();
        let rule = QuadratureRule::new(16, 24);
        for (i, &a) in idx.iter().enumerate() {
            for (j, &b) in idx.iter().enumerate() {
                let want = integrate_cx(
                    &|x: &f64| {
                        let u = basis_eval(a, x, &cfg).unwrap();
                        let v = basis_eval(b, x, &cfg).unwrap();
                        u.conj() * v
                    },
                    &-1.0,
                    &1.0,
                    rule,
                );
                assert!(
                    (g.at(i, j).clone() - want).abs() < 1e-13,
                    "entry ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn extended_gram_diagonals() {
        let cfg = ExtensionConfig::discrete(2.0, 2).unwrap();
        let gt = extended_gram::<f64>(&cfg);
        let idx = cfg.indices();
        for (i, &a) in idx.iter().enumerate() {
            let want = if a == 0 { 4.0 } else { 2.0 };
            assert_eq!(gt.at(i, i).re, want);
        }
        let cfg = ExtensionConfig::continuous(2.0, 2).unwrap();
        let gt = extended_gram::<f64>(&cfg);
        for i in 0..5 {
            assert_eq!(gt.at(i, i).re, 1.0);
        }
    }
}
