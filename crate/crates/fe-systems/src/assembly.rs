//! Assembly of the three least-squares systems.
//!
//! Continuous: the (2N+1)^2 Gram of the exponential basis on [-1,1] — a
//! Hermitian positive-definite Toeplitz matrix with real entries
//! sin(k pi/T)/(k pi) off the diagonal and 1/T on it (the prolate matrix).
//!
//! Discrete: the (2N+2)^2 collocation matrix sqrt(pi/(N+1)) phi_m(x_n) of
//! the trig basis on mapped symmetric Chebyshev nodes.
//!
//! Equispaced: the (2M+1)x(2N+1) collocation matrix phi_m(x_n)/sqrt(M+1/2)
//! of the exponential basis on the uniform grid n/M.

use fe_core::{
    basis_eval, equispaced_nodes, mapped_chebyshev_nodes, BasisKind, Cx, ExtensionConfig,
    GridKind, Mat, Real,
};

use crate::error::SystemsError;
use crate::precision::PrecisionContext;
use crate::quadrature::{gauss_legendre, refinement_tol, QuadratureRule};

/// Hard cap on dense assembly, in matrix entries.
pub const ENTRY_CAP: usize = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    Continuous,
    Discrete,
    Equispaced,
}

/// An assembled least-squares system, immutable apart from the data vector.
#[derive(Clone, Debug)]
pub struct LinearSystem<R: Real> {
    pub matrix: Mat<R>,
    pub rhs: Option<Vec<Cx<R>>>,
    pub kind: SystemKind,
    pub config: ExtensionConfig,
    pub precision: PrecisionContext,
}

fn backend_precision<R: Real>() -> PrecisionContext {
    let d = R::working_digits();
    if d <= 16 {
        PrecisionContext::Double
    } else {
        PrecisionContext::Extended { digits: d }
    }
}

/// Collocation nodes of a config, ascending. Continuous has none.
pub fn grid_nodes<R: Real>(config: &ExtensionConfig) -> Option<Vec<R>> {
    match config.grid {
        GridKind::Continuous => None,
        GridKind::MappedChebyshev => {
            Some(mapped_chebyshev_nodes(config.n, &R::from_f64(config.t)).nodes)
        }
        GridKind::Equispaced { m } => Some(equispaced_nodes(m).nodes),
    }
}

pub fn build_system<R: Real>(config: &ExtensionConfig) -> Result<LinearSystem<R>, SystemsError> {
    let (kind, rows) = match (config.grid, config.basis) {
        (GridKind::Continuous, BasisKind::ComplexExponential) => {
            (SystemKind::Continuous, 2 * config.n + 1)
        }
        (GridKind::MappedChebyshev, BasisKind::SymmetricTrig) => {
            (SystemKind::Discrete, 2 * config.n + 2)
        }
        (GridKind::Equispaced { m }, BasisKind::ComplexExponential) => {
            (SystemKind::Equispaced, 2 * m + 1)
        }
        _ => {
            return Err(SystemsError::UnsupportedCombination(
                "continuous and equispaced systems use the exponential basis; \
                 the discrete system uses the trig basis on mapped Chebyshev nodes",
            ))
        }
    };
    let cols = config.basis_size();
    if rows * cols > ENTRY_CAP {
        return Err(SystemsError::TooLarge {
            rows,
            cols,
            cap: ENTRY_CAP,
        });
    }

    let matrix = match kind {
        SystemKind::Continuous => prolate_matrix(config.n, config.t),
        SystemKind::Discrete => {
            let nodes = grid_nodes::<R>(config).unwrap();
            let scale = (R::pi() / R::from_usize(config.n + 1)).sqrt();
            collocation_matrix(config, &nodes, &scale)
        }
        SystemKind::Equispaced => {
            let nodes = grid_nodes::<R>(config).unwrap();
            let m = nodes.len() / 2;
            let scale = R::one() / (R::from_usize(m) + R::from_f64(0.5)).sqrt();
            collocation_matrix(config, &nodes, &scale)
        }
    };

    Ok(LinearSystem {
        matrix,
        rhs: None,
        kind,
        config: *config,
        precision: backend_precision::<R>(),
    })
}

/// The prolate matrix: entries depend only on n - m.
fn prolate_matrix<R: Real>(n: usize, t: f64) -> Mat<R> {
    let dim = 2 * n + 1;
    let tr = R::from_f64(t);
    // precompute the symbol a_k for k = 0..2N
    let mut sym: Vec<R> = Vec::with_capacity(dim);
    sym.push(R::one() / tr.clone());
    for k in 1..dim {
        let kf = R::from_usize(k);
        sym.push((kf.clone() * R::pi() / tr.clone()).sin() / (kf * R::pi()));
    }
    Mat::from_fn(dim, dim, |i, j| {
        Cx::from_re(sym[i.abs_diff(j)].clone())
    })
}

fn collocation_matrix<R: Real>(config: &ExtensionConfig, nodes: &[R], scale: &R) -> Mat<R> {
    let indices = config.indices();
    Mat::from_fn(nodes.len(), indices.len(), |i, j| {
        basis_eval(indices[j], &nodes[i], config)
            .expect("index from config range")
            .scale(scale)
    })
}

/// Inner products of `f` against the conjugated basis over [-1,1], the data
/// vector of the continuous system. Panel counts double until two sweeps
/// agree within the backend tolerance.
pub fn continuous_rhs<R: Real>(
    f: &dyn Fn(&R) -> Cx<R>,
    config: &ExtensionConfig,
    rule: QuadratureRule,
) -> Result<Vec<Cx<R>>, SystemsError> {
    let tol = refinement_tol::<R>();
    let mut coarse = fourier_moments(f, config, rule);
    let mut panels = rule.panels;
    for _ in 0..6 {
        panels *= 2;
        let fine = fourier_moments(f, config, QuadratureRule::new(panels, rule.order));
        let mut diff = R::zero();
        let mut scale = R::one();
        for (a, b) in coarse.iter().zip(&fine) {
            diff = diff.max_with(&(a.clone() - b.clone()).abs());
            scale = scale.max_with(&b.abs());
        }
        if diff <= tol.clone() * scale {
            return Ok(fine);
        }
        coarse = fine;
    }
    Err(SystemsError::QuadratureNoConvergence {
        achieved: f64::INFINITY,
        tol: tol.to_f64(),
    })
}

/// One-pass moments: for the exponential basis the conjugate phases are
/// powers of a single rotation per node, so each node costs one function
/// evaluation plus 2N+1 multiplications.
fn fourier_moments<R: Real>(
    f: &dyn Fn(&R) -> Cx<R>,
    config: &ExtensionConfig,
    rule: QuadratureRule,
) -> Vec<Cx<R>> {
    let cols = config.basis_size();
    let mut acc = vec![Cx::<R>::zero(); cols];
    let (nodes, weights) = gauss_legendre::<R>(rule.order);
    let t = R::from_f64(config.t);
    let amp = R::one() / (R::from_f64(2.0) * t.clone()).sqrt();
    let nn = config.n as i64;
    let half = R::from_f64(0.5);
    let h = R::from_f64(2.0) / R::from_usize(rule.panels);
    for p in 0..rule.panels {
        let lo = -R::one() + h.clone() * R::from_usize(p);
        let mid = lo.clone() + h.clone() * half.clone();
        let jac = h.clone() * half.clone();
        for (xq, wq) in nodes.iter().zip(&weights) {
            let x = mid.clone() + jac.clone() * xq.clone();
            let w = jac.clone() * wq.clone();
            let fv = f(&x).scale(&w);
            let theta = R::pi() * x.clone() / t.clone();
            match config.basis {
                BasisKind::ComplexExponential => {
                    // conj(phi_n) = amp * e^{-i n theta}
                    let step = Cx::from_polar(&R::one(), &(-theta.clone()));
                    let mut ph = Cx::from_polar(&amp, &(R::from_f64(nn as f64) * theta));
                    for slot in acc.iter_mut() {
                        slot.mul_acc(&fv, &ph);
                        ph = ph * step.clone();
                    }
                }
                BasisKind::SymmetricTrig => {
                    for (j, idx) in config.indices().iter().enumerate() {
                        let b = basis_eval(*idx, &x, config).expect("valid index");
                        acc[j].mul_acc(&fv, &b.conj());
                    }
                }
            }
        }
    }
    acc
}

impl<R: Real> LinearSystem<R> {
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }
    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Attach a raw data vector (noise experiments want direct control).
    pub fn set_rhs(&mut self, rhs: Vec<Cx<R>>) {
        assert_eq!(rhs.len(), self.rows());
        self.rhs = Some(rhs);
    }

    /// Attach the data vector derived from a target function: quadrature
    /// moments for the continuous system, scaled point samples otherwise.
    pub fn attach_fn(
        &mut self,
        f: &dyn Fn(&R) -> Cx<R>,
        panel_floor: usize,
    ) -> Result<(), SystemsError> {
        let rhs = match self.kind {
            SystemKind::Continuous => {
                let rule = QuadratureRule::for_degree(
                    self.config.n,
                    panel_floor,
                    R::working_digits(),
                );
                continuous_rhs(f, &self.config, rule)?
            }
            SystemKind::Discrete => {
                let nodes = grid_nodes::<R>(&self.config).unwrap();
                let scale = (R::pi() / R::from_usize(self.config.n + 1)).sqrt();
                nodes.iter().map(|x| f(x).scale(&scale)).collect()
            }
            SystemKind::Equispaced => {
                let nodes = grid_nodes::<R>(&self.config).unwrap();
                let m = nodes.len() / 2;
                let scale = R::one() / (R::from_usize(m) + R::from_f64(0.5)).sqrt();
                nodes.iter().map(|x| f(x).scale(&scale)).collect()
            }
        };
        self.rhs = Some(rhs);
        Ok(())
    }
}

/// Max-entry deviation of the equispaced normal matrix from the continuous
/// Gram, for each M in `m_list`; Riemann-sum convergence drives it to zero.
pub fn gram_limit_check(n: usize, m_list: &[usize], t: f64) -> Result<Vec<f64>, SystemsError> {
    let cont = ExtensionConfig::continuous(t, n)?;
    let a = build_system::<f64>(&cont)?.matrix;
    let mut out = Vec::with_capacity(m_list.len());
    for &m in m_list {
        let cfg = ExtensionConfig::equispaced(t, n, m)?;
        let bar = build_system::<f64>(&cfg)?.matrix;
        let normal = bar.conj_t_mul(&bar);
        out.push(normal.max_abs_diff(&a));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continuous_smallest_case() {
        let cfg = ExtensionConfig::continuous(2.0, 1).unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        assert_eq!(sys.rows(), 3);
        // diagonal 1/T
        assert!((sys.matrix.at(0, 0).re - 0.5).abs() < 1e-15);
        // |n-m| = 2 entry is sin(pi)/(2pi) = 0 at T=2
        assert!(sys.matrix.at(0, 2).re.abs() < 1e-16);
        // |n-m| = 1 entry sin(pi/2)/pi
        let want = 1.0 / std::f64::consts::PI;
        assert!((sys.matrix.at(0, 1).re - want).abs() < 1e-15);
    }

    #[test]
    fn continuous_hermitian_toeplitz() {
        let cfg = ExtensionConfig::continuous(2.7, 9).unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        let a = &sys.matrix;
        for i in 0..sys.rows() {
            for j in 0..sys.cols() {
                assert_eq!(a.at(i, j).im, 0.0);
                assert_eq!(a.at(i, j).re, a.at(j, i).re);
                if i + 1 < sys.rows() && j + 1 < sys.cols() {
                    assert_eq!(a.at(i, j).re, a.at(i + 1, j + 1).re);
                }
            }
        }
    }

    #[test]
    fn equispaced_row_scaling() {
        // N=0, M=2, T=2: row at x=0 is phi_0(0)/sqrt(2.5) = 1/(2 sqrt(2.5))
        let cfg = ExtensionConfig::new(
            2.0,
            1,
            BasisKind::ComplexExponential,
            GridKind::Equispaced { m: 2 },
        )
        .unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        assert_eq!(sys.rows(), 5);
        assert_eq!(sys.cols(), 3);
        let mid = sys.matrix.at(2, 1); // x = 0, n = 0
        assert!((mid.re - 1.0 / (2.0 * 2.5_f64.sqrt())).abs() < 1e-15);
        assert!((mid.re - 0.31622776601683794).abs() < 1e-9);
    }

    #[test]
    fn discrete_shape_and_scale() {
        let cfg = ExtensionConfig::discrete(2.0, 4).unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        assert_eq!(sys.rows(), 10);
        assert_eq!(sys.cols(), 10);
        // column of the constant basis member is the uniform scale
        let scale = (std::f64::consts::PI / 5.0).sqrt();
        let j0 = cfg.indices().iter().position(|&i| i == 0).unwrap();
        for i in 0..10 {
            assert!((sys.matrix.at(i, j0).re - scale).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_mismatched_combination() {
        let cfg = ExtensionConfig::new(2.0, 3, BasisKind::SymmetricTrig, GridKind::Continuous)
            .unwrap();
        assert!(build_system::<f64>(&cfg).is_err());
    }

    #[test]
    fn rejects_oversize() {
        let cfg = ExtensionConfig::equispaced(2.0, 1200, 1200).unwrap();
        assert!(matches!(
            build_system::<f64>(&cfg),
            Err(SystemsError::TooLarge { .. })
        ));
    }

    #[test]
    fn rhs_simple_cases() {
        let cfg = ExtensionConfig::continuous(2.0, 2).unwrap();
        let rule = QuadratureRule::for_degree(2, 8, 15);
        // f = 0 -> zero vector
        let b = continuous_rhs(&|_: &f64| Cx::zero(), &cfg, rule).unwrap();
        assert!(b.iter().all(|z| z.abs() < 1e-16));
        // f = 1 at T=2: b_0 = 2/sqrt(2T) = 1, b_{+-1} = 2/pi, b_{+-2} = 0
        let b = continuous_rhs(&|_: &f64| Cx::one(), &cfg, rule).unwrap();
        assert!((b[2].re - 1.0).abs() < 1e-13);
        let want1 = 2.0 / std::f64::consts::PI;
        assert!((b[1].re - want1).abs() < 1e-13 && (b[3].re - want1).abs() < 1e-13);
        assert!(b[0].abs() < 1e-13 && b[4].abs() < 1e-13);
    }

    #[test]
    fn rhs_reproduces_gram_columns() {
        // f = phi_m  =>  b = column m of A
        let n = 20;
        let cfg = ExtensionConfig::continuous(2.0, n).unwrap();
        let sys = build_system::<f64>(&cfg).unwrap();
        let rule = QuadratureRule::for_degree(n, 8, 15);
        for m in [0i64, 3, -7, 20] {
            let b = continuous_rhs(&|x: &f64| basis_eval(m, x, &cfg).unwrap(), &cfg, rule)
                .unwrap();
            let col = (m + n as i64) as usize;
            for (i, bi) in b.iter().enumerate() {
                let want = sys.matrix.at(i, col);
                assert!(
                    (bi.clone() - want.clone()).abs() < 1e-12,
                    "m={m} row {i}"
                );
            }
        }
    }

    #[test]
    fn gram_limit_is_decreasing() {
        let devs = gram_limit_check(4, &[4, 16, 64, 256, 1024], 2.0).unwrap();
        for w in devs.windows(2) {
            assert!(w[1] < w[0], "{devs:?}");
        }
        assert!(devs.last().unwrap() <= &1e-3, "{devs:?}");
    }

    #[test]
    fn equispaced_normal_diagonal_closed_form() {
        let n = 3;
        let m = 11;
        let cfg = ExtensionConfig::equispaced(2.0, n, m).unwrap();
        let bar = build_system::<f64>(&cfg).unwrap().matrix;
        let normal = bar.conj_t_mul(&bar);
        let want = (2 * m + 1) as f64 / ((m as f64 + 0.5) * 4.0);
        for j in 0..2 * n + 1 {
            assert!((normal.at(j, j).re - want).abs() < 1e-14);
        }
    }
}
