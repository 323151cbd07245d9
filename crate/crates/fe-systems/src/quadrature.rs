//! Composite Gauss-Legendre quadrature, generic over the scalar backend.

use fe_core::{Cx, Real};

use crate::error::SystemsError;

/// Composite rule: `panels` equal subintervals, `order` points per panel.
/// Exact on polynomials of degree 2*order - 1 per panel.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureRule {
    pub panels: usize,
    pub order: usize,
}

impl QuadratureRule {
    pub fn new(panels: usize, order: usize) -> Self {
        QuadratureRule {
            panels: panels.max(1),
            order: order.max(2),
        }
    }

    /// Default rule for degree-N integrands: order 24, panel count scaling
    /// with the larger of N and the integrand's own resolution floor, and
    /// widened further when the precision target is beyond double.
    pub fn for_degree(n: usize, panel_floor: usize, digits: u32) -> Self {
        let precision_scale = ((digits as usize) / 25).max(1);
        let panels = (n.div_ceil(2))
            .max(8)
            .max(panel_floor * precision_scale);
        QuadratureRule::new(panels, 24)
    }
}

/// Gauss-Legendre nodes and weights on [-1,1], computed by Newton iteration
/// on the Legendre recurrence at the ambient precision.
pub fn gauss_legendre<R: Real>(order: usize) -> (Vec<R>, Vec<R>) {
    let n = order;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let tol = R::eps() * R::from_f64(64.0);
    for k in 0..n {
        // Chebyshev-like initial guess
        let guess = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = R::from_f64(guess);
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, &x);
            let dx = p / dp;
            x = x - dx.clone();
            if dx.abs() <= tol {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, &x);
        let w = R::from_f64(2.0) / ((R::one() - x.clone() * x.clone()) * dp.clone() * dp);
        nodes.push(x);
        weights.push(w);
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_pair<R: Real>(n: usize, x: &R) -> (R, R) {
    let mut p0 = R::one();
    let mut p1 = x.clone();
    if n == 0 {
        return (p0, R::zero());
    }
    for k in 1..n {
        let kf = R::from_usize(k);
        let a = (R::from_f64(2.0) * kf.clone() + R::one()) / (kf.clone() + R::one());
        let b = kf.clone() / (kf + R::one());
        let p2 = a * x.clone() * p1.clone() - b * p0;
        p0 = p1;
        p1 = p2;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let nf = R::from_usize(n);
    let dp = nf * (x.clone() * p1.clone() - p0) / (x.clone() * x.clone() - R::one());
    (p1, dp)
}

/// Composite integral of a complex-valued integrand over [a,b].
pub fn integrate_cx<R: Real>(
    f: &dyn Fn(&R) -> Cx<R>,
    a: &R,
    b: &R,
    rule: QuadratureRule,
) -> Cx<R> {
    let (nodes, weights) = gauss_legendre::<R>(rule.order);
    let panels = R::from_usize(rule.panels);
    let h = (b.clone() - a.clone()) / panels;
    let half = R::from_f64(0.5);
    let mut acc = Cx::zero();
    for p in 0..rule.panels {
        let lo = a.clone() + h.clone() * R::from_usize(p);
        let mid = lo.clone() + h.clone() * half.clone();
        let scale = h.clone() * half.clone();
        for (x, w) in nodes.iter().zip(&weights) {
            let xx = mid.clone() + scale.clone() * x.clone();
            let fx = f(&xx);
            acc = acc + fx.scale(&(w.clone() * scale.clone()));
        }
    }
    acc
}

pub fn integrate_real<R: Real>(f: &dyn Fn(&R) -> R, a: &R, b: &R, rule: QuadratureRule) -> R {
    integrate_cx(&|x: &R| Cx::from_re(f(x)), a, b, rule).re
}

/// Absolute tolerance for refinement agreement at the ambient precision.
pub fn refinement_tol<R: Real>() -> R {
    let d = R::working_digits();
    if d <= 16 {
        R::from_f64(1e-12)
    } else {
        R::from_f64(10.0).powi(-((d as i32 * 3) / 5))
    }
}

/// Integrate with panel-doubling error control: accept once two successive
/// refinements agree within `tol` (scaled by the result's magnitude).
pub fn integrate_adaptive<R: Real>(
    f: &dyn Fn(&R) -> Cx<R>,
    a: &R,
    b: &R,
    rule: QuadratureRule,
    tol: &R,
) -> Result<Cx<R>, SystemsError> {
    let mut coarse = integrate_cx(f, a, b, rule);
    let mut panels = rule.panels;
    for _ in 0..6 {
        panels *= 2;
        let fine = integrate_cx(f, a, b, QuadratureRule::new(panels, rule.order));
        let diff = (fine.clone() - coarse.clone()).abs();
        let scale = R::one().max_with(&fine.abs());
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exactness() {
        // order q integrates degree 2q-1 exactly: check x^9 with order 5
        let rule = QuadratureRule::new(1, 5);
        let exact = 2.0 / 11.0; // int_{-1}^{1} x^10
        let got = integrate_real(&|x: &f64| x.powi(10), &-1.0, &1.0, rule);
        assert!((got - exact).abs() > 1e-6); // degree 10 NOT exact at order 5
        let got = integrate_real(&|x: &f64| x.powi(9), &-1.0, &1.0, rule);
        assert!(got.abs() < 1e-15); // degree 9 exact (and odd)
        let got = integrate_real(&|x: &f64| x.powi(8), &-1.0, &1.0, rule);
        assert!((got - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_integral() {
        // int_{-1}^{1} cos(20 pi x) dx = sin(20 pi)/(10 pi) = 0
        let rule = QuadratureRule::for_degree(40, 8, 15);
        let got = integrate_real(&|x: &f64| (20.0 * std::f64::consts::PI * x).cos(), &-1.0, &1.0, rule);
        assert!(got.abs() < 1e-13, "{got}");
    }

    #[test]
    fn adaptive_flags_rough_integrands() {
        // |x|^(-1/2) near 0 defeats panel doubling at this tolerance
        let rule = QuadratureRule::new(4, 8);
        let r = integrate_adaptive(
            &|x: &f64| Cx::from_re(x.abs().max(1e-300).powf(-0.5)),
            &-1.0,
            &1.0,
            rule,
            &1e-12,
        );
        assert!(r.is_err());
    }

    #[test]
    fn extended_precision_exp() {
        use fe_core::{with_digits, BigReal};
        with_digits(60, || {
            let rule = QuadratureRule::new(8, 24);
            let e = integrate_real(
                &|x: &BigReal| x.exp(),
                &BigReal::from_f64(-1.0),
                &BigReal::from_f64(1.0),
                rule,
            );
            let want = BigReal::from_f64(1.0).exp() - BigReal::from_f64(-1.0).exp();
            let err = (e - want).abs();
            assert!(err < BigReal::from_f64(1e-55), "err={err}");
        });
    }
}
