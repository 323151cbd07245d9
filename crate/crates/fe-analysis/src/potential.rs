//! Logarithmic potential of the mapped equispaced nodes and the induced
//! Runge-region diagnostics.
//!
//! After the change of variables z = m(s), the potential at a complex
//! point x is phi(m(x)) = -int_0^1 log|m(x) - m(s)| ds. The integrand's
//! log singularities sit where m(s) = m(x), i.e. at s = +/-w with w the
//! principal pullback of x; subtracting log|w^2 - s^2| (whose integral has
//! a closed form) leaves a smooth remainder for ordinary quadrature.
//!
//! The indicator phi(m(x)) - phi(m(1)) is positive exactly on the region
//! where a singularity of the target function forces geometric divergence
//! of the exact equispaced extension, and its exponential gives the
//! worst-case divergence rate over [-1,1].

use fe_core::{c_of_t, map_to_z_cx, Cx};
use fe_systems::{integrate_adaptive, QuadratureRule};

use crate::error::AnalysisError;

fn ln_cx(z: &Cx<f64>) -> Cx<f64> {
    Cx::new(z.abs().ln(), z.arg())
}

fn acos_cx(z: &Cx<f64>) -> Cx<f64> {
    // principal branch, real part in [0, pi]
    let s = (Cx::one() - z.clone() * z.clone()).sqrt();
    let w = z.clone() + Cx::new(-s.im, s.re); // z + i s
    let l = ln_cx(&w);
    Cx::new(l.im, -l.re) // -i ln(w)
}

fn m_prime(x: &Cx<f64>, t: f64) -> Cx<f64> {
    let c = c_of_t(&t);
    let th = x.scale(&(std::f64::consts::PI / t));
    let sin = Cx::new(th.re.sin() * th.im.cosh(), th.re.cos() * th.im.sinh());
    sin.scale(&(-2.0 * std::f64::consts::PI / (t * (1.0 - c))))
}

/// Principal pullback w of x: m(w) = m(x) with Re(w) in [0, T].
fn pullback(x: &Cx<f64>, t: f64) -> Cx<f64> {
    let th = x.scale(&(std::f64::consts::PI / t));
    let cosv = Cx::new(th.re.cos() * th.im.cosh(), -(th.re.sin() * th.im.sinh()));
    acos_cx(&cosv).scale(&(t / std::f64::consts::PI))
}

/// Re integral of log|w - s| + log|w + s| over s in [0,1]:
/// (w+1)Ln(w+1) - (w-1)Ln(w-1) - 2, real part.
fn closed_form_log_integral(w: &Cx<f64>) -> f64 {
    let term = |z: Cx<f64>| -> Cx<f64> {
        if z.abs() < 1e-300 {
            Cx::zero()
        } else {
            ln_cx(&z) * z
        }
    };
    let plus = term(w.clone() + Cx::one());
    let minus = term(w.clone() - Cx::one());
    plus.re - minus.re - 2.0
}

/// phi(m(x)) for complex x.
pub fn potential_at(x: Cx<f64>, t: f64) -> Result<f64, AnalysisError> {
    let w = pullback(&x, t);
    let mx = map_to_z_cx(&x, &t);
    let wp = m_prime(&w, t);
    let integrand = move |s: &f64| -> Cx<f64> {
        let sv = Cx::from_f64(*s, 0.0);
        let d1 = w.clone() - sv.clone();
        let d2 = w.clone() + sv.clone();
        let a1 = d1.abs();
        let a2 = d2.abs();
        let v = if a1 < 1e-7 && a2 < 1e-7 {
            // double zero at the origin: ratio limits to |m''(0)|/2
            let c = c_of_t(&t);
            let mpp = 2.0 * (std::f64::consts::PI / t).powi(2) / (1.0 - c);
            (mpp / 2.0).ln()
        } else if a1 < 1e-7 {
            m_prime(&sv, t).abs().ln() - a2.ln()
        } else if a2 < 1e-7 {
            m_prime(&sv, t).abs().ln() - a1.ln()
        } else {
            let ms = map_to_z_cx(&sv, &t);
            let num = (mx.clone() - ms).abs();
            if num < 1e-280 {
                wp.abs().ln() - a2.ln()
            } else {
                num.ln() - a1.ln() - a2.ln()
            }
        };
        Cx::from_f64(v, 0.0)
    };
    let rule = QuadratureRule::new(16, 24);
    let remainder = integrate_adaptive(&integrand, &0.0, &1.0, rule, &1e-10)?.re;
    Ok(-(remainder + closed_form_log_integral(&w)))
}

/// phi(m(x)) - phi(m(1)): positive inside the Runge region.
pub fn runge_indicator(x: Cx<f64>, t: f64) -> Result<f64, AnalysisError> {
    Ok(potential_at(x, t)? - potential_at(Cx::one(), t)?)
}

/// Indicator profile along real samples.
pub fn potential_profile(t: f64, xs: &[f64]) -> Result<Vec<(f64, f64)>, AnalysisError> {
    let phi_ref = potential_at(Cx::one(), t)?;
    xs.iter()
        .map(|&x| Ok((x, potential_at(Cx::from_f64(x, 0.0), t)? - phi_ref)))
        .collect()
}

#[derive(Clone, Debug)]
pub struct RungeScan {
    pub t: f64,
    pub nx: usize,
    pub ny: usize,
    /// (Re x, Im x, indicator)
    pub points: Vec<(f64, f64, f64)>,
    pub positive: usize,
}

/// Indicator over the rectangle [-1.5, 1.5] x [-1, 1].
pub fn runge_region_scan(t: f64, nx: usize, ny: usize) -> Result<RungeScan, AnalysisError> {
    let phi_ref = potential_at(Cx::one(), t)?;
    let mut points = Vec::with_capacity(nx * ny);
    let mut positive = 0usize;
    for iy in 0..ny {
        let im = -1.0 + 2.0 * iy as f64 / (ny - 1).max(1) as f64;
        for ix in 0..nx {
            let re = -1.5 + 3.0 * ix as f64 / (nx - 1).max(1) as f64;
            let ind = potential_at(Cx::from_f64(re, im), t)? - phi_ref;
            if ind > 0.0 {
                positive += 1;
            }
            points.push((re, im, ind));
        }
    }
    Ok(RungeScan {
        t,
        nx,
        ny,
        points,
        positive,
    })
}
