//! Extension-interval constants and the coordinate mappings between the
//! trigonometric argument x and the polynomial argument z.
//!
//! For extension parameter T > 1:
//!   E(T) = cot^2(pi/(4T))        geometric convergence constant,
//!   c(T) = cos(pi/T),
//!   m(x) = 2 (cos(pi x / T) - c(T)) / (1 - c(T)) - 1,
//!   m(T) = 1 - 2 cosec^2(pi/(2T)) < -1     image of the extension endpoint,
//! and the Joukowski index psi(t) = t + sqrt(t^2 - 1) (branch of larger
//! modulus) measures Bernstein-ellipse size, with psi(m(T)) = E(T).

use crate::cx::Cx;
use crate::error::CoreError;
use crate::scalar::Real;

fn check_t(t: f64) -> Result<(), CoreError> {
    if t > 1.0 && t.is_finite() {
        Ok(())
    } else {
        Err(CoreError::InvalidT(t))
    }
}

/// E(T) = cot^2(pi/(4T)); strictly increasing, > 1 for T > 1.
pub fn fe_constant<R: Real>(t: &R) -> Result<R, CoreError> {
    check_t(t.to_f64())?;
    let x = R::pi() / (R::from_f64(4.0) * t.clone());
    let cot = x.cos() / x.sin();
    Ok(cot.clone() * cot)
}

/// c(T) = cos(pi/T).
pub fn c_of_t<R: Real>(t: &R) -> R {
    (R::pi() / t.clone()).cos()
}

/// The map x -> z: real arguments.
pub fn map_to_z<R: Real>(x: &R, t: &R) -> R {
    let c = c_of_t(t);
    let y = (R::pi() * x.clone() / t.clone()).cos();
    R::from_f64(2.0) * (y - c.clone()) / (R::one() - c) - R::one()
}

/// The map x -> z for complex arguments (entire in x).
pub fn map_to_z_cx<R: Real>(x: &Cx<R>, t: &R) -> Cx<R> {
    let c = c_of_t(t);
    let arg = x.scale(&(R::pi() / t.clone()));
    // cos(a + ib) = cos a cosh b - i sin a sinh b
    let y = Cx::new(
        arg.re.cos() * arg.im.cosh(),
        -(arg.re.sin() * arg.im.sinh()),
    );
    let scale = R::from_f64(2.0) / (R::one() - c.clone());
    (y - Cx::from_re(c)).scale(&scale) - Cx::one()
}

/// |t + sqrt(t^2-1)| with the branch of modulus >= 1; errors on the open
/// cut (-1,1) where both branches sit on the unit circle.
pub fn joukowski_index<R: Real>(z: &R) -> Result<R, CoreError> {
    let one = R::one();
    let a = z.abs();
    if a < one {
        return Err(CoreError::BranchCut);
    }
    Ok(a.clone() + (a.clone() * a - one).sqrt())
}

/// Complex-argument Joukowski index: larger-modulus root of the two.
pub fn joukowski_index_cx<R: Real>(z: &Cx<R>) -> Result<R, CoreError> {
    if z.im.is_zero() {
        return joukowski_index(&z.re);
    }
    let s = (z.clone() * z.clone() - Cx::one()).sqrt();
    let w1 = (z.clone() + s.clone()).abs();
    let w2 = (z.clone() - s).abs();
    Ok(w1.max_with(&w2))
}

/// Derived constants of the mapped domain for one value of T.
#[derive(Clone, Debug)]
pub struct MappedDomain {
    /// cos(pi/T)
    pub c_t: f64,
    /// m(T) = 1 - 2 cosec^2(pi/(2T)), always < -1
    pub m_t: f64,
    /// E(T) = cot^2(pi/(4T))
    pub e_t: f64,
}

impl MappedDomain {
    pub fn new(t: f64) -> Result<Self, CoreError> {
        check_t(t)?;
        let half = std::f64::consts::PI / (2.0 * t);
        let csc = 1.0 / half.sin();
        let m_t = 1.0 - 2.0 * csc * csc;
        let dom = MappedDomain {
            c_t: c_of_t(&t),
            m_t,
            e_t: fe_constant(&t)?,
        };
        debug_assert!(dom.m_t < -1.0);
        Ok(dom)
    }

    /// m(T) at generic precision.
    pub fn m_t_r<R: Real>(t: &R) -> R {
        let half = R::pi() / (R::from_f64(2.0) * t.clone());
        let csc = R::one() / half.sin();
        R::one() - R::from_f64(2.0) * csc.clone() * csc
    }
}

/// Degree-dependent extension parameter making E(T)^-N equal `eps_tol`.
pub fn adaptive_t(n: usize, eps_tol: f64) -> Result<f64, CoreError> {
    if n == 0 {
        return Err(CoreError::InvalidN);
    }
    if !(eps_tol > 0.0 && eps_tol < 1.0) {
        return Err(CoreError::InvalidTolerance(eps_tol));
    }
    let u = eps_tol.powf(1.0 / (2.0 * n as f64));
    Ok(std::f64::consts::FRAC_PI_4 / u.atan())
}
