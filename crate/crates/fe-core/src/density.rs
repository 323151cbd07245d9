//! Limiting node density of the mapped equispaced points in the z variable.

use crate::constants::MappedDomain;
use crate::error::CoreError;
use crate::scalar::Real;

/// mu(z) = T / (pi sqrt((1-z)(z - m(T)))) on (-1,1).
///
/// Continuous at z = -1 with value (T/2pi) tan(pi/(2T)); blows up like
/// (1-z)^(-1/2) at z = +1. Both endpoints are rejected so quadrature
/// callers handle the integrable singularity explicitly.
pub fn node_density<R: Real>(z: &R, t: &R) -> Result<R, CoreError> {
    let zf = z.to_f64();
    if zf <= -1.0 || zf >= 1.0 {
        return Err(CoreError::DensityEndpoint);
    }
    let m_t = MappedDomain::m_t_r(t);
    let w = (R::one() - z.clone()) * (z.clone() - m_t);
    Ok(t.clone() / (R::pi() * w.sqrt()))
}
