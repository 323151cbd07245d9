//! Builtin target functions with analytically known singularity data.
//!
//! These are the standard stress cases for extension experiments: Runge-type
//! poles on the imaginary axis, real poles just outside [-1,1], a boundary
//! layer, a kink, a high-frequency complex exponential, and two easy smooth
//! functions. Singularity locations are carried analytically; nothing here
//! tries to locate singularities of arbitrary user functions.

use std::fmt;
use std::str::FromStr;

use crate::analyticity::{analyticity_rate, AnalyticityInfo, Singularity};
use crate::cx::Cx;
use crate::error::CoreError;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Runge16,
    Runge25,
    Runge100,
    Pole87,
    Pole101,
    Cosh40,
    AbsX7,
    Oscil,
    ExpX,
    Linear,
}

impl Builtin {
    pub const ALL: [Builtin; 10] = [
        Builtin::Runge16,
        Builtin::Runge25,
        Builtin::Runge100,
        Builtin::Pole87,
        Builtin::Pole101,
        Builtin::Cosh40,
        Builtin::AbsX7,
        Builtin::Oscil,
        Builtin::ExpX,
        Builtin::Linear,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::Runge16 => "runge16",
            Builtin::Runge25 => "runge25",
            Builtin::Runge100 => "runge100",
            Builtin::Pole87 => "pole87",
            Builtin::Pole101 => "pole101",
            Builtin::Cosh40 => "cosh40",
            Builtin::AbsX7 => "absx7",
            Builtin::Oscil => "oscil",
            Builtin::ExpX => "expx",
            Builtin::Linear => "linear",
        }
    }

    pub fn eval<R: Real>(&self, x: &R) -> Cx<R> {
        match self {
            Builtin::Runge16 => rational_pole(x, 16.0),
            Builtin::Runge25 => rational_pole(x, 25.0),
            Builtin::Runge100 => rational_pole(x, 100.0),
            Builtin::Pole87 => {
                Cx::from_re(R::one() / (R::from_f64(8.0) - R::from_f64(7.0) * x.clone()))
            }
            Builtin::Pole101 => {
                Cx::from_re(R::one() / (R::from_f64(101.0) - R::from_f64(100.0) * x.clone()))
            }
            Builtin::Cosh40 => {
                let forty = R::from_f64(40.0);
                Cx::from_re(R::one() + (forty.clone() * x.clone()).cosh() / forty.cosh())
            }
            Builtin::AbsX7 => Cx::from_re(x.abs().powi(7)),
            Builtin::Oscil => {
                let omega = R::from_f64(25.0) * R::from_f64(5.0).sqrt() * R::pi();
                Cx::from_polar(&R::one(), &(omega * x.clone()))
            }
            Builtin::ExpX => Cx::from_re(x.exp()),
            Builtin::Linear => Cx::from_re(x.clone()),
        }
    }

    /// Nearest singularity in the complex plane.
    pub fn singularity(&self) -> Singularity {
        match self {
            Builtin::Runge16 => Singularity::At(0.0, 0.25),
            Builtin::Runge25 => Singularity::At(0.0, 0.2),
            Builtin::Runge100 => Singularity::At(0.0, 0.1),
            Builtin::Pole87 => Singularity::At(8.0 / 7.0, 0.0),
            Builtin::Pole101 => Singularity::At(1.01, 0.0),
            Builtin::Cosh40 => Singularity::At(0.0, std::f64::consts::PI / 80.0),
            Builtin::AbsX7 => Singularity::OnInterval(0.0),
            Builtin::Oscil | Builtin::ExpX | Builtin::Linear => Singularity::Entire,
        }
    }

    /// Rate prediction for this function at parameter `t`; errors for the
    /// kink case where no geometric rate exists.
    pub fn analyticity(&self, t: f64) -> Result<AnalyticityInfo, CoreError> {
        match self.singularity() {
            Singularity::Entire => analyticity_rate(None, t),
            Singularity::At(re, im) => analyticity_rate(Some((re, im)), t),
            Singularity::OnInterval(_) => Err(CoreError::NotAnalytic(self.name())),
        }
    }

    /// Floor on composite-quadrature panel counts so the integrand's own
    /// scale (oscillation, boundary layer) is resolved, before any
    /// degree-dependent or precision-dependent scaling.
    pub fn panel_floor(&self) -> usize {
        match self {
            Builtin::Oscil => 24,
            Builtin::Pole101 => 32,
            Builtin::Runge100 => 12,
            Builtin::Cosh40 => 12,
            Builtin::Pole87 | Builtin::Runge25 | Builtin::Runge16 | Builtin::AbsX7 => 8,
            Builtin::ExpX | Builtin::Linear => 8,
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Builtin::ALL
            .iter()
            .find(|b| b.name() == s)
            .copied()
            .ok_or_else(|| CoreError::UnknownFunction(s.to_string()))
    }
}

fn rational_pole<R: Real>(x: &R, a: f64) -> Cx<R> {
    Cx::from_re(R::one() / (R::one() + R::from_f64(a) * x.clone() * x.clone()))
}
