//! Problem identity: extension parameter, truncation degree, basis and grid.

use crate::cx::Cx;
use crate::error::CoreError;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// e^(i n pi x / T) / sqrt(2T) for n = -N..N  (2N+1 members)
    ComplexExponential,
    /// cos(n pi x / T) for n = 0..N and sin(n pi x / T) for n = 1..N+1,
    /// the sines indexed -1..-(N+1)  (2N+2 members)
    SymmetricTrig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridKind {
    /// L2(-1,1) projection; no collocation grid.
    Continuous,
    /// 2N+2 mapped symmetric Chebyshev nodes.
    MappedChebyshev,
    /// 2M+1 equispaced nodes n/M, M >= N.
    Equispaced { m: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtensionConfig {
    pub t: f64,
    pub n: usize,
    pub basis: BasisKind,
    pub grid: GridKind,
}

impl ExtensionConfig {
    pub fn new(t: f64, n: usize, basis: BasisKind, grid: GridKind) -> Result<Self, CoreError> {
        if !(t > 1.0 && t.is_finite()) {
            return Err(CoreError::InvalidT(t));
        }
        if n == 0 {
            return Err(CoreError::InvalidN);
        }
        if let GridKind::Equispaced { m } = grid {
            if m < n {
                return Err(CoreError::UndersampledGrid { m, n });
            }
        }
        Ok(ExtensionConfig { t, n, basis, grid })
    }

    /// Standard continuous problem in the exponential basis.
    pub fn continuous(t: f64, n: usize) -> Result<Self, CoreError> {
        Self::new(t, n, BasisKind::ComplexExponential, GridKind::Continuous)
    }

    /// Standard discrete problem: trig basis on mapped Chebyshev nodes.
    pub fn discrete(t: f64, n: usize) -> Result<Self, CoreError> {
        Self::new(t, n, BasisKind::SymmetricTrig, GridKind::MappedChebyshev)
    }

    /// Standard equispaced problem in the exponential basis.
    pub fn equispaced(t: f64, n: usize, m: usize) -> Result<Self, CoreError> {
        Self::new(
            t,
            n,
            BasisKind::ComplexExponential,
            GridKind::Equispaced { m },
        )
    }

    /// Number of basis members.
    pub fn basis_size(&self) -> usize {
        match self.basis {
            BasisKind::ComplexExponential => 2 * self.n + 1,
            BasisKind::SymmetricTrig => 2 * self.n + 2,
        }
    }

    /// Basis indices in column order.
    pub fn indices(&self) -> Vec<i64> {
        let n = self.n as i64;
        match self.basis {
            BasisKind::ComplexExponential => (-n..=n).collect(),
            BasisKind::SymmetricTrig => (-(n + 1)..=n).collect(),
        }
    }

    pub fn index_valid(&self, index: i64) -> bool {
        let n = self.n as i64;
        match self.basis {
            BasisKind::ComplexExponential => -n <= index && index <= n,
            BasisKind::SymmetricTrig => -(n + 1) <= index && index <= n,
        }
    }
}

/// Evaluate basis member `index` at `x`.
pub fn basis_eval<R: Real>(index: i64, x: &R, config: &ExtensionConfig) -> Result<Cx<R>, CoreError> {
    if !config.index_valid(index) {
        return Err(CoreError::IndexOutOfRange {
            index,
            n: config.n,
        });
    }
    let t = R::from_f64(config.t);
    let theta = R::pi() * x.clone() / t.clone();
    Ok(match config.basis {
        BasisKind::ComplexExponential => {
            let amp = R::one() / (R::from_f64(2.0) * t).sqrt();
            let phase = R::from_f64(index as f64) * theta;
            Cx::from_polar(&amp, &phase)
        }
        BasisKind::SymmetricTrig => {
            if index >= 0 {
                Cx::from_re((R::from_f64(index as f64) * theta).cos())
            } else {
                Cx::from_re((R::from_f64(-index as f64) * theta).sin())
            }
        }
    })
}
