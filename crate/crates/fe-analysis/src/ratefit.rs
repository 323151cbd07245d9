//! Slope extraction for geometric convergence/divergence claims.

use crate::error::AnalysisError;

/// Least-squares slope of y over x.
pub fn fit_slope(xy: &[(f64, f64)]) -> Result<f64, AnalysisError> {
    if xy.len() < 2 {
        return Err(AnalysisError::WindowTooSmall {
            points: xy.len(),
            min: 2,
        });
    }
    let n = xy.len() as f64;
    let sx: f64 = xy.iter().map(|p| p.0).sum();
    let sy: f64 = xy.iter().map(|p| p.1).sum();
    let sxx: f64 = xy.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = xy.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-30 {
        return Err(AnalysisError::DegenerateFit("x values coincide"));
    }
    Ok((n * sxy - sx * sy) / denom)
}

/// Fitted geometric rate rho_hat = exp(-slope of log error against N),
/// restricted to `window` (inclusive N bounds) when given. Errors must be
/// strictly positive; at least four points are required.
pub fn rate_fit(
    errors: &[(usize, f64)],
    window: Option<(usize, usize)>,
) -> Result<f64, AnalysisError> {
    let pts: Vec<(f64, f64)> = errors
        .iter()
        .filter(|(n, _)| window.map_or(true, |(lo, hi)| (lo..=hi).contains(n)))
        .map(|&(n, e)| {
            if e > 0.0 {
                Ok((n as f64, e.ln()))
            } else {
                Err(AnalysisError::DegenerateFit("non-positive error value"))
            }
        })
        .collect::<Result<_, _>>()?;
    if pts.len() < 4 {
        return Err(AnalysisError::WindowTooSmall {
            points: pts.len(),
            min: 4,
        });
    }
    Ok((-fit_slope(&pts)?).exp())
}

/// First N at which a decaying error curve stalls: the decay ratio to the
/// next point rises above 1/2 (and stays above 1/4 two points out, where
/// available). Returns None for curves that never flatten.
pub fn plateau_onset(errors: &[(usize, f64)]) -> Option<usize> {
    for i in 0..errors.len().saturating_sub(1) {
        let (n, e) = errors[i];
        let (_, e1) = errors[i + 1];
        if e <= 0.0 {
            continue;
        }
        let stalls = e1 > 0.5 * e;
        let confirmed = match errors.get(i + 2) {
            Some(&(_, e2)) => e2 > 0.25 * e,
            None => true,
        };
        if stalls && confirmed {
            return Some(n);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_geometric_data() {
        let rho: f64 = 5.8284;
        let data: Vec<(usize, f64)> = (4..=20)
            .map(|n| (n, 3.7 * rho.powi(-(n as i32))))
            .collect();
        let got = rate_fit(&data, None).unwrap();
        assert!((got - rho).abs() < 1e-6 * rho, "{got}");
    }

    #[test]
    fn constant_errors_rate_one() {
        let data: Vec<(usize, f64)> = (1..=10).map(|n| (n, 0.125)).collect();
        let got = rate_fit(&data, None).unwrap();
        assert!((got - 1.0).abs() < 1e-12);
    }

    #[test]
    fn window_restriction_and_minimum() {
        let data: Vec<(usize, f64)> = (1..=10).map(|n| (n, 2.0_f64.powi(-(n as i32)))).collect();
        assert!(rate_fit(&data, Some((2, 4))).is_err()); // 3 points only
        let got = rate_fit(&data, Some((2, 8))).unwrap();
        assert!((got - 2.0).abs() < 1e-9);
        assert!(rate_fit(&[(1, 0.5), (2, 0.0), (3, 0.1), (4, 0.1)], None).is_err());
    }

    #[test]
    fn plateau_detection() {
        // geometric decay to a floor at N = 9
        let mut data = Vec::new();
        for n in 1..=15usize {
            let e = (0.2_f64.powi(n as i32)).max(0.2_f64.powi(9));
            data.push((n, e));
        }
        let onset = plateau_onset(&data).unwrap();
        assert!((9i64 - onset as i64).abs() <= 1, "onset {onset}");
        // pure decay has no plateau
        let pure: Vec<(usize, f64)> = (1..=10).map(|n| (n, 0.3_f64.powi(n as i32))).collect();
        assert!(plateau_onset(&pure).is_none());
    }
}
