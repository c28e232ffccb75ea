//! Log–log power-law regression used by the decay and scaling experiments.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Result of fitting y ≈ prefactor · x^{−exponent} (exponent reported with
/// the decay-positive sign convention).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub prefactor: f64,
    /// RMS deviation of log y around the fitted line.
    pub residual: f64,
    pub window: (f64, f64),
}

/// Least-squares line in log–log coordinates. `ys` must be strictly positive.
pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> Result<PowerLawFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::InvalidInput("fit needs >= 2 matching samples".into()));
    }
    if ys.iter().any(|&y| !(y > 0.0)) || xs.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::InvalidInput("fit requires positive samples".into()));
    }
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidInput("fit abscissae are all equal".into()));
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = (lx
        .iter()
        .zip(&ly)
        .map(|(x, y)| {
            let d = y - (slope * x + intercept);
            d * d
        })
        .sum::<f64>()
        / n)
        .sqrt();
    let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(PowerLawFit {
        exponent: -slope,
        prefactor: intercept.exp(),
        residual,
        window: (lo, hi),
    })
}

/// Geometric sequence of m points spanning [a, b].
pub fn geomspace(a: f64, b: f64, m: usize) -> Vec<f64> {
    assert!(a > 0.0 && b > a && m >= 2);
    let ratio = (b / a).powf(1.0 / (m as f64 - 1.0));
    (0..m).map(|k| a * ratio.powi(k as i32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_power_law_recovered() {
        let xs = geomspace(10.0, 1000.0, 9);
        let ys: Vec<f64> = xs.iter().map(|t| 2.5 * t.powf(-1.5)).collect();
        let fit = fit_power_law(&xs, &ys).unwrap();
        assert_relative_eq!(fit.exponent, 1.5, max_relative = 1e-12);
        assert_relative_eq!(fit.prefactor, 2.5, max_relative = 1e-10);
        assert!(fit.residual < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_samples() {
        assert!(fit_power_law(&[1.0, 2.0], &[1.0, 0.0]).is_err());
        assert!(fit_power_law(&[1.0, 2.0], &[1.0, -3.0]).is_err());
        assert!(fit_power_law(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn growing_sequence_gets_negative_decay() {
        let xs = geomspace(1.0, 100.0, 8);
        let ys: Vec<f64> = xs.iter().map(|t| t.powf(0.75)).collect();
        let fit = fit_power_law(&xs, &ys).unwrap();
        assert_relative_eq!(fit.exponent, -0.75, max_relative = 1e-10);
    }
}
