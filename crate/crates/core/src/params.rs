use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The operator order α and spatial dimension n of (−Δ)^α on R^n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FracParams {
    pub alpha: f64,
    pub n: usize,
}

impl FracParams {
    pub fn new(alpha: f64, n: usize) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidInput(format!("alpha must be > 0, got {alpha}")));
        }
        if n < 1 {
            return Err(Error::InvalidInput("dimension n must be >= 1".into()));
        }
        Ok(Self { alpha, n })
    }

    /// Zero energy is a regular point of the free operator iff 2α < n.
    pub fn threshold_regular_free(&self) -> bool {
        2.0 * self.alpha < self.n as f64
    }

    /// High-energy resolvent bounds hold on (n+1)/4 ≤ α < n/2.
    pub fn high_energy_ok(&self) -> bool {
        let n = self.n as f64;
        self.alpha >= (n + 1.0) / 4.0 && self.alpha < n / 2.0
    }

    /// Dimension as a float, for exponent arithmetic.
    pub fn nf(&self) -> f64 {
        self.n as f64
    }

    /// Dispersive decay exponent of the free propagator: n/(2α) without
    /// smoothing, n/2 at the critical smoothing order.
    pub fn decay_exponent(&self, smoothed: bool) -> f64 {
        if smoothed {
            self.nf() / 2.0
        } else {
            self.nf() / (2.0 * self.alpha)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_follow_alpha_ranges() {
        let p = FracParams::new(1.0, 3).unwrap();
        assert!(p.threshold_regular_free());
        assert!(p.high_energy_ok());

        let p = FracParams::new(0.75, 2).unwrap();
        assert!(p.threshold_regular_free());
        assert!(p.high_energy_ok());

        // alpha = n/2 is excluded from the high-energy range
        let p = FracParams::new(1.0, 2).unwrap();
        assert!(!p.threshold_regular_free());
        assert!(!p.high_energy_ok());

        // range is empty in one dimension
        let p = FracParams::new(0.5, 1).unwrap();
        assert!(!p.high_energy_ok());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(FracParams::new(0.0, 3).is_err());
        assert!(FracParams::new(-1.0, 3).is_err());
        assert!(FracParams::new(f64::NAN, 3).is_err());
        assert!(FracParams::new(1.0, 0).is_err());
    }
}
