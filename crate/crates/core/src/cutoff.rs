//! Smooth radial cutoffs: χ ≡ 1 on [0, inner], χ ≡ 0 on [outer, ∞), with the
//! exp-based partition-of-unity bridge in between.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CutoffSpec {
    pub inner: f64,
    pub outer: f64,
}

fn bump(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        (-1.0 / t).exp()
    }
}

impl CutoffSpec {
    pub fn new(inner: f64, outer: f64) -> Result<Self> {
        if !(0.0 < inner && inner < outer) {
            return Err(Error::InvalidInput(format!(
                "cutoff requires 0 < inner < outer (got {inner}, {outer})"
            )));
        }
        Ok(Self { inner, outer })
    }

    /// The default bridge on [1, 2], matching the support arithmetic of the
    /// symbol decomposition (χ(4|ξ|) lives in |ξ| ≤ 1/2, 1 − χ(|ξ|/2) in |ξ| ≥ 2).
    pub fn standard() -> Self {
        Self { inner: 1.0, outer: 2.0 }
    }

    /// χ(s): C^∞, nonincreasing, 1 on [0, inner], 0 on [outer, ∞).
    pub fn chi(&self, s: f64) -> f64 {
        if s <= self.inner {
            return 1.0;
        }
        if s >= self.outer {
            return 0.0;
        }
        let u = (s - self.inner) / (self.outer - self.inner);
        let f1 = bump(1.0 - u);
        let f0 = bump(u);
        f1 / (f0 + f1)
    }

    /// 𝜒̃ = 1 − χ, computed so χ + 𝜒̃ = 1 exactly.
    pub fn chi_tilde(&self, s: f64) -> f64 {
        1.0 - self.chi(s)
    }
}
