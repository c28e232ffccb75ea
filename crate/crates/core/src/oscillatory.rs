//! Stationary-phase-aware quadrature for ∫ e^{i(tλ^{2α} + λR)} a(λ) dλ.

use crate::error::{Error, Result};
use crate::quad::integrate_adaptive;
use crate::C64;
use std::f64::consts::PI;

/// Oscillation data for the phase tλ^{2α} + λR.
#[derive(Debug, Clone, Copy)]
pub struct PhaseSpec {
    pub t: f64,
    pub r_total: f64,
    pub alpha: f64,
}

impl PhaseSpec {
    pub fn new(t: f64, r_total: f64, alpha: f64) -> Result<Self> {
        if t == 0.0 && r_total == 0.0 {
            // allowed: the integral is then non-oscillatory
        }
        if r_total < 0.0 || !(alpha > 0.0) {
            return Err(Error::InvalidInput(
                "phase needs R >= 0 and alpha > 0".into(),
            ));
        }
        Ok(Self { t, r_total, alpha })
    }

    pub fn phase(&self, lambda: f64) -> f64 {
        self.t * lambda.powf(2.0 * self.alpha) + lambda * self.r_total
    }

    pub fn phase_derivative(&self, lambda: f64) -> f64 {
        2.0 * self.alpha * self.t * lambda.powf(2.0 * self.alpha - 1.0) + self.r_total
    }

    /// Critical point λ₀ = (−R/(2αt))^{1/(2α−1)}, present only for t < 0,
    /// R > 0 (and α ≠ 1/2).
    pub fn stationary_point(&self) -> Option<f64> {
        if self.t < 0.0 && self.r_total > 0.0 && (2.0 * self.alpha - 1.0).abs() > 1e-12 {
            let base = -self.r_total / (2.0 * self.alpha * self.t);
            Some(base.powf(1.0 / (2.0 * self.alpha - 1.0)))
        } else {
            None
        }
    }
}

fn phase_limited_edges(phase: &PhaseSpec, a: f64, b: f64, max_step_phase: f64) -> Vec<f64> {
    let mut edges = vec![a];
    // refine around the stationary point first
    if let Some(l0) = phase.stationary_point() {
        if l0 > a && l0 < b {
            for f in [0.5, 0.625, 0.75, 0.875, 0.9375, 1.0, 1.0625, 1.125, 1.25, 1.5, 1.75, 2.0] {
                let p = l0 * f;
                if p > a && p < b {
                    edges.push(p);
                }
            }
        }
    }
    edges.push(b);
    edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
    edges.dedup();

    let mut out = Vec::new();
    for w in edges.windows(2) {
        let (x0, x1) = (w[0], w[1]);
        out.push(x0);
        // phase derivative is monotone on (0, inf) for fixed-sign t
        let d0 = phase.phase_derivative(x0.max(1e-300)).abs();
        let d1 = phase.phase_derivative(x1).abs();
        let dmax = d0.max(d1);
        let steps = ((x1 - x0) * dmax / max_step_phase).ceil().max(1.0) as usize;
        let steps = steps.min(200_000);
        for k in 1..steps {
            out.push(x0 + (x1 - x0) * k as f64 / steps as f64);
        }
    }
    out.push(b);
    out
}

/// ∫_a^b e^{i(tλ^{2α}+λR)} a(λ) dλ with adaptive oscillation-limited panels
/// and stationary-point refinement. Two refinement levels must agree to
/// `rel_tol` or the integral is reported as non-convergent.
pub fn oscillatory_integral<F: Fn(f64) -> C64>(
    phase: &PhaseSpec,
    amplitude: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<C64> {
    if !(a >= 0.0) || !(b > a) {
        return Err(Error::InvalidInput(format!(
            "interval must satisfy 0 <= a < b (got [{a}, {b}])"
        )));
    }
    let f = |lam: f64| C64::new(0.0, phase.phase(lam)).exp() * amplitude(lam);
    let coarse_edges = phase_limited_edges(phase, a, b, PI / 4.0);
    let coarse = integrate_adaptive(&f, a, b, &coarse_edges, rel_tol * 0.1, 0.0)?;
    let fine_edges = phase_limited_edges(phase, a, b, PI / 8.0);
    let fine = integrate_adaptive(&f, a, b, &fine_edges, rel_tol * 0.05, 0.0)?;
    let delta = (coarse - fine).norm();
    let scale = fine.norm().max(1e-300);
    if delta > rel_tol * scale && delta > 1e-14 * (b - a) {
        return Err(Error::QuadratureNonConvergence {
            context: format!("oscillatory integral on [{a}, {b}]"),
            delta: delta / scale,
            tol: rel_tol,
        });
    }
    Ok(fine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Brute-force Simpson oracle on a uniform mesh.
    fn simpson_oracle<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, n: usize) -> C64 {
        let n = if n % 2 == 0 { n } else { n + 1 };
        let h = (b - a) / n as f64;
        let mut acc = f(a) + f(b);
        for k in 1..n {
            let w = if k % 2 == 1 { 4.0 } else { 2.0 };
            acc += f(a + k as f64 * h) * w;
        }
        acc * (h / 3.0)
    }

    #[test]
    fn zero_amplitude_gives_zero() {
        let ph = PhaseSpec::new(-3.0, 1.0, 0.75).unwrap();
        let v = oscillatory_integral(&ph, |_| C64::new(0.0, 0.0), 0.1, 5.0, 1e-10).unwrap();
        assert_eq!(v, C64::new(0.0, 0.0));
    }

    #[test]
    fn elementary_antiderivative_case() {
        // t = 0, R = 1, a == 1 on [0,1]: integral is (e^i - 1)/i
        let ph = PhaseSpec::new(0.0, 1.0, 1.0).unwrap();
        let v = oscillatory_integral(&ph, |_| C64::new(1.0, 0.0), 0.0, 1.0, 1e-10).unwrap();
        let exact = (C64::new(0.0, 1.0).exp() - 1.0) / C64::new(0.0, 1.0);
        assert!((v - exact).norm() < 1e-10);
    }

    #[test]
    fn gaussian_amplitude_matches_dense_simpson() {
        // t = -5, R = 2, alpha = 1: stationary point at 0.2
        let ph = PhaseSpec::new(-5.0, 2.0, 1.0).unwrap();
        assert_relative_eq!(ph.stationary_point().unwrap(), 0.2, max_relative = 1e-12);
        let amp = |l: f64| C64::new((-(l - 1.0) * (l - 1.0)).exp(), 0.0);
        let v = oscillatory_integral(&ph, amp, 0.0, 4.0, 1e-8).unwrap();
        let oracle = simpson_oracle(
            |l| C64::new(0.0, ph.phase(l)).exp() * amp(l),
            0.0,
            4.0,
            1_000_000,
        );
        assert!((v - oracle).norm() < 1e-8 * oracle.norm().max(1e-3), "{v} vs {oracle}");
    }

    #[test]
    fn agrees_with_simpson_away_from_stationary_point() {
        // many oscillations; the interval excludes lambda_0 = (40/15)^2 ~ 7.1
        let ph = PhaseSpec::new(-10.0, 40.0, 0.75).unwrap();
        let amp = |l: f64| C64::new(1.0 / (1.0 + l * l), 0.2 * l.cos());
        let v = oscillatory_integral(&ph, amp, 0.5, 4.0, 1e-8).unwrap();
        let oracle = simpson_oracle(
            |l| C64::new(0.0, ph.phase(l)).exp() * amp(l),
            0.5,
            4.0,
            800_000,
        );
        assert!((v - oracle).norm() <= 1e-6 * oracle.norm().max(1e-6));
    }

    #[test]
    fn no_stationary_point_for_positive_time() {
        let ph = PhaseSpec::new(5.0, 2.0, 1.0).unwrap();
        assert!(ph.stationary_point().is_none());
    }
}
