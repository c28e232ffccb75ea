//! Radial Fourier transforms in R^n: maps a radial symbol g(|ξ|) to
//! (2π)^{-n} ∫ g(|ξ|) e^{ix·ξ} dξ evaluated at |x| = r, reduced to the
//! 1-D Bessel-weighted integral
//!     (2π)^{-n/2} r^{1-n/2} ∫_0^∞ g(ρ) J_{n/2-1}(rρ) ρ^{n/2} dρ.
//!
//! The head of the integral is handled by adaptive Gauss–Kronrod (with
//! caller-supplied breakpoints for peaks and kinks); the conditionally
//! convergent tail is summed panel-by-panel between Bessel zeros and
//! accelerated with Wynn's epsilon algorithm. The amplitude g must be
//! non-oscillatory and algebraically decaying for the tail treatment.

use crate::error::Result;
use crate::quad::{accelerated_tail_sum, gl16, integrate_adaptive};
use crate::special::{bessel_j, bessel_zero_approx};
use crate::C64;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct RadialFourierOpts {
    /// End of the adaptively integrated head interval in ρ.
    pub head_end: f64,
    /// Extra breakpoints inside the head (peaks, support edges).
    pub breakpoints: Vec<f64>,
    pub rel_tol: f64,
    /// Magnitude scale used to stop the tail acceleration.
    pub scale_hint: f64,
    pub max_tail_panels: usize,
}

impl Default for RadialFourierOpts {
    fn default() -> Self {
        Self {
            head_end: 8.0,
            breakpoints: Vec::new(),
            rel_tol: 1e-10,
            scale_hint: 0.0,
            max_tail_panels: 300,
        }
    }
}

/// Radial Fourier transform of g at radius r > 0 in dimension n.
pub fn radial_fourier<F: Fn(f64) -> C64>(
    n: usize,
    g: F,
    r: f64,
    opts: &RadialFourierOpts,
) -> Result<C64> {
    let nf = n as f64;
    let nu = nf / 2.0 - 1.0;
    let prefactor = (2.0 * PI).powf(-nf / 2.0) * r.powf(1.0 - nf / 2.0);

    let integrand = |rho: f64| -> C64 {
        if rho <= 0.0 {
            return C64::new(0.0, 0.0);
        }
        g(rho) * rho.powf(nf / 2.0) * bessel_j(nu, r * rho).unwrap_or(f64::NAN)
    };

    // head: [0, head_end], with Bessel oscillation panels when r*head_end is large
    let mut bk = opts.breakpoints.clone();
    // endpoint grading towards rho = 0 for integrable symbol singularities
    let mut p = opts.head_end;
    for _ in 0..40 {
        p *= 0.35;
        if p < 1e-14 {
            break;
        }
        bk.push(p);
    }
    let mut k = 1;
    loop {
        let z = bessel_zero_approx(nu, k) / r;
        if z >= opts.head_end {
            break;
        }
        bk.push(z);
        k += 1;
        if k > 100_000 {
            break;
        }
    }
    let head = integrate_adaptive(&integrand, 0.0, opts.head_end, &bk, opts.rel_tol, 0.0)?;

    // tail: panels between consecutive Bessel zeros, epsilon-accelerated.
    // work in u = r*rho so the zeros are the universal j_{nu,k}.
    let u0 = r * opts.head_end;
    let mut k0 = 1usize;
    while bessel_zero_approx(nu, k0) <= u0 {
        k0 += 1;
    }
    let tail_integrand = |u: f64| -> C64 {
        let rho = u / r;
        g(rho) * rho.powf(nf / 2.0) * bessel_j(nu, u).unwrap_or(f64::NAN) / r
    };
    // the stretch before the first usable zero can span decades for small r
    let first_zero = bessel_zero_approx(nu, k0);
    let mut pre_bk = Vec::new();
    let mut q = u0.max(1e-300);
    while q < first_zero {
        q *= 3.0;
        if q < first_zero {
            pre_bk.push(q);
        }
    }
    let pre = integrate_adaptive(&tail_integrand, u0, first_zero, &pre_bk, opts.rel_tol, 0.0)?;

    let scale = opts.scale_hint.max(head.norm()).max(pre.norm());
    let tail = accelerated_tail_sum(
        |k| {
            let a = bessel_zero_approx(nu, k0 + k);
            let b = bessel_zero_approx(nu, k0 + k + 1);
            let mid = 0.5 * (a + b);
            gl16(&tail_integrand, a, mid) + gl16(&tail_integrand, mid, b)
        },
        opts.max_tail_panels,
        opts.rel_tol,
        scale / prefactor.abs().max(1e-300),
    )?;

    Ok((head + pre + tail) * prefactor)
}

/// Radial Fourier transform of a compactly supported symbol: the ρ-integral
/// runs over [support.0, support.1] only.
pub fn radial_fourier_finite<F: Fn(f64) -> C64>(
    n: usize,
    g: F,
    r: f64,
    support: (f64, f64),
    breakpoints: &[f64],
    rel_tol: f64,
) -> Result<C64> {
    let nf = n as f64;
    let nu = nf / 2.0 - 1.0;
    let prefactor = (2.0 * PI).powf(-nf / 2.0) * r.powf(1.0 - nf / 2.0);
    let integrand = |rho: f64| -> C64 {
        if rho <= 0.0 {
            return C64::new(0.0, 0.0);
        }
        g(rho) * rho.powf(nf / 2.0) * bessel_j(nu, r * rho).unwrap_or(f64::NAN)
    };
    let (a, b) = support;
    let mut bk = breakpoints.to_vec();
    if a <= 0.0 {
        let mut p = b;
        for _ in 0..40 {
            p *= 0.35;
            if p < 1e-14 {
                break;
            }
            bk.push(p);
        }
    }
    let mut k = 1;
    loop {
        let z = bessel_zero_approx(nu, k) / r;
        if z >= b {
            break;
        }
        if z > a {
            bk.push(z);
        }
        k += 1;
        if k > 200_000 {
            break;
        }
    }
    let v = integrate_adaptive(&integrand, a.max(0.0), b, &bk, rel_tol, 0.0)?;
    Ok(v * prefactor)
}

/// Transform value at r = 0 (no Bessel weight): (2π)^{-n}|S^{n-1}| ∫ g ρ^{n-1} dρ.
/// Only meaningful when the symbol integral converges absolutely; the caller
/// supplies the upper truncation.
pub fn radial_fourier_origin<F: Fn(f64) -> C64>(
    n: usize,
    g: F,
    rho_max: f64,
    breakpoints: &[f64],
    rel_tol: f64,
) -> Result<C64> {
    let nf = n as f64;
    let area = crate::grid::sphere_area(n);
    let integrand = |rho: f64| g(rho) * rho.powf(nf - 1.0);
    let v = integrate_adaptive(&integrand, 0.0, rho_max, breakpoints, rel_tol, 0.0)?;
    Ok(v * area * (2.0 * PI).powf(-nf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;
    use approx::assert_relative_eq;

    /// Gaussian closed form: symbol e^{-ρ²/2} in R³ transforms to
    /// (2π)^{-3/2) e^{-r²/2}.
    #[test]
    fn gaussian_closed_form_3d() {
        let opts = RadialFourierOpts {
            head_end: 12.0,
            rel_tol: 1e-11,
            ..Default::default()
        };
        for &r in &[0.05, 0.3, 1.0, 2.5] {
            let v = radial_fourier(3, |rho| C64::new((-0.5 * rho * rho).exp(), 0.0), r, &opts)
                .unwrap();
            let exact = (2.0 * PI).powf(-1.5) * (-0.5 * r * r).exp();
            assert_relative_eq!(v.re, exact, max_relative = 1e-8);
            assert!(v.im.abs() < 1e-12);
        }
    }

    /// Riesz symbol ρ^{-2α} transforms to Γ(n/2-α)/(4^α π^{n/2} Γ(α)) r^{2α-n};
    /// exercises the slowly decaying accelerated tail.
    #[test]
    fn riesz_power_law_3d() {
        let alpha = 0.75_f64;
        let n = 3usize;
        let opts = RadialFourierOpts {
            head_end: 6.0,
            rel_tol: 1e-11,
            ..Default::default()
        };
        let c_exact =
            gamma(n as f64 / 2.0 - alpha) / (4.0_f64.powf(alpha) * PI.powf(n as f64 / 2.0) * gamma(alpha));
        for &r in &[0.2, 1.0, 4.0] {
            let v = radial_fourier(n, |rho| C64::new(rho.powf(-2.0 * alpha), 0.0), r, &opts)
                .unwrap();
            let exact = c_exact * r.powf(2.0 * alpha - n as f64);
            assert_relative_eq!(v.re, exact, max_relative = 5e-8);
            assert!(v.im.abs() < 1e-10 * exact.abs());
        }
    }

    /// 2-D case against the closed-form Gaussian.
    #[test]
    fn gaussian_closed_form_2d() {
        let opts = RadialFourierOpts {
            head_end: 12.0,
            rel_tol: 1e-11,
            ..Default::default()
        };
        let a = 0.8;
        for &r in &[0.1, 1.2, 3.0] {
            let v = radial_fourier(2, |rho| C64::new((-a * rho * rho).exp(), 0.0), r, &opts)
                .unwrap();
            // (2π)^{-2} * (π/a) e^{-r²/(4a)}
            let exact = (2.0 * PI).powf(-2.0) * PI / a * (-r * r / (4.0 * a)).exp();
            assert_relative_eq!(v.re, exact, max_relative = 1e-8);
        }
    }

    #[test]
    fn origin_value_matches_small_r_limit() {
        let g = |rho: f64| C64::new((-rho * rho).exp(), 0.0);
        let v0 = radial_fourier_origin(3, g, 10.0, &[], 1e-12).unwrap();
        let opts = RadialFourierOpts {
            head_end: 10.0,
            rel_tol: 1e-11,
            ..Default::default()
        };
        let v = radial_fourier(3, g, 1e-4, &opts).unwrap();
        assert_relative_eq!(v0.re, v.re, max_relative = 1e-6);
    }
}
