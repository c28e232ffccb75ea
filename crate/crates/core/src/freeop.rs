//! The free operator (−Δ)^α: its symbol, the propagator kernel of
//! e^{it(−Δ)^α} with optional homogeneous smoothing, and sup-norm decay.
//!
//! The defining integral is only conditionally convergent, so the quadrature
//! multiplies the integrand by e^{−ηρ²} and removes the regularizer by
//! Richardson extrapolation in η, with a second η-ladder as a consistency
//! check.

use crate::error::{Error, Result};
use crate::params::FracParams;
use crate::quad::integrate_adaptive;
use crate::resolvent::{KernelKind, KernelProfile};
use crate::special::{bessel_j, bessel_zero_approx};
use crate::C64;
use std::f64::consts::PI;

/// |ξ|^{2α}.
pub fn symbol(xi_norm: f64, params: &FracParams) -> f64 {
    xi_norm.powf(2.0 * params.alpha)
}

/// Propagator request: e^{it(−Δ)^α} smoothed by |ξ|^{γ−n} (γ = n means no
/// smoothing).
#[derive(Debug, Clone)]
pub struct PropagatorSpec {
    pub params: FracParams,
    pub t: f64,
    pub gamma: f64,
    pub r_samples: Vec<f64>,
}

impl PropagatorSpec {
    pub fn new(params: FracParams, t: f64, gamma: Option<f64>, r_samples: Vec<f64>) -> Result<Self> {
        if t == 0.0 || !t.is_finite() {
            return Err(Error::InvalidInput("propagator needs t != 0".into()));
        }
        let n = params.nf();
        let default = if params.alpha >= 1.0 { n } else { n * params.alpha };
        let gamma = gamma.unwrap_or(default);
        if params.alpha < 1.0 {
            if !(gamma > 0.0 && gamma <= n * params.alpha + 1e-12) {
                return Err(Error::InvalidInput(format!(
                    "for alpha < 1 the smoothing order must satisfy 0 < gamma <= n*alpha (got {gamma})"
                )));
            }
        } else if !(gamma > 0.0 && gamma <= n + 1e-12) {
            return Err(Error::InvalidInput(format!(
                "gamma must lie in (0, n] (got {gamma})"
            )));
        }
        if r_samples.iter().any(|&r| r < 0.0) {
            return Err(Error::InvalidInput("radii must be nonnegative".into()));
        }
        Ok(Self { params, t, gamma, r_samples })
    }

    /// Critical smoothing n(1−α), applied as the weight |ξ|^{γ−n} with γ = nα.
    pub fn smoothed(params: FracParams, t: f64, r_samples: Vec<f64>) -> Result<Self> {
        let gamma = params.nf() * params.alpha;
        Self::new(params, t, Some(gamma), r_samples)
    }
}

/// One regularized radial quadrature: the transform of
/// e^{itρ^{2α}} ρ^{γ−n} e^{−ηρ²} at radius r.
fn propagator_eta_level(spec: &PropagatorSpec, r: f64, eta: f64, rel_tol: f64) -> Result<C64> {
    let n = spec.params.nf();
    let alpha = spec.params.alpha;
    let nu = n / 2.0 - 1.0;
    let t = spec.t;
    // integrate until the Gaussian has fallen to ~2e-9; the truncated piece
    // is itself oscillatory and cancels well below that
    let rho_end = (20.0 / eta).sqrt();

    // oscillation-limited panel edges for the combined phase |t| ρ^{2α} + r ρ
    let phase_rate = |rho: f64| 2.0 * alpha * t.abs() * rho.powf(2.0 * alpha - 1.0) + r;
    let mut edges = Vec::new();
    let mut rho = 0.0_f64;
    let max_edges = 400_000;
    while rho < rho_end && edges.len() < max_edges {
        let rate = phase_rate((rho.max(1e-3 * rho_end)).min(rho_end)).max(1e-12);
        let step = (PI / rate).min(rho_end / 16.0).max(rho_end * 1e-7);
        rho += step;
        if rho < rho_end {
            edges.push(rho);
        }
    }
    // grading toward the ρ = 0 symbol singularity
    let mut p = rho_end;
    for _ in 0..40 {
        p *= 0.3;
        if p < 1e-13 {
            break;
        }
        edges.push(p);
    }

    if r == 0.0 {
        // no Bessel weight at the origin:
        // (2π)^{-n}|S^{n-1}| ∫ e^{itρ^{2α}} ρ^{γ-1} e^{-ηρ²} dρ
        let g = |rho: f64| -> C64 {
            if rho <= 0.0 {
                return C64::new(0.0, 0.0);
            }
            C64::new(-eta * rho * rho, t * rho.powf(2.0 * alpha)).exp()
                * rho.powf(spec.gamma - 1.0)
        };
        let v = integrate_adaptive(&g, 0.0, rho_end, &edges, rel_tol, 0.0)?;
        return Ok(v * crate::grid::sphere_area(spec.params.n) * (2.0 * PI).powf(-n));
    }

    // Bessel oscillation panels
    let mut k = 1usize;
    loop {
        let z = bessel_zero_approx(nu, k) / r;
        if z >= rho_end || k > 200_000 {
            break;
        }
        edges.push(z);
        k += 1;
    }

    let f = |rho: f64| -> C64 {
        if rho <= 0.0 {
            return C64::new(0.0, 0.0);
        }
        let phase = C64::new(-eta * rho * rho, t * rho.powf(2.0 * alpha)).exp();
        let weight = rho.powf(spec.gamma - n + n / 2.0);
        phase * weight * bessel_j(nu, r * rho).unwrap_or(f64::NAN)
    };
    let v = integrate_adaptive(&f, 0.0, rho_end, &edges, rel_tol, 0.0)?;
    Ok(v * (2.0 * PI).powf(-n / 2.0) * r.powf(1.0 - n / 2.0))
}

fn eta_base(spec: &PropagatorSpec, r: f64) -> f64 {
    let alpha = spec.params.alpha;
    let t = spec.t.abs();
    // cover the self-similar frequency scale and the stationary point of
    // t ρ^{2α} − r ρ
    let scale = 3.0 * t.powf(-1.0 / (2.0 * alpha));
    let stationary = if r > 0.0 && (2.0 * alpha - 1.0).abs() > 1e-9 {
        (r / (2.0 * alpha * t)).powf(1.0 / (2.0 * alpha - 1.0))
    } else {
        0.0
    };
    let cover = scale.max(1.8 * stationary).max(1e-3);
    0.02 / (cover * cover)
}

/// Radial profile of the (optionally smoothed) free propagator kernel.
/// Two Richardson ladders (η₀, η₀/4) and (η₀/2, η₀/8) must agree to 1e-4
/// relative at every sample.
pub fn free_propagator_kernel(spec: &PropagatorSpec) -> Result<KernelProfile> {
    let rel_tol = 1e-9;
    let mut values = Vec::with_capacity(spec.r_samples.len());
    let mut profile_scale = 0.0_f64;
    let mut worst = 0.0_f64;
    for &r in &spec.r_samples {
        let eta0 = eta_base(spec, r);
        let k0 = propagator_eta_level(spec, r, eta0, rel_tol)?;
        let k1 = propagator_eta_level(spec, r, eta0 / 4.0, rel_tol)?;
        let kh0 = propagator_eta_level(spec, r, eta0 / 2.0, rel_tol)?;
        let kh1 = propagator_eta_level(spec, r, eta0 / 8.0, rel_tol)?;
        let e1 = (k1 * 4.0 - k0) / 3.0;
        let e2 = (kh1 * 4.0 - kh0) / 3.0;
        values.push(e2);
        profile_scale = profile_scale.max(e2.norm());
        worst = worst.max((e1 - e2).norm());
    }
    if worst > 1e-4 * profile_scale.max(1e-300) {
        return Err(Error::ExtrapolationDisagreement {
            context: format!(
                "propagator regularizer ladders (t={}, alpha={})",
                spec.t, spec.params.alpha
            ),
            disagreement: worst / profile_scale,
            tol: 1e-4,
        });
    }
    Ok(KernelProfile {
        radii: spec.r_samples.clone(),
        values,
        params: spec.params,
        lambda: None,
        kind: KernelKind::Propagator,
    })
}

/// max_r |kernel| over the sampled profile.
pub fn propagator_sup_norm(spec: &PropagatorSpec) -> Result<f64> {
    let profile = free_propagator_kernel(spec)?;
    Ok(profile.values.iter().map(|v| v.norm()).fold(0.0, f64::max))
}

/// Sup norms over a t-window, radii rescaled self-similarly
/// (r ∈ [0, cover·t^{1/(2α)}]).
pub fn sup_norm_sweep(
    params: FracParams,
    gamma: Option<f64>,
    t_list: &[f64],
    samples_per_t: usize,
    cover: f64,
) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::with_capacity(t_list.len());
    for &t in t_list {
        let rmax = cover * t.abs().powf(1.0 / (2.0 * params.alpha));
        let radii: Vec<f64> = (0..samples_per_t)
            .map(|k| rmax * k as f64 / (samples_per_t as f64 - 1.0))
            .collect();
        let spec = PropagatorSpec::new(params, t, gamma, radii)?;
        out.push((t, propagator_sup_norm(&spec)?));
    }
    Ok(out)
}
