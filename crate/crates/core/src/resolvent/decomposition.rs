//! The three-piece split of the symbol 1/(|ξ|^{2α} − z^{2α}) into center,
//! tail, and annulus parts, the holomorphic annulus correction J(z, ζ), and
//! the kernel assembly that Fourier-transforms each piece. The assembly is
//! the second, independent route to the free resolvent kernel (the first is
//! direct ε-regularized quadrature).

use crate::cutoff::CutoffSpec;
use crate::error::{Error, Result};
use crate::hankel::{radial_fourier, radial_fourier_finite, RadialFourierOpts};
use crate::params::FracParams;
use crate::special::hankel1;
use crate::C64;
use std::f64::consts::PI;

/// Generalized binomial coefficient C(2α, k).
fn binom_2alpha(alpha: f64, k: usize) -> f64 {
    let mut num = 1.0;
    for j in 0..k {
        num *= 2.0 * alpha - j as f64;
    }
    let mut fact = 1.0;
    for j in 1..=k {
        fact *= j as f64;
    }
    num / fact
}

/// J(z, ζ) = [α(ζ²−1) − (ζ^{2α}−1)] / [α z^{2α} (ζ^{2α}−1)(ζ²−1)].
/// The ζ = 1 singularity is removable; near it the numerator and denominator
/// are evaluated as Taylor quotients with the w² factor cancelled.
pub fn annulus_correction(alpha: f64, z: C64, zeta: C64) -> C64 {
    let z2a = z.powf(2.0 * alpha);
    let w = zeta - 1.0;
    if w.norm() < 0.25 {
        // numerator / w^2 = 2α(1−α) − Σ_{k≥3} C(2α,k) w^{k−2}
        let mut num = C64::new(2.0 * alpha * (1.0 - alpha), 0.0);
        let mut wpow = C64::new(1.0, 0.0);
        for k in 3..60 {
            wpow *= w;
            let term = binom_2alpha(alpha, k) * wpow;
            num -= term;
            if term.norm() < 1e-18 * num.norm().max(1e-30) {
                break;
            }
        }
        // (ζ^{2α}−1)/w = Σ_{k≥1} C(2α,k) w^{k−1}
        let mut series = C64::new(0.0, 0.0);
        let mut wpow = C64::new(1.0, 0.0);
        for k in 1..60 {
            let term = binom_2alpha(alpha, k) * wpow;
            series += term;
            if k > 3 && term.norm() < 1e-18 * series.norm().max(1e-30) {
                break;
            }
            wpow *= w;
        }
        let den = z2a * alpha * series * (w + 2.0);
        num / den
    } else {
        let zeta2 = zeta * zeta;
        let zeta2a = zeta.powf(2.0 * alpha);
        let num = alpha * (zeta2 - 1.0) - (zeta2a - 1.0);
        let den = alpha * z2a * (zeta2a - 1.0) * (zeta2 - 1.0);
        num / den
    }
}

/// Limit of J(z, ζ) as ζ → 1: (1−α)/(2α z^{2α}).
pub fn annulus_correction_limit(alpha: f64, z: C64) -> C64 {
    C64::new(1.0 - alpha, 0.0) / (2.0 * alpha * z.powf(2.0 * alpha))
}

/// Sampled decomposition h_ctr + h_tail + h_ann of the symbol, with the
/// annulus correction J(z, |ξ|/z) alongside.
#[derive(Debug, Clone)]
pub struct SymbolDecomposition {
    pub xi: Vec<f64>,
    pub h_ctr: Vec<C64>,
    pub h_tail: Vec<C64>,
    pub h_ann: Vec<C64>,
    pub j_ann: Vec<C64>,
}

/// Evaluate the decomposition at |z| = 1, 0 < arg z < π/(2α). The three
/// cutoff factors are built so they sum to one exactly, making the partition
/// identity hold at every sample to rounding.
pub fn symbol_decomposition(
    alpha: f64,
    z: C64,
    cutoff: &CutoffSpec,
    xi_samples: &[f64],
) -> Result<SymbolDecomposition> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidInput("alpha must be positive".into()));
    }
    let arg = z.arg();
    if !(arg > 0.0 && arg < PI / (2.0 * alpha)) {
        return Err(Error::InvalidInput(format!(
            "need 0 < arg z < pi/(2 alpha), got arg z = {arg}"
        )));
    }
    let z2a = z.powf(2.0 * alpha);
    let mut out = SymbolDecomposition {
        xi: xi_samples.to_vec(),
        h_ctr: Vec::with_capacity(xi_samples.len()),
        h_tail: Vec::with_capacity(xi_samples.len()),
        h_ann: Vec::with_capacity(xi_samples.len()),
        j_ann: Vec::with_capacity(xi_samples.len()),
    };
    for &s in xi_samples {
        if s < 0.0 {
            return Err(Error::InvalidInput("xi samples must be >= 0".into()));
        }
        let denom = C64::new(s, 0.0).powf(2.0 * alpha) - z2a;
        let f_ctr = cutoff.chi(4.0 * s);
        let f_tail = 1.0 - cutoff.chi(s / 2.0);
        let f_ann = 1.0 - f_ctr - f_tail;
        out.h_ctr.push(f_ctr / denom);
        out.h_tail.push(f_tail / denom);
        out.h_ann.push(f_ann / denom);
        out.j_ann.push(annulus_correction(alpha, z, C64::new(s, 0.0) / z));
    }
    Ok(out)
}

// ---- kernel assembly at unit spectral scale ---------------------------------

const PIECE_TOL: f64 = 1e-10;

/// FT of h_ctr = χ(4|ξ|)/(|ξ|^{2α} − 1) (boundary value, real on its support).
pub fn ft_h_ctr(params: &FracParams, rho: f64) -> Result<C64> {
    let alpha = params.alpha;
    let cut = CutoffSpec::standard();
    radial_fourier_finite(
        params.n,
        |s| C64::new(cut.chi(4.0 * s) / (s.powf(2.0 * alpha) - 1.0), 0.0),
        rho,
        (0.0, 0.5),
        &[0.25],
        PIECE_TOL,
    )
}

/// FT of h_tail = (1 − χ(|ξ|/2))/(|ξ|^{2α} − 1), supported in |ξ| ≥ 2.
pub fn ft_h_tail(params: &FracParams, rho: f64) -> Result<C64> {
    let alpha = params.alpha;
    let cut = CutoffSpec::standard();
    let opts = RadialFourierOpts {
        head_end: 16.0,
        breakpoints: vec![2.0, 4.0, 8.0],
        rel_tol: PIECE_TOL,
        scale_hint: 0.0,
        max_tail_panels: 400,
    };
    radial_fourier(
        params.n,
        |s| {
            let f = 1.0 - cut.chi(s / 2.0);
            if f == 0.0 {
                C64::new(0.0, 0.0)
            } else {
                C64::new(f / (s.powf(2.0 * alpha) - 1.0), 0.0)
            }
        },
        rho,
        &opts,
    )
}

/// FT of the leading tail term 1/|ξ|^{2α} over all of R^n (the Riesz kernel),
/// computed by quadrature rather than the Gamma-function formula.
pub fn ft_riesz_term(params: &FracParams, rho: f64) -> Result<C64> {
    let alpha = params.alpha;
    if 2.0 * alpha >= params.nf() {
        return Err(Error::InvalidInput("riesz transform needs 2 alpha < n".into()));
    }
    let opts = RadialFourierOpts {
        head_end: 8.0,
        breakpoints: vec![],
        rel_tol: PIECE_TOL,
        scale_hint: 0.0,
        max_tail_panels: 400,
    };
    radial_fourier(params.n, |s| C64::new(s.powf(-2.0 * alpha), 0.0), rho, &opts)
}

/// FT of (χ(|ξ|/2) − χ(4|ξ|)) J(1, |ξ|) — the analytic annulus remainder.
fn ft_ann_j(params: &FracParams, rho: f64) -> Result<C64> {
    let alpha = params.alpha;
    let cut = CutoffSpec::standard();
    let z = C64::new(1.0, 0.0);
    radial_fourier_finite(
        params.n,
        |s| {
            let f = cut.chi(s / 2.0) - cut.chi(4.0 * s);
            if f == 0.0 {
                return C64::new(0.0, 0.0);
            }
            annulus_correction(alpha, z, C64::new(s, 0.0)) * f
        },
        rho,
        (0.25, 4.0),
        &[0.5, 1.0, 2.0],
        PIECE_TOL,
    )
}

/// Closed form of the classical resolvent kernel (−Δ − 1 − i0)^{-1} at
/// distance ρ: (i/4)(2π)^{-(n-2)/2} ρ^{-(n-2)/2} H⁽¹⁾_{(n-2)/2}(ρ).
pub fn classical_resolvent_unit(n: usize, rho: f64) -> Result<C64> {
    let nu = (n as f64 - 2.0) / 2.0;
    let h = hankel1(nu, rho)?;
    Ok(C64::new(0.0, 0.25) * (2.0 * PI).powf(-nu) * rho.powf(-nu) * h)
}

/// FT of χ(4|ξ|)/(|ξ|² − 1): the small-frequency patch removed from the
/// classical resolvent inside the annulus algebra.
fn ft_cl_corr_center(params: &FracParams, rho: f64) -> Result<C64> {
    let cut = CutoffSpec::standard();
    radial_fourier_finite(
        params.n,
        |s| C64::new(cut.chi(4.0 * s) / (s * s - 1.0), 0.0),
        rho,
        (0.0, 0.5),
        &[0.25],
        PIECE_TOL,
    )
}

/// FT of (1 − χ(|ξ|/2))/(|ξ|² − 1): the large-frequency patch.
fn ft_cl_corr_tail(params: &FracParams, rho: f64) -> Result<C64> {
    let cut = CutoffSpec::standard();
    let opts = RadialFourierOpts {
        head_end: 16.0,
        breakpoints: vec![2.0, 4.0, 8.0],
        rel_tol: PIECE_TOL,
        scale_hint: 0.0,
        max_tail_panels: 400,
    };
    radial_fourier(
        params.n,
        |s| {
            let f = 1.0 - cut.chi(s / 2.0);
            if f == 0.0 {
                C64::new(0.0, 0.0)
            } else {
                C64::new(f / (s * s - 1.0), 0.0)
            }
        },
        rho,
        &opts,
    )
}

/// Unit-scale boundary-value kernel Φ(ρ) assembled from the decomposition:
/// R₀⁺(λ^{2α})(r) = λ^{n−2α} Φ(λr). Under the rescaling the annulus piece
/// carries (1/α)·(classical resolvent − its two patches).
pub fn unit_kernel_direct(params: &FracParams, rho: f64) -> Result<C64> {
    let alpha = params.alpha;
    let ctr = ft_h_ctr(params, rho)?;
    let tail = ft_h_tail(params, rho)?;
    let annj = ft_ann_j(params, rho)?;
    let cl = classical_resolvent_unit(params.n, rho)?;
    let c1 = ft_cl_corr_center(params, rho)?;
    let c2 = ft_cl_corr_tail(params, rho)?;
    Ok(ctr + tail + annj + (cl - c1 - c2) / alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn partition_of_unity_exact_at_samples() {
        let alpha = 0.75;
        let z = C64::from_polar(1.0, 0.3);
        let cut = CutoffSpec::standard();
        let xi: Vec<f64> = (0..300).map(|k| 0.02 * k as f64).collect();
        let dec = symbol_decomposition(alpha, z, &cut, &xi).unwrap();
        let z2a = z.powf(2.0 * alpha);
        for (i, &s) in dec.xi.iter().enumerate() {
            let total = dec.h_ctr[i] + dec.h_tail[i] + dec.h_ann[i];
            let exact = 1.0 / (C64::new(s, 0.0).powf(2.0 * alpha) - z2a);
            assert!(
                (total - exact).norm() <= 1e-14 * exact.norm(),
                "xi={s}: {total} vs {exact}"
            );
        }
    }

    #[test]
    fn supports_match_cutoff_arithmetic() {
        let alpha = 0.6;
        let z = C64::from_polar(1.0, 0.2);
        let cut = CutoffSpec::standard();
        let dec = symbol_decomposition(alpha, z, &cut, &[0.25, 1.0, 5.0]).unwrap();
        // at |xi| = 1/4: chi(1) = 1 carries everything into the center piece
        assert!(dec.h_tail[0].norm() == 0.0);
        assert!(dec.h_ann[0].norm() < 1e-15);
        assert!(dec.h_ctr[0].norm() > 0.0);
        // at |xi| = 1: pure annulus
        assert!(dec.h_ctr[1].norm() == 0.0);
        assert!(dec.h_tail[1].norm() == 0.0);
        // at |xi| = 5: pure tail
        assert!(dec.h_ctr[2].norm() == 0.0);
        assert!(dec.h_ann[2].norm() < 1e-15);
    }

    /// Taylor-quotient oracle: the direct formula at moderate w and the
    /// series agree, and the ζ → 1 limit matches (1−α)/(2αz^{2α}).
    #[test]
    fn annulus_correction_series_vs_direct() {
        let z = C64::from_polar(1.0, 0.15);
        for &alpha in &[0.6, 0.75, 1.25] {
            for &w in &[0.26_f64, 0.3, -0.3, 0.5] {
                let zeta = C64::new(1.0 + w, 0.0) / z * z; // keep complex type
                let direct = {
                    let zeta2 = zeta * zeta;
                    let zeta2a = zeta.powf(2.0 * alpha);
                    let num = alpha * (zeta2 - 1.0) - (zeta2a - 1.0);
                    let den = alpha * z.powf(2.0 * alpha) * (zeta2a - 1.0) * (zeta2 - 1.0);
                    num / den
                };
                let got = annulus_correction(alpha, z, zeta);
                assert!(
                    (got - direct).norm() <= 1e-11 * direct.norm(),
                    "alpha={alpha} w={w}: {got} vs {direct}"
                );
            }
            // removable singularity: series value near zero offset approaches the limit
            let near = annulus_correction(alpha, z, C64::new(1.0 + 1e-9, 0.0));
            let lim = annulus_correction_limit(alpha, z);
            assert!((near - lim).norm() <= 1e-7 * lim.norm().max(1e-12));
            // and the two evaluation routes agree just outside the series radius
            let w = 0.249;
            let series = annulus_correction(alpha, z, C64::new(1.0 + w, 0.0));
            let zeta = C64::new(1.0 + w, 0.0);
            let zeta2 = zeta * zeta;
            let zeta2a = zeta.powf(2.0 * alpha);
            let direct = (alpha * (zeta2 - 1.0) - (zeta2a - 1.0))
                / (alpha * z.powf(2.0 * alpha) * (zeta2a - 1.0) * (zeta2 - 1.0));
            assert!((series - direct).norm() <= 1e-9 * direct.norm());
        }
    }

    #[test]
    fn annulus_correction_vanishes_for_classical_order() {
        // alpha = 1 makes the annulus algebra exact: J = 0
        let z = C64::from_polar(1.0, 0.4);
        for &s in &[0.3, 0.9, 1.5, 3.0] {
            let j = annulus_correction(1.0, z, C64::new(s, 0.0) / z);
            assert!(j.norm() < 1e-13, "J({s}) = {j}");
        }
    }

    /// α = 1, n = 3: the assembled unit kernel must reproduce e^{iρ}/(4πρ)
    /// (the decomposition pieces cancel exactly against the patches).
    #[test]
    fn unit_kernel_classical_3d() {
        let params = FracParams::new(1.0, 3).unwrap();
        for &rho in &[0.05, 0.5, 2.0, 10.0] {
            let got = unit_kernel_direct(&params, rho).unwrap();
            let exact = C64::new(0.0, rho).exp() / (4.0 * PI * rho);
            assert!(
                (got - exact).norm() <= 1e-8 * exact.norm(),
                "rho={rho}: {got} vs {exact}"
            );
        }
    }

    /// α = 1, n = 1: unit kernel is i e^{iρ}/2.
    #[test]
    fn unit_kernel_classical_1d() {
        let params = FracParams::new(1.0, 1).unwrap();
        for &rho in &[0.3, 1.7, 6.0] {
            let got = unit_kernel_direct(&params, rho).unwrap();
            let exact = C64::new(0.0, 0.5) * C64::new(0.0, rho).exp();
            assert!(
                (got - exact).norm() <= 1e-8 * exact.norm(),
                "rho={rho}: {got} vs {exact}"
            );
        }
    }

    /// Classical resolvent closed form reduces correctly in n = 3.
    #[test]
    fn classical_unit_formula() {
        for &rho in &[0.2, 1.0, 5.0] {
            let v = classical_resolvent_unit(3, rho).unwrap();
            let exact = C64::new(0.0, rho).exp() / (4.0 * PI * rho);
            assert_relative_eq!(v.re, exact.re, max_relative = 1e-11);
            assert_relative_eq!(v.im, exact.im, max_relative = 1e-11);
        }
    }
}
