//! One-dimensional quadrature for complex integrands: adaptive
//! Gauss–Kronrod 7–15, fixed Gauss–Legendre panels, and Wynn's epsilon
//! algorithm for accelerating alternating tail sums.

use crate::error::{Error, Result};
use crate::C64;

// QUADPACK 15-point Kronrod abscissae (positive half) and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_3,
    0.405_845_151_377_397_17,
    0.207_784_955_007_898_47,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_69,
    0.279_705_391_489_276_67,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// One 7–15 Gauss–Kronrod panel. Returns (kronrod value, error estimate,
/// integral of |f|).
pub fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let sum = f1 + f2;
        res_k += sum * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            // XGK odd indices coincide with the 7-point Gauss nodes
            res_g += sum * WG[j / 2];
        }
    }
    (
        res_k * half,
        ((res_k - res_g) * half).norm(),
        res_abs * half.abs(),
    )
}

/// Adaptive Gauss–Kronrod over [a, b] with optional interior breakpoints.
/// Splits the worst panel until the summed error estimate meets
/// `rel_tol`·|integral| + `abs_tol`.
pub fn integrate_adaptive<F: Fn(f64) -> C64>(
    f: &F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    rel_tol: f64,
    abs_tol: f64,
) -> Result<C64> {
    if !(b > a) {
        return Ok(C64::new(0.0, 0.0));
    }
    let mut edges: Vec<f64> = vec![a];
    for &p in breakpoints {
        if p > a && p < b {
            edges.push(p);
        }
    }
    edges.push(b);
    edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
    edges.dedup();

    let mut panels: Vec<(f64, f64, C64, f64)> = Vec::new();
    let mut total = C64::new(0.0, 0.0);
    let mut total_err = 0.0;
    let mut total_abs = 0.0;
    for w in edges.windows(2) {
        let (v, e, m) = gk15(f, w[0], w[1]);
        total += v;
        total_err += e;
        total_abs += m;
        panels.push((w[0], w[1], v, e));
    }

    // rounding of the summed absolute mass bounds the attainable accuracy
    let tol_for = |total: C64, total_abs: f64| {
        (rel_tol * total.norm() + abs_tol).max(5e-14 * total_abs)
    };
    let max_panels = 50_000 + 2 * panels.len();
    loop {
        if total_err <= tol_for(total, total_abs) || panels.len() >= max_panels {
            break;
        }
        // split the panel with the largest error estimate
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .unwrap();
        let (pa, pb, pv, pe) = panels.swap_remove(idx);
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            // interval exhausted at machine precision
            panels.push((pa, pb, pv, 0.0));
            total_err -= pe;
            continue;
        }
        let (v1, e1, _) = gk15(f, pa, mid);
        let (v2, e2, _) = gk15(f, mid, pb);
        total += v1 + v2 - pv;
        total_err += e1 + e2 - pe;
        panels.push((pa, mid, v1, e1));
        panels.push((mid, pb, v2, e2));
    }

    let tol = tol_for(total, total_abs);
    if total_err > 10.0 * tol.max(1e-300) {
        return Err(Error::QuadratureNonConvergence {
            context: format!("adaptive GK on [{a}, {b}]"),
            delta: total_err,
            tol,
        });
    }
    if !total.re.is_finite() || !total.im.is_finite() {
        return Err(Error::NonFinite(format!("integral on [{a}, {b}]")));
    }
    Ok(total)
}

// 16-point Gauss–Legendre (positive half).
const XGL16: [f64; 8] = [
    0.095_012_509_837_637_44,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_4,
    0.617_876_244_402_643_7,
    0.755_404_408_355_003_0,
    0.865_631_202_387_831_7,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];
const WGL16: [f64; 8] = [
    0.189_450_610_455_068_5,
    0.182_603_415_044_923_6,
    0.169_156_519_395_002_5,
    0.149_595_988_816_576_73,
    0.124_628_971_255_533_87,
    0.095_158_511_682_492_78,
    0.062_253_523_938_647_89,
    0.027_152_459_411_754_094,
];

/// Fixed 16-point Gauss–Legendre panel.
pub fn gl16<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> C64 {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..8 {
        let dx = half * XGL16[j];
        acc += (f(center - dx) + f(center + dx)) * WGL16[j];
    }
    acc * half
}

/// Wynn's epsilon algorithm on complex partial sums; returns the last entry
/// of the deepest even column of the epsilon table (odd columns are
/// auxiliary reciprocals, never limit estimates).
pub fn wynn_epsilon(partial_sums: &[C64]) -> C64 {
    let n = partial_sums.len();
    if n == 0 {
        return C64::new(0.0, 0.0);
    }
    if n < 3 {
        return *partial_sums.last().unwrap();
    }
    let mut prev: Vec<C64> = vec![C64::new(0.0, 0.0); n + 1]; // column k-1
    let mut curr: Vec<C64> = partial_sums.to_vec(); // column k (k = 0)
    let mut best = *partial_sums.last().unwrap();
    let mut k = 0usize;
    while curr.len() >= 2 {
        let m = curr.len() - 1;
        let mut next = Vec::with_capacity(m);
        for i in 0..m {
            let diff = curr[i + 1] - curr[i];
            if diff.norm() < 1e-280 {
                // converged column; the current entry is already the limit
                return if k % 2 == 0 { curr[i + 1] } else { best };
            }
            next.push(prev[i + 1] + 1.0 / diff);
        }
        prev = curr;
        curr = next;
        k += 1;
        if k % 2 == 0 {
            let v = *curr.last().unwrap();
            if v.re.is_finite() && v.im.is_finite() {
                best = v;
            }
        }
    }
    best
}

/// Sum an alternating sequence of panel integrals with epsilon acceleration,
/// stopping when two successive accelerated estimates agree to `rel_tol`
/// relative to `scale_hint` (or to the running magnitude if larger).
pub fn accelerated_tail_sum<G: FnMut(usize) -> C64>(
    mut panel: G,
    max_panels: usize,
    rel_tol: f64,
    scale_hint: f64,
) -> Result<C64> {
    let mut sums: Vec<C64> = Vec::with_capacity(max_panels);
    let mut acc = C64::new(0.0, 0.0);
    let mut last_est: Option<C64> = None;
    for k in 0..max_panels {
        acc += panel(k);
        sums.push(acc);
        if sums.len() >= 6 && sums.len() % 2 == 0 {
            let est = wynn_epsilon(&sums);
            if let Some(prev) = last_est {
                let scale = est.norm().max(scale_hint).max(1e-300);
                if (est - prev).norm() <= rel_tol * scale {
                    return Ok(est);
                }
            }
            last_est = Some(est);
        }
    }
    let est = wynn_epsilon(&sums);
    if let Some(prev) = last_est {
        let scale = est.norm().max(scale_hint).max(1e-300);
        let delta = (est - prev).norm();
        if delta <= 30.0 * rel_tol * scale {
            return Ok(est);
        }
        return Err(Error::QuadratureNonConvergence {
            context: "accelerated tail sum".into(),
            delta,
            tol: rel_tol * scale,
        });
    }
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_exact_on_single_panel() {
        let f = |x: f64| C64::new(x * x * x - 2.0 * x + 1.0, 0.0);
        let (v, _, _) = gk15(&f, 0.0, 2.0);
        assert_relative_eq!(v.re, 4.0 - 4.0 + 2.0, max_relative = 1e-14);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        // Lorentzian peak of width 1e-4 at x = 1
        let eps = 1e-4;
        let f = |x: f64| C64::new(eps / ((x - 1.0).powi(2) + eps * eps), 0.0);
        let v = integrate_adaptive(&f, 0.0, 2.0, &[1.0], 1e-10, 0.0).unwrap();
        // exact: atan((2-1)/eps) - atan(-1/eps) -> pi - 2 eps
        let exact = ((1.0f64 / eps).atan() - (-1.0f64 / eps).atan()) as f64;
        assert_relative_eq!(v.re, exact, max_relative = 1e-9);
    }

    #[test]
    fn complex_oscillatory_short() {
        // int_0^1 e^{i x} dx = (e^i - 1)/i
        let f = |x: f64| C64::new(0.0, x).exp();
        let v = integrate_adaptive(&f, 0.0, 1.0, &[], 1e-12, 0.0).unwrap();
        let exact = (C64::new(0.0, 1.0).exp() - 1.0) / C64::new(0.0, 1.0);
        assert!((v - exact).norm() < 1e-12);
    }

    #[test]
    fn epsilon_accelerates_alternating_series() {
        // sum (-1)^{k+1}/k = ln 2, terms decay like 1/k
        let mut acc = C64::new(0.0, 0.0);
        let mut sums = Vec::new();
        for k in 1..=20 {
            acc += C64::new(if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64, 0.0);
            sums.push(acc);
        }
        let est = wynn_epsilon(&sums);
        assert!((est.re - 2.0_f64.ln()).abs() < 1e-10, "{}", est.re);
    }

    #[test]
    fn accelerated_tail_sum_of_sine_integral() {
        // int_0^infty sin(x)/x dx = pi/2, panels between zeros of sin
        let est = accelerated_tail_sum(
            |k| {
                let a = k as f64 * PI;
                let b = a + PI;
                gl16(&|x: f64| C64::new(if x == 0.0 { 1.0 } else { x.sin() / x }, 0.0), a, b)
            },
            60,
            1e-12,
            1.0,
        )
        .unwrap();
        assert_relative_eq!(est.re, PI / 2.0, max_relative = 1e-11);
    }
}
