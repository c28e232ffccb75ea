//! Special functions: Bessel J_ν and Y_ν of real order, the gamma function,
//! and approximate Bessel zeros used to segment oscillatory quadrature.
//!
//! J_ν uses the ascending power series for x ≤ 12 and Steed's continued
//! fractions (CF1/CF2 with downward recurrence) beyond; the two branches are
//! cross-checked in the tests. Y is provided for the orders the kernels
//! actually need: ν = 0 and half-integers.

use crate::error::{Error, Result};
use crate::C64;
use std::f64::consts::PI;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SERIES_SWITCH: f64 = 12.0;
const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 10_000;

/// Lanczos approximation (g = 7, 9 coefficients), double accuracy.
pub fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = COEF[0];
    let t = x + G + 0.5;
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

fn bessel_j_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0 / gamma(nu + 1.0);
    let mut sum = term;
    for k in 1..200 {
        term *= -q / (k as f64 * (nu + k as f64));
        sum += term;
        if term.abs() < EPS * sum.abs().max(1e-290) {
            break;
        }
    }
    (0.5 * x).powf(nu) * sum
}

/// Steed's method: returns (J_ν, Y_ν, J'_ν, Y'_ν) for x ≥ 2, ν ≥ 0.
fn bessel_jy_steed(nu: f64, x: f64) -> Result<(f64, f64, f64, f64)> {
    if x < 2.0 || nu < 0.0 {
        return Err(Error::InvalidInput(format!(
            "steed branch needs x >= 2, nu >= 0 (got nu={nu}, x={x})"
        )));
    }
    let nl = ((nu - x + 1.5).max(0.0)) as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1 for J'/J
    let mut isign = 1.0_f64;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::QuadratureNonConvergence {
            context: format!("bessel CF1 nu={nu} x={x}"),
            delta: 0.0,
            tol: EPS,
        });
    }

    // downward recurrence to order xmu
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    // CF2 for (J' + iY')/(J + iY) at order xmu
    let a0 = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a0 * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut a = a0;
    converged = false;
    for i in 2..=MAXIT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        let temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::QuadratureNonConvergence {
            context: format!("bessel CF2 nu={nu} x={x}"),
            delta: 0.0,
            tol: EPS,
        });
    }
    let gam = (p - f) / q;
    let mut rjmu = (w / ((p - f) * gam + q)).sqrt();
    if rjl < 0.0 {
        rjmu = -rjmu;
    }
    let rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);
    let mut ry1 = xmu * xi * rymu - rymup;
    let mut rymu = rymu;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let fct = rjmu / rjl;
    let rj = rjl1 * fct;
    let rjp = rjp1 * fct;
    let ry = rymu;
    let ryp = nu * xi * rymu - ry1;
    Ok((rj, ry, rjp, ryp))
}

/// Bessel function of the first kind, real order ν ≥ −1/2, x ≥ 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if nu < -0.5 || x < 0.0 || !x.is_finite() {
        return Err(Error::InvalidInput(format!(
            "bessel_j requires nu >= -1/2 and x >= 0 (got nu={nu}, x={x})"
        )));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x <= SERIES_SWITCH {
        return Ok(bessel_j_series(nu, x));
    }
    if nu >= 0.0 {
        Ok(bessel_jy_steed(nu, x)?.0)
    } else {
        // J_{-mu} = J_mu cos(mu pi) - Y_mu sin(mu pi)
        let mu = -nu;
        let (j, y, _, _) = bessel_jy_steed(mu, x)?;
        Ok(j * (mu * PI).cos() - y * (mu * PI).sin())
    }
}

fn harmonic(k: usize) -> f64 {
    (1..=k).map(|i| 1.0 / i as f64).sum()
}

fn bessel_y0_series(x: f64) -> f64 {
    let j0 = bessel_j_series(0.0, x);
    let q = 0.25 * x * x;
    let mut term = 1.0; // (x^2/4)^k / (k!)^2 at k=0
    let mut sum = 0.0;
    for k in 1..200 {
        term *= q / (k as f64 * k as f64);
        let contrib = if k % 2 == 1 { term } else { -term } * harmonic(k);
        sum += contrib;
        if term.abs() * (harmonic(k) + 1.0) < EPS * sum.abs().max(1e-290) {
            break;
        }
    }
    (2.0 / PI) * (((0.5 * x).ln() + EULER_GAMMA) * j0 + sum)
}

fn is_half_integer(nu: f64) -> bool {
    let t = nu - 0.5;
    (t - t.round()).abs() < 1e-12 && t.round() >= -1.0
}

/// Bessel function of the second kind for the orders the kernels need:
/// half-integer ν ≥ −1/2 (closed forms plus upward recurrence) and ν = 0.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::InvalidInput(format!("bessel_y requires x > 0, got {x}")));
    }
    if is_half_integer(nu) {
        let amp = (2.0 / (PI * x)).sqrt();
        let mut m = (nu - 0.5).round() as i64; // nu = m + 1/2
        let mut ym1 = amp * x.sin(); // Y_{-1/2}
        let mut y0 = -amp * x.cos(); // Y_{1/2}
        if m == -1 {
            return Ok(ym1);
        }
        let mut order = 0.5;
        while m > 0 {
            let ynext = (2.0 * order / x) * y0 - ym1;
            ym1 = y0;
            y0 = ynext;
            order += 1.0;
            m -= 1;
        }
        return Ok(y0);
    }
    if nu == 0.0 {
        if x <= SERIES_SWITCH {
            return Ok(bessel_y0_series(x));
        }
        return Ok(bessel_jy_steed(0.0, x)?.1);
    }
    if nu > 0.0 && x > SERIES_SWITCH.max(nu) {
        return Ok(bessel_jy_steed(nu, x)?.1);
    }
    Err(Error::InvalidInput(format!(
        "bessel_y supports nu = 0 and half-integer orders (got nu={nu}, x={x})"
    )))
}

/// Outgoing Hankel function H⁽¹⁾_ν = J_ν + iY_ν.
pub fn hankel1(nu: f64, x: f64) -> Result<C64> {
    Ok(C64::new(bessel_j(nu, x)?, bessel_y(nu, x)?))
}

/// k-th positive zero of J_ν by McMahon's expansion; accurate enough to
/// serve as oscillation panel boundaries.
pub fn bessel_zero_approx(nu: f64, k: usize) -> f64 {
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_known_values() {
        assert_relative_eq!(gamma(0.5), PI.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(gamma(1.0), 1.0, max_relative = 1e-13);
        assert_relative_eq!(gamma(5.0), 24.0, max_relative = 1e-13);
        assert_relative_eq!(gamma(0.25) * gamma(0.75), PI / (PI / 4.0).sin(), max_relative = 1e-12);
    }

    #[test]
    fn j_at_zero() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(0.5, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j(1.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn j_half_at_pi_vanishes() {
        // J_{1/2}(x) = sqrt(2/(pi x)) sin x, so J_{1/2}(pi) = 0
        assert!(bessel_j(0.5, PI).unwrap().abs() < 1e-14);
    }

    #[test]
    fn j1_small_argument() {
        // J_1(x) = x/2 - x^3/16 + O(x^5)
        for &x in &[1e-4, 1e-3, 1e-2] {
            let j1 = bessel_j(1.0, x).unwrap();
            assert!((j1 - x / 2.0).abs() < 0.2 * x.powi(3));
            assert_relative_eq!(j1, x / 2.0 - x.powi(3) / 16.0, max_relative = 1e-9);
        }
    }

    /// Half-integer closed forms are independent oracles on both branches.
    #[test]
    fn half_integer_closed_forms() {
        for &x in &[0.1, 0.5, 1.0, 3.0, 7.0, 11.9, 12.1, 30.0, 100.0, 500.0, 1000.0] {
            let amp = (2.0 / (PI * x)).sqrt();
            let envelope = amp.max(1e-3);
            let jh = bessel_j(0.5, x).unwrap();
            assert!(
                (jh - amp * x.sin()).abs() <= 1e-11 * envelope,
                "J_1/2({x}): {jh} vs {}",
                amp * x.sin()
            );
            let j3h = bessel_j(1.5, x).unwrap();
            let exact = amp * (x.sin() / x - x.cos());
            assert!((j3h - exact).abs() <= 1e-11 * envelope);
            let jmh = bessel_j(-0.5, x).unwrap();
            assert!((jmh - amp * x.cos()).abs() <= 1e-10 * envelope);

            let yh = bessel_y(0.5, x).unwrap();
            assert!((yh + amp * x.cos()).abs() <= 1e-11 * envelope);
            let y3h = bessel_y(1.5, x).unwrap();
            let exact = amp * (-x.cos() / x - x.sin());
            assert!((y3h - exact).abs() <= 1e-11 * envelope);
        }
    }

    /// The series and Steed branches must agree where they overlap.
    #[test]
    fn branch_overlap_consistency() {
        for &nu in &[0.0, 0.3, 1.0, 1.5, 2.7] {
            for &x in &[10.0, 11.0, 12.0] {
                let series = bessel_j_series(nu, x);
                let steed = bessel_jy_steed(nu, x).unwrap().0;
                assert!(
                    (series - steed).abs() < 2e-11,
                    "nu={nu} x={x}: {series} vs {steed}"
                );
            }
        }
        for &x in &[10.0, 11.0, 12.0] {
            let series = bessel_y0_series(x);
            let steed = bessel_jy_steed(0.0, x).unwrap().1;
            assert!((series - steed).abs() < 2e-11);
        }
    }

    /// Wronskian J_{ν+1} Y_ν − J_ν Y_{ν+1} = 2/(πx) ties J and Y together.
    #[test]
    fn wronskian_identity() {
        for &x in &[15.0, 40.0, 200.0, 900.0] {
            let (j, y, jp, yp) = bessel_jy_steed(0.7, x).unwrap();
            let w = j * yp - jp * y;
            assert_relative_eq!(w, 2.0 / (PI * x), max_relative = 1e-10);
        }
    }

    #[test]
    fn zero_approx_brackets_sign_changes() {
        for &nu in &[0.0, 0.5, 1.5] {
            for k in 1..20 {
                let z = bessel_zero_approx(nu, k);
                let lo = bessel_j(nu, z - 0.3).unwrap();
                let hi = bessel_j(nu, z + 0.3).unwrap();
                assert!(lo * hi < 0.0, "nu={nu} k={k} zero approx {z}");
            }
        }
    }

    #[test]
    fn rejects_invalid_arguments() {
        assert!(bessel_j(-1.0, 1.0).is_err());
        assert!(bessel_j(0.0, -1.0).is_err());
        assert!(bessel_y(0.3, 1.0).is_err());
    }
}
