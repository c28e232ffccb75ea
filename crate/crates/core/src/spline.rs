//! Cubic splines (not-a-knot boundary) on strictly increasing nodes,
//! real and complex.

use crate::error::{Error, Result};
use crate::C64;

/// Cubic spline through (x_i, y_i) with not-a-knot end conditions.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    m: Vec<f64>, // second derivatives at the nodes
}

impl CubicSpline {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 3 || y.len() != n {
            return Err(Error::InvalidInput("spline needs >= 3 matching nodes".into()));
        }
        if x.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidInput("spline nodes must be strictly increasing".into()));
        }
        let h = |i: usize| x[i + 1] - x[i];
        // interior continuity equations for the second derivatives m_1..m_{n-2}
        let mut sub = vec![0.0; n];
        let mut diag = vec![2.0; n];
        let mut sup = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        for i in 1..n - 1 {
            let h0 = h(i - 1);
            let h1 = h(i);
            sub[i] = h0 / (h0 + h1);
            sup[i] = h1 / (h0 + h1);
            rhs[i] = 6.0 / (h0 + h1) * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
        }
        let mut m = vec![0.0; n];
        if n == 3 {
            // single interior node: fall back to natural ends
            m[1] = rhs[1] / 2.0;
        } else {
            // not-a-knot: m_0 = m_1 (1 + h0/h1) - m_2 h0/h1, same mirrored at the right
            let r0 = h(0) / h(1);
            diag[1] += sub[1] * (1.0 + r0);
            sup[1] -= sub[1] * r0;
            let rn = h(n - 2) / h(n - 3);
            diag[n - 2] += sup[n - 2] * (1.0 + rn);
            sub[n - 2] -= sup[n - 2] * rn;

            // Thomas algorithm on rows 1..n-2
            let mut c = vec![0.0; n];
            let mut d = vec![0.0; n];
            c[1] = sup[1] / diag[1];
            d[1] = rhs[1] / diag[1];
            for i in 2..n - 1 {
                let denom = diag[i] - sub[i] * c[i - 1];
                c[i] = sup[i] / denom;
                d[i] = (rhs[i] - sub[i] * d[i - 1]) / denom;
            }
            for i in (1..n - 1).rev() {
                m[i] = d[i] - c[i] * m[i + 1];
            }
            m[0] = m[1] * (1.0 + r0) - m[2] * r0;
            m[n - 1] = m[n - 2] * (1.0 + rn) - m[n - 3] * rn;
        }
        Ok(Self { x, y, m })
    }

    fn segment(&self, xq: f64) -> usize {
        match self.x.binary_search_by(|v| v.partial_cmp(&xq).unwrap()) {
            Ok(i) => i.min(self.x.len() - 2),
            Err(0) => 0,
            Err(i) if i >= self.x.len() => self.x.len() - 2,
            Err(i) => i - 1,
        }
    }

    /// Evaluate; clamps to linear extension outside the node range.
    pub fn eval(&self, xq: f64) -> f64 {
        let i = self.segment(xq);
        let h = self.x[i + 1] - self.x[i];
        let a = (self.x[i + 1] - xq) / h;
        let b = (xq - self.x[i]) / h;
        a * self.y[i]
            + b * self.y[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.x[0], *self.x.last().unwrap())
    }
}

/// Complex-valued spline (independent splines for Re and Im).
#[derive(Debug, Clone)]
pub struct ComplexSpline {
    re: CubicSpline,
    im: CubicSpline,
}

impl ComplexSpline {
    pub fn new(x: Vec<f64>, y: &[C64]) -> Result<Self> {
        let re = CubicSpline::new(x.clone(), y.iter().map(|v| v.re).collect())?;
        let im = CubicSpline::new(x, y.iter().map(|v| v.im).collect())?;
        Ok(Self { re, im })
    }

    pub fn eval(&self, xq: f64) -> C64 {
        C64::new(self.re.eval(xq), self.im.eval(xq))
    }

    pub fn domain(&self) -> (f64, f64) {
        self.re.domain()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_smooth_function() {
        let x: Vec<f64> = (0..200).map(|i| i as f64 * 0.05).collect();
        let y: Vec<f64> = x.iter().map(|&t| (t).sin() * (-0.1 * t).exp()).collect();
        let s = CubicSpline::new(x, y).unwrap();
        for i in 0..400 {
            let t = 0.012 + i as f64 * 0.024;
            let exact = t.sin() * (-0.1 * t).exp();
            assert!((s.eval(t) - exact).abs() < 5e-7, "t={t} err={}", (s.eval(t) - exact).abs());
        }
    }

    #[test]
    fn interpolates_nodes_exactly() {
        let x = vec![0.0, 1.0, 2.5, 3.0, 4.2];
        let y = vec![1.0, -2.0, 0.5, 3.0, 1.5];
        let s = CubicSpline::new(x.clone(), y.clone()).unwrap();
        for (xi, yi) in x.iter().zip(&y) {
            assert!((s.eval(*xi) - yi).abs() < 1e-13);
        }
    }
}
