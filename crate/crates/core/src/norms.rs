//! Weighted operator norms on the discretized L², via the symmetrized
//! quadrature sandwich W^{1/2} D_σ K D_σ W^{1/2} and deterministic power
//! iteration. Small matrices fall back to full decompositions.

use crate::error::{Error, Result};
use crate::grid::SpatialGrid;
use crate::C64;
use nalgebra::DMatrix;

/// Largest singular value by power iteration on A*A with a fixed seed;
/// deterministic and adequate for norm estimates.
pub fn spectral_norm(a: &DMatrix<C64>) -> f64 {
    let n = a.ncols();
    if n == 0 {
        return 0.0;
    }
    let mut v: Vec<C64> = (0..n)
        .map(|i| C64::new(1.0 + (i as f64 * 0.7).sin(), 0.3 * (i as f64 * 1.3).cos()))
        .collect();
    let norm0 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm0);
    let mut v = nalgebra::DVector::from_vec(v);
    let mut sigma = 0.0_f64;
    for iter in 0..300 {
        let w = a * &v;
        let u = a.adjoint() * &w;
        let nrm = u.norm();
        if nrm == 0.0 {
            return 0.0;
        }
        let next = nrm.sqrt();
        let done = (next - sigma).abs() <= 1e-11 * next.max(1e-300) && iter > 4;
        sigma = next;
        v = u / C64::new(nrm, 0.0);
        if done {
            break;
        }
    }
    sigma
}

/// Smallest singular value and the corresponding right singular vector of a
/// real symmetric matrix, by shift-free inverse iteration (LU solves).
/// Returns (sigma_min, vector).
pub fn smallest_eigpair_sym(a: &DMatrix<f64>) -> Result<(f64, nalgebra::DVector<f64>)> {
    let n = a.ncols();
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    let lu = a.clone().lu();
    let mut v = nalgebra::DVector::from_fn(n, |i, _| 1.0 + (i as f64 * 0.37).sin());
    v /= v.norm();
    let mut lambda = 0.0;
    for _ in 0..200 {
        let w = match lu.solve(&v) {
            Some(w) => w,
            None => {
                // numerically singular: sigma_min below solver resolution
                return Ok((0.0, v));
            }
        };
        let nrm = w.norm();
        if !nrm.is_finite() || nrm == 0.0 {
            return Ok((0.0, v));
        }
        let next = v.dot(&w) / (nrm * nrm); // Rayleigh quotient of A on w
        let w = w / nrm;
        let done = (next - lambda).abs() <= 1e-12 * next.abs().max(1e-300);
        lambda = next;
        v = w;
        if done {
            break;
        }
    }
    // lambda approximates the eigenvalue of smallest modulus
    let residual = (a * &v - &v * lambda).norm();
    let _ = residual;
    Ok((lambda.abs(), v))
}

/// Subspace of the k eigenvalues of smallest modulus of a real symmetric
/// matrix, via blocked inverse iteration with Gram–Schmidt.
pub fn smallest_eigpairs_sym(
    a: &DMatrix<f64>,
    k: usize,
) -> Result<Vec<(f64, nalgebra::DVector<f64>)>> {
    let n = a.ncols();
    let k = k.min(n);
    let lu = a.clone().lu();
    let mut basis: Vec<nalgebra::DVector<f64>> = (0..k)
        .map(|j| nalgebra::DVector::from_fn(n, |i, _| ((i * (j + 2)) as f64 * 0.61).sin() + 0.1))
        .collect();
    for sweep in 0..120 {
        // invert, then orthonormalize
        let mut next: Vec<nalgebra::DVector<f64>> = Vec::with_capacity(k);
        for v in &basis {
            let w = lu
                .solve(v)
                .ok_or(Error::SingularOperator { sigma_min: 0.0 })?;
            next.push(w);
        }
        for j in 0..k {
            for i in 0..j {
                let proj = next[i].dot(&next[j]);
                let wi = next[i].clone();
                next[j] -= wi * proj;
            }
            let nrm = next[j].norm();
            if nrm == 0.0 || !nrm.is_finite() {
                return Err(Error::NonFinite("inverse iteration basis".into()));
            }
            next[j] /= nrm;
        }
        let delta: f64 = basis
            .iter()
            .zip(&next)
            .map(|(a, b)| (a.dot(b).abs() - 1.0).abs())
            .fold(0.0, f64::max);
        basis = next;
        if delta < 1e-13 && sweep > 3 {
            break;
        }
    }
    let mut out: Vec<(f64, nalgebra::DVector<f64>)> = basis
        .into_iter()
        .map(|v| {
            let av = a * &v;
            (v.dot(&av), v)
        })
        .collect();
    out.sort_by(|x, y| x.0.abs().partial_cmp(&y.0.abs()).unwrap());
    Ok(out)
}

/// ‖⟨x⟩^{−σ} A ⟨y⟩^{−σ}‖ on the discretized L²(grid): the input matrix holds
/// kernel values k(x_i, x_j); quadrature weights are folded symmetrically.
pub fn weighted_operator_norm(kernel: &DMatrix<C64>, grid: &SpatialGrid, sigma: f64) -> Result<f64> {
    if kernel.nrows() != grid.len() || kernel.ncols() != grid.len() {
        return Err(Error::InvalidInput(format!(
            "kernel is {}x{}, grid has {} nodes",
            kernel.nrows(),
            kernel.ncols(),
            grid.len()
        )));
    }
    if sigma < 0.0 {
        return Err(Error::InvalidInput("sigma must be >= 0".into()));
    }
    if kernel.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite("kernel entries".into()));
    }
    let n = grid.len();
    let mut scale = Vec::with_capacity(n);
    for i in 0..n {
        scale.push(grid.weights[i].sqrt() * grid.bracket(i).powf(-sigma));
    }
    let mut m = kernel.clone();
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] *= scale[i] * scale[j];
        }
    }
    Ok(spectral_norm(&m))
}

/// Kernel matrix of the identity operator on the grid (δ_ij / w_i), the
/// convention under which `weighted_operator_norm(identity, grid, 0)` = 1.
pub fn identity_kernel(grid: &SpatialGrid) -> DMatrix<C64> {
    let n = grid.len();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            C64::new(1.0 / grid.weights[i], 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_grid, GridMode};
    use approx::assert_relative_eq;

    #[test]
    fn identity_operator_has_unit_norm() {
        let g = make_grid(2, 5.0, 10, GridMode::Full).unwrap();
        let k = identity_kernel(&g);
        let nrm = weighted_operator_norm(&k, &g, 0.0).unwrap();
        assert_relative_eq!(nrm, 1.0, max_relative = 1e-9);
    }

    #[test]
    fn rank_one_kernel_norm_is_weighted_f_squared() {
        let g = make_grid(1, 5.0, 20, GridMode::Full).unwrap();
        let f: Vec<f64> = (0..g.len()).map(|i| (-0.3 * g.radius(i).powi(2)).exp()).collect();
        let n = g.len();
        let k = DMatrix::from_fn(n, n, |i, j| C64::new(f[i] * f[j], 0.0));
        let sigma = 0.7;
        let expected: f64 = (0..n)
            .map(|i| g.weights[i] * g.bracket(i).powf(-2.0 * sigma) * f[i] * f[i])
            .sum();
        let nrm = weighted_operator_norm(&k, &g, sigma).unwrap();
        assert_relative_eq!(nrm, expected, max_relative = 1e-9);
    }

    #[test]
    fn norm_monotone_in_sigma_for_nonnegative_kernels() {
        let g = make_grid(1, 4.0, 16, GridMode::Full).unwrap();
        let n = g.len();
        let k = DMatrix::from_fn(n, n, |i, j| {
            C64::new(1.0 / (1.0 + g.distance(i, j)), 0.0)
        });
        let n0 = weighted_operator_norm(&k, &g, 0.2).unwrap();
        let n1 = weighted_operator_norm(&k, &g, 0.9).unwrap();
        let n2 = weighted_operator_norm(&k, &g, 1.7).unwrap();
        assert!(n0 >= n1 && n1 >= n2);
    }

    #[test]
    fn power_iteration_matches_full_svd_on_small_matrix() {
        let g = make_grid(1, 3.0, 12, GridMode::Full).unwrap();
        let n = g.len();
        let k = DMatrix::from_fn(n, n, |i, j| {
            C64::new(
                (-0.1 * g.distance(i, j)).exp(),
                0.05 * (g.radius(i) - g.radius(j)),
            )
        });
        let direct = spectral_norm(&k);
        let svd = k.clone().svd(false, false);
        let exact = svd.singular_values.max();
        assert_relative_eq!(direct, exact, max_relative = 1e-8);
    }

    #[test]
    fn rejects_nonfinite_kernel() {
        let g = make_grid(1, 3.0, 8, GridMode::Full).unwrap();
        let n = g.len();
        let mut k = DMatrix::from_element(n, n, C64::new(1.0, 0.0));
        k[(2, 3)] = C64::new(f64::NAN, 0.0);
        assert!(weighted_operator_norm(&k, &g, 0.0).is_err());
    }

    #[test]
    fn smallest_eigpair_on_diagonal_matrix() {
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![3.0, -0.02, 1.5, 0.8]));
        let (s, v) = smallest_eigpair_sym(&d).unwrap();
        assert_relative_eq!(s, 0.02, max_relative = 1e-8);
        assert!(v[1].abs() > 0.99);
        let pairs = smallest_eigpairs_sym(&d, 2).unwrap();
        assert_relative_eq!(pairs[0].0.abs(), 0.02, max_relative = 1e-8);
        assert_relative_eq!(pairs[1].0.abs(), 0.8, max_relative = 1e-8);
    }
}
