//! Spatial grids with quadrature weights: cell-centered full tensor grids on
//! [−extent, extent]^dim and radial grids carrying the angular measure
//! r^{n−1}|S^{n−1}|.

use crate::error::{Error, Result};
use crate::special::gamma;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridMode {
    Full,
    Radial,
}

/// Surface area of the unit sphere S^{n−1} in R^n.
pub fn sphere_area(n: usize) -> f64 {
    2.0 * PI.powf(n as f64 / 2.0) / gamma(n as f64 / 2.0)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpatialGrid {
    pub dim: usize,
    pub extent: f64,
    pub points_per_axis: usize,
    pub spacing: f64,
    pub mode: GridMode,
    /// Node coordinates: dim entries per node for full mode, radii for radial.
    pub nodes: Vec<Vec<f64>>,
    /// Quadrature weight per node (cell volume, with angular measure folded
    /// in for radial grids).
    pub weights: Vec<f64>,
}

/// Build a grid. Full mode places cell-centered nodes on each axis; radial
/// mode stores radii h/2, 3h/2, … with exact shell volumes as weights.
pub fn make_grid(dim: usize, extent: f64, points: usize, mode: GridMode) -> Result<SpatialGrid> {
    if !(1..=3).contains(&dim) {
        return Err(Error::InvalidInput(format!("dim must be 1..=3, got {dim}")));
    }
    if points < 8 || points % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "points must be even and >= 8, got {points}"
        )));
    }
    if !(extent > 0.0) {
        return Err(Error::InvalidInput("extent must be positive".into()));
    }
    if mode == GridMode::Full && dim == 3 && points > 64 {
        return Err(Error::InvalidInput(
            "full-tensor mode with dim = 3 is limited to 64 points per axis; use radial mode".into(),
        ));
    }
    let spacing = 2.0 * extent / points as f64;
    match mode {
        GridMode::Full => {
            let axis: Vec<f64> = (0..points)
                .map(|k| -extent + (k as f64 + 0.5) * spacing)
                .collect();
            let total = points.pow(dim as u32);
            let mut nodes = Vec::with_capacity(total);
            let mut idx = vec![0usize; dim];
            let w = spacing.powi(dim as i32);
            let mut weights = Vec::with_capacity(total);
            loop {
                nodes.push(idx.iter().map(|&k| axis[k]).collect::<Vec<f64>>());
                weights.push(w);
                // odometer increment
                let mut d = 0;
                loop {
                    idx[d] += 1;
                    if idx[d] < points {
                        break;
                    }
                    idx[d] = 0;
                    d += 1;
                    if d == dim {
                        return Ok(SpatialGrid {
                            dim,
                            extent,
                            points_per_axis: points,
                            spacing,
                            mode,
                            nodes,
                            weights,
                        });
                    }
                }
            }
        }
        GridMode::Radial => {
            let area = sphere_area(dim);
            let nf = dim as f64;
            let mut nodes = Vec::with_capacity(points);
            let mut weights = Vec::with_capacity(points);
            for k in 0..points {
                let r = (k as f64 + 0.5) * spacing;
                nodes.push(vec![r]);
                let lo = k as f64 * spacing;
                let hi = (k as f64 + 1.0) * spacing;
                // exact shell volume, so weights sum to the ball volume
                weights.push(area / nf * (hi.powf(nf) - lo.powf(nf)));
            }
            Ok(SpatialGrid {
                dim,
                extent,
                points_per_axis: points,
                spacing,
                mode,
                nodes,
                weights,
            })
        }
    }
}

impl SpatialGrid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// |x_i| for node i.
    pub fn radius(&self, i: usize) -> f64 {
        self.nodes[i].iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// |x_i − x_j|.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.nodes[i]
            .iter()
            .zip(&self.nodes[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// ⟨x_i⟩ = (1 + |x_i|²)^{1/2}.
    pub fn bracket(&self, i: usize) -> f64 {
        (1.0 + self.nodes[i].iter().map(|c| c * c).sum::<f64>()).sqrt()
    }

    /// Measure of the discretized domain. A radial grid of `points` shells of
    /// width `spacing` fills the ball of radius points·spacing = 2·extent.
    pub fn domain_measure(&self) -> f64 {
        match self.mode {
            GridMode::Full => (2.0 * self.extent).powi(self.dim as i32),
            GridMode::Radial => {
                let rmax = self.points_per_axis as f64 * self.spacing;
                sphere_area(self.dim) / self.dim as f64 * rmax.powf(self.dim as f64)
            }
        }
    }

    /// Outermost radius covered by the grid.
    pub fn max_radius(&self) -> f64 {
        match self.mode {
            GridMode::Full => self.extent * (self.dim as f64).sqrt(),
            GridMode::Radial => self.points_per_axis as f64 * self.spacing,
        }
    }

    /// Ball radius with the same volume as the quadrature cell at node i,
    /// used by the singular-kernel diagonal rule.
    pub fn cell_ball_radius(&self, i: usize) -> f64 {
        let nf = self.dim as f64;
        let unit_ball = sphere_area(self.dim) / nf;
        (self.weights[i] / unit_ball).powf(1.0 / nf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn spacing_and_node_count_1d() {
        let g = make_grid(1, 10.0, 16, GridMode::Full).unwrap();
        assert_relative_eq!(g.spacing, 1.25);
        assert_eq!(g.len(), 16);
    }

    #[test]
    fn tensor_weights_2d() {
        let g = make_grid(2, 10.0, 8, GridMode::Full).unwrap();
        assert_eq!(g.len(), 64);
        for &w in &g.weights {
            assert_relative_eq!(w, g.spacing * g.spacing, max_relative = 1e-14);
        }
    }

    /// Radial weights integrate r^{n−1}|S^{n−1}| exactly over the covered ball.
    #[test]
    fn radial_weights_match_ball_volume() {
        let g = make_grid(3, 20.0, 256, GridMode::Radial).unwrap();
        let total: f64 = g.weights.iter().sum();
        let exact = 4.0 / 3.0 * PI * g.max_radius().powi(3);
        assert_relative_eq!(total, exact, max_relative = 1e-12);
        // radii start at h/2 and increase
        assert_relative_eq!(g.nodes[0][0], g.spacing / 2.0);
        assert!(g.nodes.windows(2).all(|w| w[1][0] > w[0][0]));
        // away from the origin the shell volume approaches 4 pi r^2 h
        let k = 128;
        let r = g.nodes[k][0];
        assert_relative_eq!(g.weights[k], 4.0 * PI * r * r * g.spacing, max_relative = 1e-4);
    }

    #[test]
    fn full_tensor_weights_sum_to_measure() {
        for dim in 1..=2 {
            let g = make_grid(dim, 7.5, 12, GridMode::Full).unwrap();
            let total: f64 = g.weights.iter().sum();
            assert_relative_eq!(total, g.domain_measure(), max_relative = 1e-12);
        }
    }

    #[test]
    fn memory_guard_rejects_large_3d_tensor() {
        assert!(make_grid(3, 10.0, 66, GridMode::Full).is_err());
        assert!(make_grid(3, 10.0, 64, GridMode::Full).is_ok());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_grid(4, 10.0, 16, GridMode::Full).is_err());
        assert!(make_grid(2, 10.0, 7, GridMode::Full).is_err());
        assert!(make_grid(2, 10.0, 6, GridMode::Full).is_err());
        assert!(make_grid(2, -1.0, 16, GridMode::Full).is_err());
    }
}
