//! Pushforward of a line measure onto a sampled graph `t -> (t, X(t))`.
//!
//! The measure is discretized to one atom per time cell: atom `k` sits at
//! `(t_k, X(t_k))` and carries the base mass of `[t_k, t_{k+1})`, so the
//! weights partition the base measure exactly.

use super::{EmpiricalMeasure, MeasureOracle};
use crate::error::{argument, Result};
use crate::geom::Point;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct GraphMeasure {
    cloud: EmpiricalMeasure,
    cell: f64,
}

impl GraphMeasure {
    /// `times` are the left endpoints of consecutive cells of width `cell`;
    /// `values` the sampled graph heights; `weights` the base masses of the
    /// cells.
    pub fn from_samples(times: &[f64], values: &[f64], weights: &[f64], cell: f64) -> Result<Self> {
        if times.len() != values.len() || times.len() != weights.len() {
            return Err(argument("times, values and weights must have equal length"));
        }
        if !(cell > 0.0) {
            return Err(argument("cell width must be positive"));
        }
        let atoms: Vec<(Point, f64)> = times
            .iter()
            .zip(values)
            .zip(weights)
            .filter(|&(_, &w)| w > 0.0)
            .map(|((&t, &x), &w)| (Point::plane(t, x), w))
            .collect();
        if atoms.is_empty() {
            return Err(argument("graph measure has no mass"));
        }
        Ok(GraphMeasure { cloud: EmpiricalMeasure::from_atoms(atoms)?, cell })
    }

    pub fn cell(&self) -> f64 {
        self.cell
    }

    pub fn cloud(&self) -> &EmpiricalMeasure {
        &self.cloud
    }
}

impl MeasureOracle for GraphMeasure {
    fn ambient_dim(&self) -> usize {
        2
    }

    fn total_mass(&self) -> f64 {
        self.cloud.total_mass()
    }

    fn support_bounds(&self) -> (Point, Point) {
        self.cloud.support_bounds()
    }

    fn support_diameter(&self) -> f64 {
        self.cloud.support_diameter()
    }

    fn ball_mass(&self, center: &Point, radius: f64) -> Result<f64> {
        self.cloud.ball_mass(center, radius)
    }

    fn support_net(&self, mesh: f64) -> Result<Vec<Point>> {
        self.cloud.support_net(mesh)
    }
}
