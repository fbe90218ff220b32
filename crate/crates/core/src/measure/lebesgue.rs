//! Lebesgue measure on `[0, 1]`.

use super::{check_mesh, check_radius, LineMeasure, MeasureOracle};
use crate::error::Result;
use crate::fmath;
use crate::geom::Point;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, Default)]
pub struct LebesgueUnit;

impl MeasureOracle for LebesgueUnit {
    fn ambient_dim(&self) -> usize {
        1
    }

    fn total_mass(&self) -> f64 {
        1.0
    }

    fn support_bounds(&self) -> (Point, Point) {
        (Point::line(0.0), Point::line(1.0))
    }

    fn support_diameter(&self) -> f64 {
        1.0
    }

    fn ball_mass(&self, center: &Point, radius: f64) -> Result<f64> {
        check_radius(radius)?;
        self.interval_mass(center.x() - radius, center.x() + radius)
    }

    fn support_net(&self, mesh: f64) -> Result<Vec<Point>> {
        check_mesh(mesh, 1.0)?;
        let n = fmath::ceil(1.0 / mesh) as usize;
        let step = 1.0 / n as f64;
        Ok((0..=n).map(|i| Point::line(i as f64 * step)).collect())
    }
}

impl LineMeasure for LebesgueUnit {
    fn interval_mass(&self, lo: f64, hi: f64) -> Result<f64> {
        Ok((hi.min(1.0) - lo.max(0.0)).max(0.0))
    }
}
