//! Exact pushforwards of line measures under strictly monotone maps.
//!
//! For an increasing map `f` the pushforward ball mass is an exact base
//! interval mass: `f_*mu(B(y, r)) = mu([f^{-1}(y - r), f^{-1}(y + r)])`,
//! with the preimage clamped to the base domain.

use super::{check_mesh, check_radius, LineMeasure, MeasureOracle};
use crate::error::{argument, Result};
use crate::geom::Point;
use alloc::boxed::Box;
use alloc::vec::Vec;

/// A strictly increasing homeomorphism of `[0, 1]`.
pub trait MonotoneMap: Send + Sync {
    fn apply(&self, x: f64) -> f64;
    /// Inverse on the image; callers clamp arguments into `[apply(0), apply(1)]`.
    fn invert(&self, y: f64) -> f64;
}

pub struct PushforwardMeasure {
    base: Box<dyn LineMeasure + Send + Sync>,
    map: Box<dyn MonotoneMap>,
    image_lo: f64,
    image_hi: f64,
}

impl PushforwardMeasure {
    pub fn new(base: Box<dyn LineMeasure + Send + Sync>, map: Box<dyn MonotoneMap>) -> Result<Self> {
        let (lo, hi) = {
            let (a, b) = base.support_bounds();
            (map.apply(a.x()), map.apply(b.x()))
        };
        if !(lo < hi) && base.support_diameter() > 0.0 {
            return Err(argument("map must be strictly increasing on the support"));
        }
        Ok(PushforwardMeasure { base, map, image_lo: lo, image_hi: hi })
    }

    pub fn base(&self) -> &dyn LineMeasure {
        self.base.as_ref()
    }

    fn preimage(&self, lo: f64, hi: f64) -> Option<(f64, f64)> {
        if hi < self.image_lo || lo > self.image_hi {
            return None;
        }
        let a = self.map.invert(lo.max(self.image_lo));
        let b = self.map.invert(hi.min(self.image_hi));
        Some((a, b))
    }
}

impl MeasureOracle for PushforwardMeasure {
    fn ambient_dim(&self) -> usize {
        1
    }

    fn total_mass(&self) -> f64 {
        self.base.total_mass()
    }

    fn support_bounds(&self) -> (Point, Point) {
        (Point::line(self.image_lo), Point::line(self.image_hi))
    }

    fn support_diameter(&self) -> f64 {
        self.image_hi - self.image_lo
    }

    fn ball_mass(&self, center: &Point, radius: f64) -> Result<f64> {
        check_radius(radius)?;
        self.interval_mass(center.x() - radius, center.x() + radius)
    }

    /// Adaptive net: base support intervals are bisected until their images
    /// are narrower than `mesh / 2`, and endpoints of mass-carrying pieces
    /// are emitted in image space.
    fn support_net(&self, mesh: f64) -> Result<Vec<Point>> {
        check_mesh(mesh, self.support_diameter())?;
        let (blo, bhi) = {
            let (a, b) = self.base.support_bounds();
            (a.x(), b.x())
        };
        let mut xs: Vec<f64> = Vec::new();
        let mut stack: Vec<(f64, f64)> = alloc::vec![(blo, bhi)];
        while let Some((a, b)) = stack.pop() {
            if self.base.interval_mass(a, b)? <= 0.0 {
                continue;
            }
            let (fa, fb) = (self.map.apply(a), self.map.apply(b));
            if fb - fa <= 0.5 * mesh || b - a < 1e-15 {
                xs.push(fa);
                xs.push(fb);
            } else {
                let mid = 0.5 * (a + b);
                stack.push((a, mid));
                stack.push((mid, b));
            }
        }
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        Ok(xs.into_iter().map(Point::line).collect())
    }
}

impl LineMeasure for PushforwardMeasure {
    fn interval_mass(&self, lo: f64, hi: f64) -> Result<f64> {
        match self.preimage(lo, hi) {
            None => Ok(0.0),
            Some((a, b)) => self.base.interval_mass(a, b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::LebesgueUnit;
    use crate::qs::PowerMap;
    use approx::assert_abs_diff_eq;

    fn square_pushforward() -> PushforwardMeasure {
        PushforwardMeasure::new(Box::new(LebesgueUnit), Box::new(PowerMap::new(2.0).unwrap()))
            .unwrap()
    }

    #[test]
    fn identity_pushforward_preserves_ball_masses() {
        let m = PushforwardMeasure::new(Box::new(LebesgueUnit), Box::new(PowerMap::new(1.0).unwrap()))
            .unwrap();
        for (c, r) in [(0.3, 0.1), (0.0, 0.5), (0.9, 0.3)] {
            let got = m.ball_mass(&Point::line(c), r).unwrap();
            let want = LebesgueUnit.ball_mass(&Point::line(c), r).unwrap();
            assert_abs_diff_eq!(got, want, epsilon = 1e-15);
        }
    }

    #[test]
    fn square_map_ball_at_origin() {
        // preimage of [-1/4, 1/4] is [0, 1/2]
        let m = square_pushforward();
        let mass = m.ball_mass(&Point::line(0.0), 0.25).unwrap();
        assert_abs_diff_eq!(mass, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn square_map_ball_covering_everything() {
        // preimage of [-1/2, 1] covers [0, 1]
        let m = square_pushforward();
        let mass = m.ball_mass(&Point::line(0.25), 0.75).unwrap();
        assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn net_covers_image_near_zero() {
        let m = square_pushforward();
        let net = m.support_net(1.0 / 64.0).unwrap();
        // image space is [0, 1]; check the mesh-coverage property on a grid
        for i in 0..=256 {
            let y = i as f64 / 256.0;
            let ok = net.iter().any(|p| (p.x() - y).abs() <= 1.0 / 64.0);
            assert!(ok, "no net point within mesh of {y}");
        }
    }
}
