//! Measures on metric spaces behind a single ball-mass query contract.
//!
//! Three families are provided: exact self-similar measures on the line
//! ([`SelfSimilarMeasure1D`]), weighted point clouds ([`EmpiricalMeasure`]),
//! and pushforwards of line measures under monotone maps
//! ([`PushforwardMeasure`]) or onto sampled process graphs
//! ([`GraphMeasure`]). Balls are closed; on the line the metric is `|.|`, on
//! the plane the max metric, so planar balls are axis-aligned squares.

mod empirical;
mod graph;
mod ifs;
mod lebesgue;
mod pushforward;

pub use empirical::EmpiricalMeasure;
pub use graph::GraphMeasure;
pub use ifs::{Branch, CylinderCode, SelfSimilarMeasure1D};
pub use lebesgue::LebesgueUnit;
pub use pushforward::{MonotoneMap, PushforwardMeasure};

use crate::error::{argument, Result};
use crate::geom::Point;
use alloc::vec::Vec;

/// Ball-mass query contract shared by every measure kind.
///
/// Oracles are immutable after construction and safe for concurrent
/// read-only queries (`Sync` is a supertrait).
pub trait MeasureOracle: Sync {
    /// Ambient dimension, 1 or 2.
    fn ambient_dim(&self) -> usize;

    fn total_mass(&self) -> f64;

    /// Bounding box of the support (equal corners in dimension 1).
    fn support_bounds(&self) -> (Point, Point);

    /// Diameter of the support in the ambient metric.
    fn support_diameter(&self) -> f64;

    /// Mass of the closed ball of radius `radius` around `center`.
    ///
    /// Exact for self-similar oracles up to the declared recursion
    /// tolerance, exact atom sums for empirical oracles.
    fn ball_mass(&self, center: &Point, radius: f64) -> Result<f64>;

    /// A `mesh`-net of the support: every support point lies within `mesh`
    /// of a returned point and every returned point lies in (or within
    /// `mesh / 2` of) the support. Deterministic for a fixed measure and
    /// mesh; returned sorted by coordinates.
    fn support_net(&self, mesh: f64) -> Result<Vec<Point>>;
}

/// Line measures that answer exact closed-interval mass queries.
///
/// `ball_mass` is derived as `interval_mass(c - r, c + r)`; pushforwards and
/// graph weights are built from interval masses.
pub trait LineMeasure: MeasureOracle {
    /// Mass of `[lo, hi]` (0 when `hi < lo`).
    fn interval_mass(&self, lo: f64, hi: f64) -> Result<f64>;
}

pub(crate) fn check_radius(radius: f64) -> Result<()> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(argument("radius must be positive and finite"));
    }
    Ok(())
}

pub(crate) fn check_mesh(mesh: f64, diameter: f64) -> Result<()> {
    if !(mesh > 0.0) || !mesh.is_finite() {
        return Err(argument("mesh must be positive and finite"));
    }
    if diameter > 0.0 && mesh >= diameter {
        return Err(argument("mesh must be smaller than the support diameter"));
    }
    Ok(())
}

/// Pushforward of a point cloud: maps atoms, keeps weights.
pub fn pushforward_empirical(
    cloud: &EmpiricalMeasure,
    map: &dyn MonotoneMap,
) -> Result<EmpiricalMeasure> {
    if cloud.ambient_dim() != 1 {
        return Err(argument("empirical pushforward requires a line cloud"));
    }
    let atoms = cloud
        .atoms()
        .map(|(p, w)| (Point::line(map.apply(p.x())), w))
        .collect::<Vec<_>>();
    EmpiricalMeasure::from_atoms(atoms)
}
