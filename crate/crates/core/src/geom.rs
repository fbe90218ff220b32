//! Points and boxes in ambient dimension 1 or 2.
//!
//! On the line the metric is `|x - y|`; on the plane it is the max metric,
//! so balls are axis-aligned squares and rectangle containments can be
//! checked coordinatewise.

use crate::fmath;

/// A point of the ambient space, dimension 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    coords: [f64; 2],
    dim: usize,
}

impl Point {
    pub fn line(x: f64) -> Self {
        debug_assert!(x.is_finite());
        Point { coords: [x, 0.0], dim: 1 }
    }

    pub fn plane(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite());
        Point { coords: [x, y], dim: 2 }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.coords[0]
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.coords[1]
    }

    pub fn coord(&self, i: usize) -> f64 {
        self.coords[i]
    }

    /// Distance in the ambient metric: `|.|` on the line, max metric on the plane.
    pub fn dist(&self, other: &Point) -> f64 {
        let dx = fmath::abs(self.x() - other.x());
        if self.dim == 1 && other.dim == 1 {
            dx
        } else {
            dx.max(fmath::abs(self.y() - other.y()))
        }
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    /// Interval of width `width` centered at `c`.
    pub fn centered(c: f64, width: f64) -> Self {
        Interval { lo: c - width / 2.0, hi: c + width / 2.0 }
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo).max(0.0)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.max(other.lo), hi: self.hi.min(other.hi) }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}
