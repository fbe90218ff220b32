//! Self-similar measures on the line with strong separation.
//!
//! Each branch is an orientation-preserving contraction `x -> t + r * x`
//! mapping `[0, 1]` onto `[t, t + r]`, carrying probability `p`. Branch
//! images must be pairwise disjoint closed intervals, which makes cylinder
//! recursion exact: a closed query interval is classified against each
//! cylinder as fully inside / fully outside / straddling, and only
//! straddlers are refined.

use super::{check_mesh, check_radius, LineMeasure, MeasureOracle};
use crate::error::{argument, CoreError, Result};
use crate::fmath;
use crate::geom::Point;
use alloc::vec;
use alloc::vec::Vec;

/// One IFS branch `x -> translation + ratio * x` with probability `prob`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub ratio: f64,
    pub translation: f64,
    pub prob: f64,
}

/// A finite word over the branch alphabet together with its derived
/// interval and mass.
#[derive(Debug, Clone, PartialEq)]
pub struct CylinderCode {
    pub word: Vec<usize>,
    /// Interval `[lo, hi]`, the image of `[0, 1]` under the word's maps.
    pub lo: f64,
    pub hi: f64,
    /// Product of branch probabilities along the word.
    pub mass: f64,
}

impl CylinderCode {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone)]
pub struct SelfSimilarMeasure1D {
    branches: Vec<Branch>,
    tol: f64,
    node_budget: usize,
    support_lo: f64,
    support_hi: f64,
}

const DEFAULT_TOL: f64 = 1e-9;
const DEFAULT_NODE_BUDGET: usize = 1 << 22;

impl SelfSimilarMeasure1D {
    /// Validates and builds the measure. Branches may be given in any order;
    /// they are stored sorted by translation.
    pub fn new(branches: Vec<Branch>) -> Result<Self> {
        Self::with_tolerance(branches, DEFAULT_TOL)
    }

    pub fn with_tolerance(mut branches: Vec<Branch>, tol: f64) -> Result<Self> {
        if branches.len() < 2 {
            return Err(argument("need at least 2 branches"));
        }
        if !(tol > 0.0 && tol < 1.0) {
            return Err(argument("tolerance must lie in (0, 1)"));
        }
        let mut prob_sum = 0.0;
        for b in &branches {
            if !(b.ratio > 0.0 && b.ratio < 1.0) {
                return Err(argument("branch ratio must lie in (0, 1)"));
            }
            if !(b.translation >= 0.0 && b.translation < 1.0) {
                return Err(argument("branch translation must lie in [0, 1)"));
            }
            if b.translation + b.ratio > 1.0 + 1e-12 {
                return Err(argument("branch image must stay inside [0, 1]"));
            }
            if !(b.prob > 0.0 && b.prob < 1.0) {
                return Err(argument("branch probability must lie in (0, 1)"));
            }
            prob_sum += b.prob;
        }
        if fmath::abs(prob_sum - 1.0) > 1e-9 {
            return Err(argument("branch probabilities must sum to 1"));
        }
        branches.sort_by(|a, b| a.translation.total_cmp(&b.translation));
        for pair in branches.windows(2) {
            // strong separation: closed images [t, t+r] must be disjoint
            if pair[1].translation <= pair[0].translation + pair[0].ratio {
                return Err(argument("branch images must be pairwise disjoint closed intervals"));
            }
        }
        let first = branches[0];
        let last = branches[branches.len() - 1];
        let support_lo = first.translation / (1.0 - first.ratio);
        let support_hi = last.translation / (1.0 - last.ratio);
        Ok(SelfSimilarMeasure1D {
            branches,
            tol,
            node_budget: DEFAULT_NODE_BUDGET,
            support_lo,
            support_hi,
        })
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn support_min(&self) -> f64 {
        self.support_lo
    }

    pub fn support_max(&self) -> f64 {
        self.support_hi
    }

    /// Cylinder of a branch word (root for the empty word).
    pub fn cylinder(&self, word: &[usize]) -> Result<CylinderCode> {
        let mut lo = 0.0;
        let mut width = 1.0;
        let mut mass = 1.0;
        for &digit in word {
            let b = self
                .branches
                .get(digit)
                .ok_or_else(|| argument("branch index out of range"))?;
            lo += b.translation * width;
            width *= b.ratio;
            mass *= b.prob;
        }
        Ok(CylinderCode { word: word.to_vec(), lo, hi: lo + width, mass })
    }

    /// All cylinders of exactly the given depth, in lexicographic word order.
    pub fn cylinders_at_depth(&self, depth: usize) -> Vec<CylinderCode> {
        let mut out = Vec::new();
        let root = CylinderCode { word: Vec::new(), lo: 0.0, hi: 1.0, mass: 1.0 };
        self.collect_cylinders(&root, depth, &mut out);
        out
    }

    fn collect_cylinders(&self, node: &CylinderCode, depth: usize, out: &mut Vec<CylinderCode>) {
        if node.word.len() == depth {
            out.push(node.clone());
            return;
        }
        for (i, b) in self.branches.iter().enumerate() {
            let width = node.hi - node.lo;
            let lo = node.lo + b.translation * width;
            let mut word = node.word.clone();
            word.push(i);
            let child = CylinderCode {
                word,
                lo,
                hi: lo + b.ratio * width,
                mass: node.mass * b.prob,
            };
            self.collect_cylinders(&child, depth, out);
        }
    }

    /// Exact closed-interval mass by cylinder recursion.
    ///
    /// Straddling cylinders are refined until they are narrower than
    /// `tol * half_width` and carry relative mass below `tol`; the residue is
    /// attributed by midpoint containment, so the relative error is bounded
    /// by a small multiple of `tol`.
    fn interval_mass_impl(&self, lo: f64, hi: f64) -> Result<f64> {
        if hi < lo {
            return Ok(0.0);
        }
        let width_floor = self.tol * 0.5 * (hi - lo).max(f64::MIN_POSITIVE);
        let mut inside = 0.0f64;
        let mut nodes = 0usize;
        // (lo, hi, mass) triples; DFS order is deterministic.
        let mut stack: Vec<(f64, f64, f64)> = vec![(0.0, 1.0, 1.0)];
        while let Some((a, b, m)) = stack.pop() {
            nodes += 1;
            if nodes > self.node_budget {
                let mut remaining = m;
                for &(_, _, pm) in &stack {
                    remaining += pm;
                }
                return Err(CoreError::Tolerance {
                    achieved: remaining / inside.max(f64::MIN_POSITIVE),
                });
            }
            if b < lo || a > hi {
                continue;
            }
            if a >= lo && b <= hi {
                inside += m;
                continue;
            }
            let width = b - a;
            let small = width < width_floor && m <= self.tol * inside;
            if small || width < 1e-300 || m < 1e-300 {
                let mid = 0.5 * (a + b);
                if lo <= mid && mid <= hi {
                    inside += m;
                }
                continue;
            }
            for br in &self.branches {
                let child_lo = a + br.translation * width;
                stack.push((child_lo, child_lo + br.ratio * width, m * br.prob));
            }
        }
        Ok(inside)
    }
}

impl MeasureOracle for SelfSimilarMeasure1D {
    fn ambient_dim(&self) -> usize {
        1
    }

    fn total_mass(&self) -> f64 {
        1.0
    }

    fn support_bounds(&self) -> (Point, Point) {
        (Point::line(self.support_lo), Point::line(self.support_hi))
    }

    fn support_diameter(&self) -> f64 {
        self.support_hi - self.support_lo
    }

    fn ball_mass(&self, center: &Point, radius: f64) -> Result<f64> {
        check_radius(radius)?;
        if !center.x().is_finite() {
            return Err(argument("center must be finite"));
        }
        self.interval_mass_impl(center.x() - radius, center.x() + radius)
    }

    /// Emits the extreme support points of every cylinder wide enough to
    /// matter: cylinders are split while wider than the mesh, and both
    /// `w(support_min)` and `w(support_max)` are emitted at every node, so
    /// nets at finer meshes contain the coarser ones.
    fn support_net(&self, mesh: f64) -> Result<Vec<Point>> {
        check_mesh(mesh, self.support_diameter())?;
        let mut xs: Vec<f64> = Vec::new();
        // (lo, width) of cylinder intervals
        let mut stack: Vec<(f64, f64)> = vec![(0.0, 1.0)];
        while let Some((lo, width)) = stack.pop() {
            xs.push(lo + self.support_lo * width);
            xs.push(lo + self.support_hi * width);
            if width > mesh {
                for br in &self.branches {
                    stack.push((lo + br.translation * width, br.ratio * width));
                }
            }
        }
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        Ok(xs.into_iter().map(Point::line).collect())
    }
}

impl LineMeasure for SelfSimilarMeasure1D {
    fn interval_mass(&self, lo: f64, hi: f64) -> Result<f64> {
        self.interval_mass_impl(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cantor(p_left: f64) -> SelfSimilarMeasure1D {
        SelfSimilarMeasure1D::new(vec![
            Branch { ratio: 1.0 / 3.0, translation: 0.0, prob: p_left },
            Branch { ratio: 1.0 / 3.0, translation: 2.0 / 3.0, prob: 1.0 - p_left },
        ])
        .unwrap()
    }

    #[test]
    fn ball_covering_support_has_full_mass() {
        let m = cantor(0.25);
        let mass = m.ball_mass(&Point::line(0.5), 0.5).unwrap();
        assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn ball_at_left_end_captures_first_cylinder() {
        let m = cantor(0.25);
        let mass = m.ball_mass(&Point::line(0.0), 1.0 / 3.0).unwrap();
        assert_abs_diff_eq!(mass, 0.25, epsilon = 1e-12);
    }

    #[test]
    fn ball_at_right_end_captures_level_two_cylinder() {
        // [8/9, 10/9] meets the support exactly in the cylinder "22".
        let m = cantor(0.25);
        let mass = m.ball_mass(&Point::line(1.0), 1.0 / 9.0).unwrap();
        assert_abs_diff_eq!(mass, 9.0 / 16.0, epsilon = 1e-12);
    }

    #[test]
    fn cylinder_masses_and_widths_multiply() {
        let m = cantor(0.25);
        let c = m.cylinder(&[1, 1]).unwrap();
        assert_abs_diff_eq!(c.lo, 8.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.hi, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.mass, 9.0 / 16.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.width(), 1.0 / 9.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_overlapping_branches() {
        let r = SelfSimilarMeasure1D::new(vec![
            Branch { ratio: 0.5, translation: 0.0, prob: 0.5 },
            Branch { ratio: 0.5, translation: 0.5, prob: 0.5 },
        ]);
        assert!(r.is_err(), "touching closed images must be rejected");
    }

    #[test]
    fn rejects_single_branch_and_bad_probabilities() {
        assert!(SelfSimilarMeasure1D::new(vec![Branch {
            ratio: 0.5,
            translation: 0.0,
            prob: 1.0,
        }])
        .is_err());
        assert!(SelfSimilarMeasure1D::new(vec![
            Branch { ratio: 0.3, translation: 0.0, prob: 0.4 },
            Branch { ratio: 0.3, translation: 0.6, prob: 0.4 },
        ])
        .is_err());
    }

    #[test]
    fn net_contains_level_two_endpoints() {
        let m = cantor(0.25);
        let net = m.support_net(1.0 / 9.0).unwrap();
        let xs: Vec<f64> = net.iter().map(|p| p.x()).collect();
        for expected in [0.0, 1.0 / 9.0, 2.0 / 9.0, 1.0 / 3.0, 2.0 / 3.0, 7.0 / 9.0, 8.0 / 9.0, 1.0] {
            assert!(
                xs.iter().any(|x| (x - expected).abs() < 1e-12),
                "missing net point {expected}"
            );
        }
    }

    #[test]
    fn nets_are_nested_under_mesh_refinement() {
        let m = cantor(0.5);
        let coarse = m.support_net(1.0 / 9.0).unwrap();
        let fine = m.support_net(1.0 / 27.0).unwrap();
        for p in &coarse {
            assert!(fine.iter().any(|q| q.x() == p.x()));
        }
    }

    #[test]
    fn shifted_support_bounds() {
        let m = SelfSimilarMeasure1D::new(vec![
            Branch { ratio: 0.25, translation: 0.2, prob: 0.5 },
            Branch { ratio: 0.25, translation: 0.7, prob: 0.5 },
        ])
        .unwrap();
        // fixed points of the extreme branches
        assert_abs_diff_eq!(m.support_min(), 0.2 / 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(m.support_max(), 0.7 / 0.75, epsilon = 1e-15);
        let diam = m.support_diameter();
        let mass = m
            .ball_mass(&Point::line(0.5 * (m.support_min() + m.support_max())), diam)
            .unwrap();
        assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-12);
    }
}
