//! Weighted point clouds with exact ball queries.
//!
//! Atoms are stored sorted by coordinates. Line clouds answer ball queries
//! by summing a contiguous index range; planar clouds use a segment tree
//! over the x-order whose nodes keep y-sorted prefix-weight tables, so a
//! square query costs `O(log^2 n)`. `atoms_in_ball` always returns exactly
//! the atoms a linear scan would, in the same order.

use super::{check_mesh, check_radius, MeasureOracle};
use crate::error::{argument, Result};
use crate::geom::Point;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct EmpiricalMeasure {
    dim: usize,
    xs: Vec<f64>,
    ys: Vec<f64>,
    ws: Vec<f64>,
    total: f64,
    lo: Point,
    hi: Point,
    diameter: f64,
    tree: Option<MergeTree>,
}

impl EmpiricalMeasure {
    /// Builds a cloud from `(point, weight)` atoms. All atoms must share one
    /// ambient dimension and carry strictly positive weight.
    pub fn from_atoms(mut atoms: Vec<(Point, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(argument("need at least one atom"));
        }
        let dim = atoms[0].0.dim();
        for (p, w) in &atoms {
            if p.dim() != dim {
                return Err(argument("mixed ambient dimensions"));
            }
            if !(*w > 0.0) || !w.is_finite() {
                return Err(argument("atom weights must be strictly positive and finite"));
            }
            if !p.x().is_finite() || !p.y().is_finite() {
                return Err(argument("atom coordinates must be finite"));
            }
        }
        atoms.sort_by(|a, b| {
            a.0.x()
                .total_cmp(&b.0.x())
                .then(a.0.y().total_cmp(&b.0.y()))
        });
        let xs: Vec<f64> = atoms.iter().map(|(p, _)| p.x()).collect();
        let ys: Vec<f64> = atoms.iter().map(|(p, _)| p.y()).collect();
        let ws: Vec<f64> = atoms.iter().map(|(_, w)| *w).collect();
        let total: f64 = ws.iter().sum();
        let (mut xlo, mut xhi) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut ylo, mut yhi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..xs.len() {
            xlo = xlo.min(xs[i]);
            xhi = xhi.max(xs[i]);
            ylo = ylo.min(ys[i]);
            yhi = yhi.max(ys[i]);
        }
        // max metric: the diameter of a box is its largest extent
        let diameter = if dim == 1 { xhi - xlo } else { (xhi - xlo).max(yhi - ylo) };
        let tree = if dim == 2 { Some(MergeTree::build(&ys, &ws)) } else { None };
        let (lo, hi) = if dim == 1 {
            (Point::line(xlo), Point::line(xhi))
        } else {
            (Point::plane(xlo, ylo), Point::plane(xhi, yhi))
        };
        Ok(EmpiricalMeasure { dim, xs, ys, ws, total, lo, hi, diameter, tree })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = (Point, f64)> + '_ {
        (0..self.len()).map(move |i| (self.atom_point(i), self.ws[i]))
    }

    fn atom_point(&self, i: usize) -> Point {
        if self.dim == 1 {
            Point::line(self.xs[i])
        } else {
            Point::plane(self.xs[i], self.ys[i])
        }
    }

    fn x_range(&self, lo: f64, hi: f64) -> (usize, usize) {
        let start = self.xs.partition_point(|&x| x < lo);
        let end = self.xs.partition_point(|&x| x <= hi);
        (start, end)
    }

    /// Indices of the atoms inside the closed ball, ascending. Matches a
    /// linear scan exactly.
    pub fn atoms_in_ball(&self, center: &Point, radius: f64) -> Vec<usize> {
        let (start, end) = self.x_range(center.x() - radius, center.x() + radius);
        if self.dim == 1 {
            (start..end).collect()
        } else {
            let (ylo, yhi) = (center.y() - radius, center.y() + radius);
            (start..end).filter(|&i| self.ys[i] >= ylo && self.ys[i] <= yhi).collect()
        }
    }
}

impl MeasureOracle for EmpiricalMeasure {
    fn ambient_dim(&self) -> usize {
        self.dim
    }

    fn total_mass(&self) -> f64 {
        self.total
    }

    fn support_bounds(&self) -> (Point, Point) {
        (self.lo, self.hi)
    }

    fn support_diameter(&self) -> f64 {
        self.diameter
    }

    fn ball_mass(&self, center: &Point, radius: f64) -> Result<f64> {
        check_radius(radius)?;
        let (start, end) = self.x_range(center.x() - radius, center.x() + radius);
        if start >= end {
            return Ok(0.0);
        }
        if self.dim == 1 {
            Ok(self.ws[start..end].iter().sum())
        } else {
            let tree = self.tree.as_ref().expect("planar cloud has a tree");
            Ok(tree.mass(start, end, center.y() - radius, center.y() + radius))
        }
    }

    /// Thins atoms to one representative per mesh cell (first atom in sorted
    /// order), so the net is a subset of the atoms and refining the mesh by
    /// halving only adds points.
    fn support_net(&self, mesh: f64) -> Result<Vec<Point>> {
        if self.diameter == 0.0 {
            // degenerate support: a single location
            return Ok(alloc::vec![self.atom_point(0)]);
        }
        check_mesh(mesh, self.diameter)?;
        let mut seen: BTreeSet<(i64, i64)> = BTreeSet::new();
        let mut out = Vec::new();
        for i in 0..self.len() {
            let cx = ((self.xs[i] - self.lo.x()) / mesh) as i64;
            let cy = if self.dim == 2 { ((self.ys[i] - self.lo.y()) / mesh) as i64 } else { 0 };
            if seen.insert((cx, cy)) {
                out.push(self.atom_point(i));
            }
        }
        Ok(out)
    }
}

/// Segment tree over the x-sorted atom order; node `k` at level `l` covers
/// the index block `[k << l, (k+1) << l)` and stores its atoms sorted by y
/// with prefix weight sums, so a square query decomposes into `O(log n)`
/// nodes answered by binary search.
#[derive(Debug, Clone)]
struct MergeTree {
    n: usize,
    levels: Vec<LevelData>,
}

#[derive(Debug, Clone)]
struct LevelData {
    node_size: usize,
    /// y values, block by block, each block sorted ascending.
    ys: Vec<f64>,
    /// Per-block prefix sums; block `b` occupies `b * (node_size + 1) ..`
    /// (only the last block may be shorter).
    prefix: Vec<f64>,
}

impl MergeTree {
    fn build(ys: &[f64], ws: &[f64]) -> Self {
        let n = ys.len();
        let mut levels = Vec::new();
        let mut node_size = 1usize;
        loop {
            let mut order: Vec<usize> = (0..n).collect();
            let mut start = 0;
            while start < n {
                let end = (start + node_size).min(n);
                order[start..end].sort_by(|&a, &b| ys[a].total_cmp(&ys[b]).then(a.cmp(&b)));
                start = end;
            }
            let level_ys: Vec<f64> = order.iter().map(|&i| ys[i]).collect();
            let mut prefix = Vec::with_capacity(n + n / node_size + 1);
            let mut start = 0;
            while start < n {
                let end = (start + node_size).min(n);
                let mut acc = 0.0;
                prefix.push(acc);
                for &i in &order[start..end] {
                    acc += ws[i];
                    prefix.push(acc);
                }
                start = end;
            }
            levels.push(LevelData { node_size, ys: level_ys, prefix });
            if node_size >= n {
                break;
            }
            node_size *= 2;
        }
        MergeTree { n, levels }
    }

    /// Sum of weights for atoms with x-index in `[start, end)` and y in
    /// `[ylo, yhi]`. Standard bottom-up decomposition: at each level the
    /// misaligned ends are answered and the range shrinks by half.
    fn mass(&self, start: usize, end: usize, ylo: f64, yhi: f64) -> f64 {
        let mut total = 0.0;
        let mut s = start;
        let mut e = end;
        let mut level = 0;
        while s < e && level < self.levels.len() {
            if s & 1 == 1 {
                total += self.node_mass(level, s, ylo, yhi);
                s += 1;
            }
            if e & 1 == 1 {
                e -= 1;
                total += self.node_mass(level, e, ylo, yhi);
            }
            s >>= 1;
            e >>= 1;
            level += 1;
        }
        total
    }

    fn node_mass(&self, level: usize, node: usize, ylo: f64, yhi: f64) -> f64 {
        let data = &self.levels[level];
        let size = data.node_size;
        let start = node * size;
        if start >= self.n {
            return 0.0;
        }
        let end = (start + size).min(self.n);
        let ys = &data.ys[start..end];
        let a = ys.partition_point(|&y| y < ylo);
        let b = ys.partition_point(|&y| y <= yhi);
        let base = node * (size + 1);
        data.prefix[base + b] - data.prefix[base + a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cloud_2d(n: usize, seed: u64) -> EmpiricalMeasure {
        // simple deterministic LCG; good enough to scatter points
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let atoms: Vec<(Point, f64)> =
            (0..n).map(|_| (Point::plane(next(), next()), 0.1 + next())).collect();
        EmpiricalMeasure::from_atoms(atoms).unwrap()
    }

    #[test]
    fn tree_mass_matches_linear_scan() {
        let m = cloud_2d(257, 42);
        let mut state = 7u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..500 {
            let c = Point::plane(next() * 1.2 - 0.1, next() * 1.2 - 0.1);
            let r = next() * 0.8 + 1e-6;
            let scan: f64 = m
                .atoms()
                .filter(|(p, _)| p.dist(&c) <= r)
                .map(|(_, w)| w)
                .sum();
            let fast = m.ball_mass(&c, r).unwrap();
            assert!(
                (scan - fast).abs() <= 1e-9 * (1.0 + scan.abs()),
                "scan {scan} vs tree {fast}"
            );
        }
    }

    #[test]
    fn atoms_in_ball_matches_scan_exactly() {
        let m = cloud_2d(100, 3);
        let c = Point::plane(0.5, 0.5);
        let r = 0.3;
        let scan: Vec<usize> = (0..m.len())
            .filter(|&i| {
                let (p, _) = m.atoms().nth(i).unwrap();
                p.dist(&c) <= r
            })
            .collect();
        assert_eq!(m.atoms_in_ball(&c, r), scan);
    }

    #[test]
    fn single_atom_net_is_the_atom() {
        let m = EmpiricalMeasure::from_atoms(vec![(Point::line(0.3), 2.0)]).unwrap();
        let net = m.support_net(0.5).unwrap();
        assert_eq!(net.len(), 1);
        assert_eq!(net[0].x(), 0.3);
        assert_eq!(m.support_diameter(), 0.0);
    }

    #[test]
    fn rejects_nonpositive_weights() {
        assert!(EmpiricalMeasure::from_atoms(vec![(Point::line(0.0), 0.0)]).is_err());
        assert!(EmpiricalMeasure::from_atoms(vec![]).is_err());
    }
}
