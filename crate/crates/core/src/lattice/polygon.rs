use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use super::point::{orient, HalfPoint, LatticePoint, LatticeSet};
use crate::error::{Error, Result};

/// A two-dimensional convex lattice polygon.
///
/// The vertex cycle is strictly convex, counterclockwise, and starts at the
/// lexicographically smallest vertex, so structural equality is equality of
/// point sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

/// Hulls of dimension below two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degenerate {
    Point(LatticePoint),
    Segment(LatticePoint, LatticePoint),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hull {
    Polygon(LatticePolygon),
    Degenerate(Degenerate),
}

impl Hull {
    pub fn polygon(self) -> Option<LatticePolygon> {
        match self {
            Hull::Polygon(p) => Some(p),
            Hull::Degenerate(_) => None,
        }
    }
}

/// Pick statistics of a lattice polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PickStats {
    /// Twice the area.
    pub area2: i64,
    /// Lattice points on the boundary.
    pub boundary: i64,
    /// Lattice points in the interior.
    pub interior: i64,
    /// All lattice points, `boundary + interior`.
    pub total: i64,
}

/// Counterclockwise hull of sorted, deduplicated points (monotone chain).
/// Collinear points are dropped. For fewer than two distinct points or a
/// collinear input the result has length 1 or 2.
pub(crate) fn hull_of_sorted(sorted: &[LatticePoint], out: &mut Vec<LatticePoint>) {
    out.clear();
    if sorted.len() <= 1 {
        out.extend_from_slice(sorted);
        return;
    }
    for &p in sorted {
        while out.len() >= 2 && orient(out[out.len() - 2], out[out.len() - 1], p) <= 0 {
            out.pop();
        }
        out.push(p);
    }
    let lower = out.len() + 1;
    for &p in sorted.iter().rev().skip(1) {
        while out.len() >= lower && orient(out[out.len() - 2], out[out.len() - 1], p) <= 0 {
            out.pop();
        }
        out.push(p);
    }
    out.pop();
}

/// Twice the area and the boundary count of a counterclockwise cycle.
pub(crate) fn area2_and_boundary(vertices: &[LatticePoint]) -> (i64, i64) {
    let n = vertices.len();
    let mut area2 = 0;
    let mut boundary = 0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        area2 += a.cross(b);
        boundary += (b - a).lattice_length();
    }
    (area2, boundary)
}

/// Number of lattice points in the convex hull of a counterclockwise
/// vertex cycle of length at least 3, via Pick's identity.
pub(crate) fn lattice_count_of_cycle(vertices: &[LatticePoint]) -> i64 {
    let (area2, boundary) = area2_and_boundary(vertices);
    (area2 + boundary + 2) / 2
}

/// Convex hull of a nonempty lattice set.
///
/// Uses exact orientation predicates only. Points lying on an edge are never
/// vertices.
pub fn convex_hull(points: &LatticeSet) -> Result<Hull> {
    if points.is_empty() {
        return Err(Error::invalid("convex hull of an empty set"));
    }
    let mut out = Vec::with_capacity(points.len());
    hull_of_sorted(points.as_slice(), &mut out);
    Ok(match out.len() {
        1 => Hull::Degenerate(Degenerate::Point(out[0])),
        2 => Hull::Degenerate(Degenerate::Segment(out[0], out[1])),
        _ => Hull::Polygon(LatticePolygon { vertices: out }),
    })
}

/// True iff `set` is exactly the set of lattice points of its convex hull.
pub fn hull_closed(set: &LatticeSet) -> bool {
    match convex_hull(set) {
        Err(_) => false,
        Ok(Hull::Degenerate(Degenerate::Point(_))) => true,
        Ok(Hull::Degenerate(Degenerate::Segment(a, b))) => {
            (b - a).lattice_length() + 1 == set.len() as i64
        }
        Ok(Hull::Polygon(p)) => lattice_count_of_cycle(&p.vertices) == set.len() as i64,
    }
}

impl LatticePolygon {
    /// Builds a polygon from a counterclockwise, strictly convex vertex
    /// cycle (any rotation).
    pub fn from_vertices(vertices: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let vertices: Vec<LatticePoint> = vertices.into_iter().collect();
        if vertices.len() < 3 {
            return Err(Error::invalid("a polygon needs at least 3 vertices"));
        }
        let n = vertices.len();
        for i in 0..n {
            if orient(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) <= 0 {
                return Err(Error::invalid(
                    "vertices are not a strictly convex counterclockwise cycle",
                ));
            }
        }
        let polygon = Self::from_ccw_cycle(vertices);
        // Local left turns also allow cycles that wind more than once.
        let set = LatticeSet::new(polygon.vertices.iter().copied());
        match convex_hull(&set)? {
            Hull::Polygon(h) if h == polygon => Ok(polygon),
            _ => Err(Error::invalid("vertex cycle winds more than once")),
        }
    }

    /// Convex hull of arbitrary points; `None` if the hull is degenerate.
    pub fn hull_of(points: impl IntoIterator<Item = LatticePoint>) -> Option<Self> {
        let set = LatticeSet::new(points);
        if set.is_empty() {
            return None;
        }
        convex_hull(&set).ok()?.polygon()
    }

    /// Rotates a counterclockwise strictly convex cycle so that the smallest
    /// vertex comes first. No validation.
    pub(crate) fn from_ccw_cycle(mut vertices: Vec<LatticePoint>) -> Self {
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        LatticePolygon { vertices }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<LatticePoint> {
        self.vertices
    }

    /// Number of vertices, `ε(P)`.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Directed edges `(start, end)` in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn area2(&self) -> i64 {
        area2_and_boundary(&self.vertices).0
    }

    /// Pick statistics. In debug builds the lattice-point total is checked
    /// against a row scan.
    pub fn pick_stats(&self) -> PickStats {
        let (area2, boundary) = area2_and_boundary(&self.vertices);
        let interior = (area2 - boundary + 2) / 2;
        let stats = PickStats {
            area2,
            boundary,
            interior,
            total: boundary + interior,
        };
        debug_assert_eq!(stats.total, self.row_scan_count());
        stats
    }

    /// Lattice point count obtained by summing row intervals, independent of
    /// Pick's identity.
    pub fn row_scan_count(&self) -> i64 {
        self.rows().iter().map(|&(_, lo, hi)| hi - lo + 1).sum()
    }

    /// Nonempty rows of `P ∩ Z^2` as `(y, x_min, x_max)`, ascending in `y`.
    pub fn rows(&self) -> Vec<(i64, i64, i64)> {
        let ymin = self.vertices.iter().map(|p| p.y).min().unwrap_or(0);
        let ymax = self.vertices.iter().map(|p| p.y).max().unwrap_or(0);
        let xmin = self.vertices.iter().map(|p| p.x).min().unwrap_or(0);
        let xmax = self.vertices.iter().map(|p| p.x).max().unwrap_or(0);
        let mut rows = Vec::new();
        for y in ymin..=ymax {
            if let Some((lo, hi)) = self.row_interval(y, xmin, xmax) {
                rows.push((y, lo, hi));
            }
        }
        rows
    }

    fn row_interval(&self, y: i64, mut lo: i64, mut hi: i64) -> Option<(i64, i64)> {
        for (a, b) in self.edges() {
            let d = b - a;
            // inside iff d.x * (y - a.y) - d.y * (x - a.x) >= 0
            let rhs = d.x * (y - a.y);
            if d.y > 0 {
                hi = hi.min(a.x + Integer::div_floor(&rhs, &d.y));
            } else if d.y < 0 {
                lo = lo.max(a.x + Integer::div_ceil(&rhs, &d.y));
            } else if rhs < 0 {
                return None;
            }
            if lo > hi {
                return None;
            }
        }
        Some((lo, hi))
    }

    /// All lattice points of the polygon, sorted.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let mut pts = Vec::new();
        for (y, lo, hi) in self.rows() {
            pts.extend((lo..=hi).map(|x| LatticePoint::new(x, y)));
        }
        pts.sort_unstable();
        pts
    }

    /// Closed containment test.
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| orient(a, b, p) >= 0)
    }

    /// Centre of symmetry if `P = 2c - P`.
    pub fn symmetry_center(&self) -> Option<HalfPoint> {
        let n = self.vertices.len();
        if !n.is_multiple_of(2) {
            return None;
        }
        let half = n / 2;
        let s = self.vertices[0] + self.vertices[half];
        (1..half)
            .all(|i| self.vertices[i] + self.vertices[i + half] == s)
            .then_some(HalfPoint { x2: s.x, y2: s.y })
    }

    /// `(is symmetric, centre)`, the centre given in half-integer coordinates.
    pub fn is_centrally_symmetric(&self) -> (bool, Option<HalfPoint>) {
        let c = self.symmetry_center();
        (c.is_some(), c)
    }

    /// Symmetric about a lattice point. This is the notion under which a
    /// symmetric polygon always has an odd number of lattice points and an
    /// interior point.
    pub fn is_lattice_symmetric(&self) -> bool {
        self.symmetry_center().is_some_and(HalfPoint::is_lattice)
    }

    pub fn translate(&self, t: LatticePoint) -> LatticePolygon {
        LatticePolygon {
            vertices: self.vertices.iter().map(|&p| p + t).collect(),
        }
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}
