//! Lattice-preserving affine maps and the equivalence they induce.
//!
//! Two polygons are equivalent when a map `x -> Mx + t` with `M` an integer
//! matrix of determinant `±1` carries one onto the other. This module gives
//! two independent ways of deciding that: [`canonical_form`] (compare
//! normal forms) and [`equivalence_oracle`] (search for a witness map).

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{Hull, LatticePoint, LatticePolygon, LatticeSet};

/// Which maps count as equivalences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EquivalenceGroup {
    /// Determinant `+1` or `-1`.
    #[default]
    Full,
    /// Determinant `+1` only.
    Proper,
}

/// `x -> Mx + t` with `M = [[a, b], [c, d]]`, `det M = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularAffineMap {
    matrix: [[i64; 2]; 2],
    translation: LatticePoint,
}

impl UnimodularAffineMap {
    pub const IDENTITY: UnimodularAffineMap = UnimodularAffineMap {
        matrix: [[1, 0], [0, 1]],
        translation: LatticePoint::ORIGIN,
    };

    pub fn new(matrix: [[i64; 2]; 2], translation: LatticePoint) -> Result<Self> {
        let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        if det.abs() != 1 {
            return Err(Error::invalid("matrix determinant must be ±1"));
        }
        Ok(UnimodularAffineMap { matrix, translation })
    }

    pub fn translation(t: LatticePoint) -> Self {
        UnimodularAffineMap { translation: t, ..Self::IDENTITY }
    }

    /// `(x, y) -> (x + a*y, y)`.
    pub fn shear_x(a: i64) -> Self {
        UnimodularAffineMap {
            matrix: [[1, a], [0, 1]],
            translation: LatticePoint::ORIGIN,
        }
    }

    /// `(x, y) -> (-x, y)`.
    pub fn reflect_x() -> Self {
        UnimodularAffineMap {
            matrix: [[-1, 0], [0, 1]],
            translation: LatticePoint::ORIGIN,
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn offset(&self) -> LatticePoint {
        self.translation
    }

    pub fn det(&self) -> i64 {
        let m = self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn linear(&self, v: LatticePoint) -> LatticePoint {
        let m = self.matrix;
        LatticePoint::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
    }

    pub fn apply_point(&self, p: LatticePoint) -> LatticePoint {
        self.linear(p) + self.translation
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularAffineMap) -> UnimodularAffineMap {
        let (a, b) = (self.matrix, other.matrix);
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        UnimodularAffineMap {
            matrix: m,
            translation: self.apply_point(other.translation),
        }
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        let m = self.matrix;
        let det = self.det();
        let inv = [[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]];
        let linear = UnimodularAffineMap { matrix: inv, translation: LatticePoint::ORIGIN };
        UnimodularAffineMap {
            matrix: inv,
            translation: -linear.linear(self.translation),
        }
    }

    /// Image polygon, renormalised to a counterclockwise cycle starting at
    /// its smallest vertex.
    pub fn apply(&self, p: &LatticePolygon) -> LatticePolygon {
        let mut image: Vec<LatticePoint> = p.vertices().iter().map(|&v| self.apply_point(v)).collect();
        if self.det() < 0 {
            image.reverse();
        }
        LatticePolygon::from_ccw_cycle(image)
    }
}

impl fmt::Display for UnimodularAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.matrix;
        write!(
            f,
            "[[{}, {}], [{}, {}]] + {}",
            m[0][0], m[0][1], m[1][0], m[1][1], self.translation
        )
    }
}

/// Apply a map to a polygon.
pub fn apply(sigma: &UnimodularAffineMap, p: &LatticePolygon) -> LatticePolygon {
    sigma.apply(p)
}

/// Equivalence invariants of a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantVector {
    /// `ℓ(P)`, the longest collinear run.
    pub run: i64,
    /// `ε(P)`, the number of vertices.
    pub vertices: i64,
    pub interior: i64,
    pub area2: i64,
    pub total: i64,
    pub boundary: i64,
    /// Central symmetry about any (possibly half-integer) centre.
    pub symmetric: bool,
}

pub fn invariant_vector(p: &LatticePolygon) -> InvariantVector {
    let stats = p.pick_stats();
    InvariantVector {
        run: p.max_collinear_run().length as i64,
        vertices: p.vertex_count() as i64,
        interior: stats.interior,
        area2: stats.area2,
        total: stats.total,
        boundary: stats.boundary,
        symmetric: p.symmetry_center().is_some(),
    }
}

/// Normal form of a polygon under unimodular affine maps.
///
/// The vertex sequence starts at the origin with a first edge along the
/// positive x-axis. Two polygons have equal canonical forms iff they are
/// equivalent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    vertices: Vec<LatticePoint>,
}

impl CanonicalForm {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// The normal-form representative as a polygon (rotation-normalised, so
    /// it may no longer start at the origin).
    pub fn to_polygon(&self) -> LatticePolygon {
        LatticePolygon::from_ccw_cycle(self.vertices.clone())
    }
}

/// Unimodular matrix sending the primitive vector `d` to `(1, 0)`.
fn align_to_x_axis(d: LatticePoint) -> [[i64; 2]; 2] {
    let e = Integer::extended_gcd(&d.x, &d.y);
    let (mut p, mut q) = (e.x, e.y);
    if e.gcd < 0 {
        p = -p;
        q = -q;
    }
    debug_assert_eq!(p * d.x + q * d.y, 1);
    [[p, q], [-d.y, d.x]]
}

/// Candidate normal form anchored at directed edge `cycle[start] -> cycle[start+1]`.
fn anchored_candidate(cycle: &[LatticePoint], start: usize, out: &mut Vec<LatticePoint>) {
    let n = cycle.len();
    let origin = cycle[start];
    let dir = (cycle[(start + 1) % n] - origin).primitive();
    let m = align_to_x_axis(dir);
    out.clear();
    for i in 0..n {
        let v = cycle[(start + i) % n] - origin;
        out.push(LatticePoint::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y));
    }
    // Fix the shear (x, y) -> (x + a*y, y) with the highest vertex, ties by
    // smallest x.
    let top = *out
        .iter()
        .max_by(|a, b| a.y.cmp(&b.y).then(b.x.cmp(&a.x)))
        .expect("nonempty cycle");
    debug_assert!(top.y >= 1);
    let a = -Integer::div_floor(&top.x, &top.y);
    for v in out.iter_mut() {
        v.x += a * v.y;
    }
}

fn mirrored(p: &LatticePolygon) -> Vec<LatticePoint> {
    p.vertices().iter().rev().map(|v| LatticePoint::new(-v.x, v.y)).collect()
}

/// Canonical form under the full group (determinant `±1`).
pub fn canonical_form(p: &LatticePolygon) -> CanonicalForm {
    canonical_form_in(p, EquivalenceGroup::Full)
}

/// Canonical form under the chosen group.
///
/// Every directed edge of the counterclockwise cycle (and, for the full
/// group, of the mirrored cycle) yields one candidate: the edge start goes to
/// the origin, the edge direction to `(1, 0)`, and the remaining shear is
/// fixed by putting the highest vertex at `0 <= x < y`. The lexicographically
/// smallest candidate wins.
pub fn canonical_form_in(p: &LatticePolygon, group: EquivalenceGroup) -> CanonicalForm {
    let mut best: Option<Vec<LatticePoint>> = None;
    let mut cand = Vec::with_capacity(p.vertex_count());
    let mut consider = |cycle: &[LatticePoint], cand: &mut Vec<LatticePoint>| {
        for start in 0..cycle.len() {
            anchored_candidate(cycle, start, cand);
            if best.as_ref().is_none_or(|b| cand.as_slice() < b.as_slice()) {
                best = Some(cand.clone());
            }
        }
    };
    consider(p.vertices(), &mut cand);
    if group == EquivalenceGroup::Full {
        consider(&mirrored(p), &mut cand);
    }
    CanonicalForm {
        vertices: best.expect("polygon has vertices"),
    }
}

/// Canonical form of the hull of a point set; degenerate hulls are rejected.
pub fn canonical_form_of_set(points: &LatticeSet) -> Result<CanonicalForm> {
    match crate::lattice::convex_hull(points)? {
        Hull::Polygon(p) => Ok(canonical_form(&p)),
        Hull::Degenerate(_) => Err(Error::invalid("canonical form of a degenerate hull")),
    }
}

/// Searches for a map carrying `p` onto `q`, independently of the canonical
/// form.
pub fn equivalence_oracle(p: &LatticePolygon, q: &LatticePolygon) -> Option<UnimodularAffineMap> {
    equivalence_oracle_in(p, q, EquivalenceGroup::Full)
}

/// An equivalence sends the vertex cycle of `p` to that of `q`, preserving or
/// reversing order, so it is pinned down by where one vertex and its two
/// successors go. All such matchings are tried.
pub fn equivalence_oracle_in(
    p: &LatticePolygon,
    q: &LatticePolygon,
    group: EquivalenceGroup,
) -> Option<UnimodularAffineMap> {
    let n = p.vertex_count();
    if n != q.vertex_count() {
        return None;
    }
    let pv = p.vertices();
    let a0 = pv[0];
    let a1 = pv[1];
    let a2 = pv[2];
    let (u, v) = (a1 - a0, a2 - a1);
    let det_a = u.cross(v);
    let qv = q.vertices();
    let targets = LatticeSet::new(qv.iter().copied());
    for reversed in [false, true] {
        for j in 0..n {
            let at = |k: usize| {
                if reversed {
                    qv[(j + n * 2 - k) % n]
                } else {
                    qv[(j + k) % n]
                }
            };
            let (b0, b1, b2) = (at(0), at(1), at(2));
            let (s, t) = (b1 - b0, b2 - b1);
            // M [u v] = [s t]  =>  M = [s t] adj([u v]) / det
            let num = [
                [s.x * v.y - t.x * u.y, -s.x * v.x + t.x * u.x],
                [s.y * v.y - t.y * u.y, -s.y * v.x + t.y * u.x],
            ];
            if num.iter().flatten().any(|&e| e % det_a != 0) {
                continue;
            }
            let m = [
                [num[0][0] / det_a, num[0][1] / det_a],
                [num[1][0] / det_a, num[1][1] / det_a],
            ];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let admissible = match group {
                EquivalenceGroup::Full => det.abs() == 1,
                EquivalenceGroup::Proper => det == 1,
            };
            if !admissible {
                continue;
            }
            let linear = UnimodularAffineMap { matrix: m, translation: LatticePoint::ORIGIN };
            let sigma = UnimodularAffineMap {
                matrix: m,
                translation: b0 - linear.linear(a0),
            };
            if pv.iter().all(|&x| targets.contains(sigma.apply_point(x))) {
                return Some(sigma);
            }
        }
    }
    None
}
