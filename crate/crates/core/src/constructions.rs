//! Explicit polygon families.
//!
//! * [`lemma2_polygon`]: polygons between the triangle `T_ℓ` and the square
//!   `S_ℓ` realising every doubled area from `ℓ² + ℓ` to `2ℓ²`.
//! * [`build_m_tau`]: polygons whose edges are all primitive vectors of
//!   length at most `τ` in a quarter or half plane.
//! * [`assemble_symmetric`] and [`assemble_cardinality`]: one polygon per
//!   [`ChoiceVector`], of prescribed area or lattice-point count.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{primitive_vectors, LatticePoint, LatticePolygon, Region};

fn p(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

fn hull(points: impl IntoIterator<Item = LatticePoint>) -> Result<LatticePolygon> {
    LatticePolygon::hull_of(points)
        .ok_or_else(|| Error::AssemblyMismatch("construction collapsed to a segment".into()))
}

/// Which member of the area sweep realises a given `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepPiece {
    /// Pentagon with vertices `o, (0,ℓ), (1,ℓ), (1+j, ℓ-j), (ℓ,0)`.
    Pentagon { j: i64 },
    /// Hexagon with vertices `o, (0,ℓ), (i+1,ℓ), (2+i+j, ℓ-j), (ℓ,i), (ℓ,0)`.
    Hexagon { i: i64, j: i64 },
    /// Hexagon with vertices `o, (0,ℓ), (i+1,ℓ), (ℓ-j, 2+i+j), (ℓ,2+i), (ℓ,0)`.
    HexagonPrime { i: i64, j: i64 },
}

impl SweepPiece {
    /// Locates the piece of doubled area `ℓ² + k`.
    pub fn locate(ell: i64, k: i64) -> Result<SweepPiece> {
        if ell < 2 {
            return Err(Error::invalid("square side must be at least 2"));
        }
        if k < ell || k > ell * ell {
            return Err(Error::invalid("k must lie in [ell, ell^2]"));
        }
        if k < 2 * ell {
            return Ok(SweepPiece::Pentagon { j: k - ell });
        }
        for i in 0..=ell - 2 {
            let base = (2 * ell - i) * i;
            let top = ell - 2 - i;
            let h = k - base - 2 * (ell - i);
            if (0..=top).contains(&h) {
                return Ok(SweepPiece::Hexagon { i, j: h });
            }
            let hp = k - base - 3 * (ell - i) + 2;
            if (1..=top).contains(&hp) {
                return Ok(SweepPiece::HexagonPrime { i, j: hp });
            }
        }
        unreachable!("the sweep covers every k in [ell, ell^2]")
    }

    /// The vertex recipe; may contain repeated or non-extreme points.
    pub fn recipe(self, ell: i64) -> [LatticePoint; 6] {
        let l = ell;
        match self {
            SweepPiece::Pentagon { j } => {
                [p(0, 0), p(0, l), p(1, l), p(1 + j, l - j), p(l, 0), p(l, 0)]
            }
            SweepPiece::Hexagon { i, j } => {
                [p(0, 0), p(0, l), p(i + 1, l), p(2 + i + j, l - j), p(l, i), p(l, 0)]
            }
            SweepPiece::HexagonPrime { i, j } => {
                [p(0, 0), p(0, l), p(i + 1, l), p(l - j, 2 + i + j), p(l, 2 + i), p(l, 0)]
            }
        }
    }
}

/// A polygon `P` with `T_ℓ ⊂ P ⊆ S_ℓ` and doubled area `ℓ² + k`.
pub fn lemma2_polygon(ell: i64, k: i64) -> Result<LatticePolygon> {
    let piece = SweepPiece::locate(ell, k)?;
    let poly = hull(piece.recipe(ell))?;
    if poly.area2() != ell * ell + k {
        return Err(Error::AssemblyMismatch(alloc::format!(
            "sweep piece {piece:?} at ell = {ell} has area2 {} instead of {}",
            poly.area2(),
            ell * ell + k
        )));
    }
    Ok(poly)
}

/// The two primitive-vector polygon families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MTauMode {
    /// Edges `(ℓ_τ, 0)`, the primitive vectors in `x <= 0, y >= 0`, then
    /// `(0, -ℓ_τ)`.
    Quarter,
    /// Edges: the primitive vectors with `x > 0`, closed by minus their sum.
    Half,
}

fn short_edges(tau2: i64, mode: MTauMode) -> Result<Vec<LatticePoint>> {
    if tau2 < 2 {
        return Err(Error::invalid("tau^2 must be at least 2"));
    }
    let region = match mode {
        MTauMode::Quarter => Region::QuarterNegXPosY,
        MTauMode::Half => Region::OpenHalfPosX,
    };
    primitive_vectors(tau2, region)
}

/// `ℓ_τ`: the common length of the two long edges in quarter mode.
pub fn quarter_run(tau2: i64) -> Result<i64> {
    let q = short_edges(tau2, MTauMode::Quarter)?;
    Ok(q.iter().map(|v| v.y).sum())
}

fn chain(edges: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut at = LatticePoint::ORIGIN;
    let mut out = Vec::with_capacity(edges.len());
    for &e in edges {
        out.push(at);
        at = at + e;
    }
    debug_assert_eq!(at, LatticePoint::ORIGIN);
    out
}

fn m_tau_edges(tau2: i64, mode: MTauMode) -> Result<Vec<LatticePoint>> {
    let short = short_edges(tau2, mode)?;
    let sum = short.iter().fold(LatticePoint::ORIGIN, |a, &b| a + b);
    let mut edges = Vec::with_capacity(short.len() + 2);
    match mode {
        MTauMode::Quarter => {
            debug_assert_eq!(sum.x, -sum.y);
            edges.push(p(sum.y, 0));
            edges.extend_from_slice(&short);
            edges.push(p(0, -sum.y));
        }
        MTauMode::Half => {
            edges.extend_from_slice(&short);
            edges.push(-sum);
        }
    }
    Ok(edges)
}

/// The polygon whose oriented edges are the primitive vectors of length at
/// most `τ` in the chosen region, chained from the origin.
pub fn build_m_tau(tau2: i64, mode: MTauMode) -> Result<LatticePolygon> {
    let edges = m_tau_edges(tau2, mode)?;
    let poly = LatticePolygon::from_vertices(chain(&edges))?;
    // every edge direction is distinct, so each edge ends at a vertex
    if poly.vertex_count() != edges.len() {
        return Err(Error::AssemblyMismatch("primitive-vector polygon lost a vertex".into()));
    }
    Ok(poly)
}

/// One of two inner points per short side, for all but the last side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChoiceVector(Vec<u8>);

impl ChoiceVector {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b != 1 && b != 2) {
            return Err(Error::invalid("choice entries must be 1 or 2"));
        }
        Ok(ChoiceVector(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `2^len` vectors in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = ChoiceVector> {
        let total = 1u64.checked_shl(len as u32).unwrap_or(0);
        (0..total).map(move |code| {
            ChoiceVector((0..len).map(|i| 1 + ((code >> (len - 1 - i)) & 1) as u8).collect())
        })
    }
}

impl fmt::Display for ChoiceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Number of choice entries for an assembly family.
pub fn choice_len(tau2: i64, mode: MTauMode) -> Result<usize> {
    Ok(short_edges(tau2, mode)?.len() - 1)
}

/// How the base polygon was padded up to the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Padding {
    /// `j` full rectangle rows and an area-sweep piece of doubled area
    /// `4ℓ_τ² + mu2`.
    Symmetric { j: i64, mu2: i64 },
    /// `k` full rows of `n + 1` points and a partial row of `remainder`
    /// points below the base.
    Cardinality { n: i64, k: i64, remainder: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssemblyTrace {
    pub tau2: i64,
    pub target: i64,
    pub padding: Padding,
    /// The choice-dependent base polygon.
    pub base: LatticePolygon,
    /// Lattice-point counts of the named parts.
    pub part_sizes: Vec<(&'static str, i64)>,
}

/// Points `p_i^0, p_i^1, p_i^2` of the short sides of `2M`, traversed from
/// `start`.
fn doubled_sides(start: LatticePoint, edges: &[LatticePoint]) -> Vec<[LatticePoint; 3]> {
    let mut at = start;
    edges
        .iter()
        .map(|&e| {
            let side = [at, at + e, at + e.scale(2)];
            at = side[2];
            side
        })
        .collect()
}

fn pick_points(sides: &[[LatticePoint; 3]], u: &ChoiceVector) -> Vec<LatticePoint> {
    let mut pts = Vec::with_capacity(sides.len() + 2);
    pts.push(sides[0][0]);
    for (side, &b) in sides.iter().zip(u.bits()) {
        pts.push(side[b as usize]);
    }
    pts.push(sides[sides.len() - 1][2]);
    pts
}

fn check_choice(u: &ChoiceVector, sides: usize) -> Result<()> {
    if u.len() + 1 != sides {
        return Err(Error::invalid(alloc::format!(
            "choice vector needs {} entries, got {}",
            sides - 1,
            u.len()
        )));
    }
    Ok(())
}

/// Smallest even `m` for which [`assemble_symmetric`] accepts `tau2`.
pub fn min_symmetric_target(tau2: i64) -> Result<i64> {
    let m = build_m_tau(tau2, MTauMode::Quarter)?;
    let l = quarter_run(tau2)?;
    // 4 (v(2M) + v(triangle) + 5 l) in doubled-area units
    Ok(4 * (2 * m.area2() + 2 * l * l + 5 * l))
}

/// A centrally symmetric polygon of doubled area `m` built around the
/// choice-dependent base.
pub fn assemble_symmetric(
    tau2: i64,
    m: i64,
    u: &ChoiceVector,
) -> Result<(LatticePolygon, AssemblyTrace)> {
    let edges = short_edges(tau2, MTauMode::Quarter)?;
    check_choice(u, edges.len())?;
    if m <= 0 || m % 2 != 0 {
        return Err(Error::invalid("target doubled area must be positive and even"));
    }
    let minimal = min_symmetric_target(tau2)?;
    if m < minimal {
        return Err(Error::Infeasible { target: m, minimal });
    }
    let l = quarter_run(tau2)?;
    let side = 2 * l;

    let sides = doubled_sides(p(side, 0), &edges);
    let mut base_pts = pick_points(&sides, u);
    base_pts.push(LatticePoint::ORIGIN);
    let base = hull(base_pts)?;

    let x2 = m / 2 - base.area2() - side * side;
    let j = Integer::div_floor(&(x2 - side), &(4 * side));
    let mu2 = x2 - 4 * side * j;
    if j < 1 || mu2 < side || mu2 > side * side {
        return Err(Error::AssemblyMismatch(alloc::format!(
            "padding j = {j}, 2mu = {mu2} out of range for side {side}"
        )));
    }
    let sweep = lemma2_polygon(side, mu2)?;
    let sweep: Vec<LatticePoint> = sweep.vertices().iter().map(|v| p(-v.x, v.y)).collect();

    let shift = p(0, j);
    let mut upper: Vec<LatticePoint> = [p(-side, 0), p(side, 0), p(-side, j), p(side, j)].into();
    upper.extend(sweep.iter().map(|&v| v + shift));
    upper.extend(base.vertices().iter().map(|&v| v + shift));
    let all: Vec<LatticePoint> = upper.iter().flat_map(|&v| [v, -v]).collect();
    let poly = hull(all)?;

    let stats = poly.pick_stats();
    let run = poly.max_collinear_run().length as i64;
    let (symmetric, _) = poly.is_centrally_symmetric();
    if !symmetric || stats.area2 != m || run != 2 * (j + side) + 1 {
        return Err(Error::AssemblyMismatch(alloc::format!(
            "assembled polygon has area2 {}, run {run}, symmetric {symmetric}",
            stats.area2
        )));
    }
    let sweep_poly = hull(sweep)?;
    let block = hull(upper.iter().copied())?;
    let part_sizes = alloc::vec![
        ("base", base.pick_stats().total),
        ("sweep", sweep_poly.pick_stats().total),
        ("rows", (2 * side + 1) * (j + 1)),
        ("half", block.pick_stats().total),
        ("total", stats.total),
    ];
    let trace = AssemblyTrace {
        tau2,
        target: m,
        padding: Padding::Symmetric { j, mu2 },
        base,
        part_sizes,
    };
    Ok((poly, trace))
}

/// `2M` in half mode placed above the x-axis, from the origin to `(n, 0)`.
fn upper_half_edges(tau2: i64) -> Result<Vec<LatticePoint>> {
    let v = short_edges(tau2, MTauMode::Half)?;
    Ok(v.iter().map(|e| p(e.x, -e.y)).collect())
}

/// Smallest `w` for which [`assemble_cardinality`] accepts `tau2`: the
/// lattice-point count of the doubled half-mode polygon.
pub fn min_cardinality_target(tau2: i64) -> Result<i64> {
    let m = build_m_tau(tau2, MTauMode::Half)?;
    let doubled = LatticePolygon::from_vertices(m.vertices().iter().map(|v| v.scale(2)))?;
    Ok(doubled.pick_stats().total)
}

/// A polygon with exactly `w` lattice points: the choice-dependent base on
/// top of a block of full rows and one partial row.
pub fn assemble_cardinality(
    tau2: i64,
    w: i64,
    u: &ChoiceVector,
) -> Result<(LatticePolygon, AssemblyTrace)> {
    let edges = upper_half_edges(tau2)?;
    check_choice(u, edges.len())?;
    let minimal = min_cardinality_target(tau2)?;
    if w < minimal {
        return Err(Error::Infeasible { target: w, minimal });
    }
    let sides = doubled_sides(LatticePoint::ORIGIN, &edges);
    let end = sides[sides.len() - 1][2];
    debug_assert_eq!(end.y, 0);
    let n = end.x;
    let base = hull(pick_points(&sides, u))?;
    let base_size = base.pick_stats().total;

    let (k, remainder) = Integer::div_rem(&(w - base_size), &(n + 1));
    let mut pts: Vec<LatticePoint> = base.vertices().to_vec();
    if k >= 1 {
        pts.extend([p(0, -1), p(n, -1), p(0, -k), p(n, -k)]);
    }
    if remainder >= 1 {
        pts.extend([p(0, -k - 1), p(remainder - 1, -k - 1)]);
    }
    let poly = hull(pts)?;
    let total = poly.pick_stats().total;
    if total != w {
        return Err(Error::AssemblyMismatch(alloc::format!(
            "assembled polygon has {total} lattice points instead of {w}"
        )));
    }
    let trace = AssemblyTrace {
        tau2,
        target: w,
        padding: Padding::Cardinality { n, k, remainder },
        base,
        part_sizes: alloc::vec![
            ("base", base_size),
            ("block", k * (n + 1) + remainder),
            ("total", total),
        ],
    };
    Ok((poly, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unimodular::canonical_form;
    use alloc::string::ToString;
    use alloc::collections::BTreeSet;

    fn verts(poly: &LatticePolygon) -> Vec<(i64, i64)> {
        poly.vertices().iter().map(|&v| v.into()).collect()
    }

    #[test]
    fn sweep_examples() {
        let q = lemma2_polygon(2, 2).unwrap();
        assert_eq!(verts(&q), [(0, 0), (2, 0), (1, 2), (0, 2)]);
        assert_eq!(q.area2(), 6);
        let s = lemma2_polygon(2, 4).unwrap();
        assert_eq!(verts(&s), [(0, 0), (2, 0), (2, 2), (0, 2)]);
        let areas: Vec<i64> = (3..=9).map(|k| lemma2_polygon(3, k).unwrap().area2()).collect();
        assert_eq!(areas, (12..=18).collect::<Vec<_>>());
        assert!(lemma2_polygon(3, 2).is_err());
        assert!(lemma2_polygon(3, 10).is_err());
        assert!(lemma2_polygon(1, 1).is_err());
    }

    #[test]
    fn sweep_order() {
        let ell = 5;
        let pieces: Vec<_> = (ell..=ell * ell).map(|k| SweepPiece::locate(ell, k).unwrap()).collect();
        assert_eq!(pieces[0], SweepPiece::Pentagon { j: 0 });
        assert_eq!(pieces[ell as usize], SweepPiece::Hexagon { i: 0, j: 0 });
        assert_eq!(pieces[2 * ell as usize - 1], SweepPiece::HexagonPrime { i: 0, j: 1 });
        assert_eq!(*pieces.last().unwrap(), SweepPiece::Hexagon { i: ell - 2, j: 0 });
    }

    #[test]
    fn m_tau_examples() {
        let q = build_m_tau(4, MTauMode::Quarter).unwrap();
        assert_eq!(verts(&q), [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]);
        let h = build_m_tau(4, MTauMode::Half).unwrap();
        assert_eq!(verts(&h), [(0, 0), (1, -1), (2, -1), (3, 0)]);
        assert!(build_m_tau(1, MTauMode::Half).is_err());
        for tau2 in 2..=30 {
            for mode in [MTauMode::Quarter, MTauMode::Half] {
                let poly = build_m_tau(tau2, mode).unwrap();
                let long = poly.edges().filter(|(a, b)| (*b - *a).lattice_length() > 1).count();
                assert!(long <= 2, "tau2 = {tau2}");
            }
        }
    }

    #[test]
    fn choice_vectors() {
        let all: Vec<_> = ChoiceVector::all(2).map(|c| c.to_string()).collect();
        assert_eq!(all, ["11", "12", "21", "22"]);
        assert!(ChoiceVector::new(alloc::vec![0]).is_err());
        assert_eq!(ChoiceVector::all(0).count(), 1);
    }

    #[test]
    fn symmetric_assembly_at_four() {
        assert_eq!(min_symmetric_target(4).unwrap(), 128);
        let mut forms = BTreeSet::new();
        for u in ChoiceVector::all(choice_len(4, MTauMode::Quarter).unwrap()) {
            let (poly, trace) = assemble_symmetric(4, 128, &u).unwrap();
            assert_eq!(poly.area2(), 128);
            assert!(poly.is_lattice_symmetric());
            assert!(matches!(trace.padding, Padding::Symmetric { j: 1, .. }));
            forms.insert(canonical_form(&poly));
        }
        assert_eq!(forms.len(), 4);
        let u = ChoiceVector::new(alloc::vec![1, 1]).unwrap();
        assert_eq!(
            assemble_symmetric(4, 126, &u).unwrap_err(),
            Error::Infeasible { target: 126, minimal: 128 }
        );
        assert!(assemble_symmetric(4, 129, &u).is_err());
        assert!(assemble_symmetric(4, 128, &ChoiceVector::new(alloc::vec![1]).unwrap()).is_err());
    }

    #[test]
    fn cardinality_assembly_at_four() {
        assert_eq!(min_cardinality_target(4).unwrap(), 15);
        let mut forms = BTreeSet::new();
        for u in ChoiceVector::all(2) {
            let (poly, trace) = assemble_cardinality(4, 20, &u).unwrap();
            assert_eq!(poly.pick_stats().total, 20);
            assert!(matches!(trace.padding, Padding::Cardinality { n: 6, .. }));
            forms.insert(canonical_form(&poly));
        }
        assert!(forms.len() >= 2);
        let u = ChoiceVector::new(alloc::vec![2, 2]).unwrap();
        assert_eq!(
            assemble_cardinality(4, 14, &u).unwrap_err(),
            Error::Infeasible { target: 14, minimal: 15 }
        );
    }
}
