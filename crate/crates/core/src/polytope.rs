//! Lattice polytopes in `Z^d` and the family `P(d, w, k)`.
//!
//! `P(d, w, k)` is the hull of the origin, `e_1 .. e_{d-1}`, the points
//! `-j e_d` for `j = 1 .. w-d-1` and the apex `(1, .., 1, k)`. It has exactly
//! `w` lattice points for every `k >= 1`, while its volume grows with `k`, so
//! the family contains infinitely many classes of the same cardinality.
//!
//! There is no general hull engine here. Membership is decided by an exact
//! rational feasibility problem, and volumes come from an explicit split into
//! simplices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type Q = Ratio<i128>;

/// Default cap on bounding-box cells scanned by [`lattice_count_d`].
pub const DEFAULT_CELL_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePointD(Vec<i64>);

impl LatticePointD {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("a lattice point needs at least one coordinate"));
        }
        Ok(LatticePointD(coords))
    }

    pub fn origin(d: usize) -> Self {
        LatticePointD(vec![0; d])
    }

    /// `scale · e_axis` (axes counted from 0).
    pub fn axis(d: usize, axis: usize, scale: i64) -> Self {
        let mut c = vec![0; d];
        c[axis] = scale;
        LatticePointD(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    fn sub(&self, other: &LatticePointD) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }
}

impl fmt::Display for LatticePointD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Exact volume with a denominator dividing `d!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalVolume {
    num: i64,
    den: i64,
}

impl RationalVolume {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 || num < 0 {
            return Err(Error::invalid("volume needs a nonnegative numerator and positive denominator"));
        }
        let g = num.gcd(&den);
        Ok(RationalVolume { num: num / g, den: den / g })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// `d! · volume`, which is an integer for lattice polytopes.
    pub fn normalized(&self, d: usize) -> Option<i64> {
        let f = factorial(d);
        (f % self.den == 0).then(|| self.num * (f / self.den))
    }
}

impl Ord for RationalVolume {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for RationalVolume {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl core::ops::Add for RationalVolume {
    type Output = RationalVolume;
    fn add(self, rhs: RationalVolume) -> RationalVolume {
        let den = self.den.lcm(&rhs.den);
        let num = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        RationalVolume::new(num, den).expect("sum of volumes")
    }
}

impl fmt::Display for RationalVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

pub fn factorial(d: usize) -> i64 {
    (1..=d as i64).product()
}

/// A full-dimensional lattice polytope given by a generating point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytopeD {
    dim: usize,
    generators: Vec<LatticePointD>,
}

impl LatticePolytopeD {
    /// The hull of `generators`. All points must share one dimension and
    /// their affine hull must be the whole space.
    pub fn new(generators: Vec<LatticePointD>) -> Result<Self> {
        let dim = generators
            .first()
            .map(LatticePointD::dim)
            .ok_or_else(|| Error::invalid("a polytope needs generators"))?;
        if generators.iter().any(|g| g.dim() != dim) {
            return Err(Error::invalid("generators have mixed dimensions"));
        }
        let diffs: Vec<Vec<i64>> = generators[1..].iter().map(|g| g.sub(&generators[0])).collect();
        if rank(&diffs) != dim {
            return Err(Error::invalid("generators do not span the space"));
        }
        Ok(LatticePolytopeD { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticePointD] {
        &self.generators
    }

    /// Generators that are extreme points of the hull, in generator order.
    pub fn vertices(&self) -> Vec<LatticePointD> {
        let mut out = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let others: Vec<&LatticePointD> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, h)| j != i && h != g)
                .map(|(_, h)| h)
                .collect();
            if !out.contains(g) && !in_hull(&others, g.coords()) {
                out.push(g.clone());
            }
        }
        out
    }

    pub fn contains(&self, point: &[i64]) -> bool {
        let refs: Vec<&LatticePointD> = self.generators.iter().collect();
        in_hull(&refs, point)
    }

    /// Whether `point` lies in the interior.
    pub fn contains_interior(&self, point: &[i64]) -> bool {
        let refs: Vec<&LatticePointD> = self.generators.iter().collect();
        interior_depth(&refs, point).is_some_and(|depth| depth > Q::zero())
    }

    /// Per-axis `(min, max)` of the generators.
    pub fn bounding_box(&self) -> Vec<(i64, i64)> {
        (0..self.dim)
            .map(|a| {
                let it = self.generators.iter().map(|g| g.0[a]);
                (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
            })
            .collect()
    }

    /// `t · P`.
    pub fn dilate(&self, t: i64) -> LatticePolytopeD {
        LatticePolytopeD {
            dim: self.dim,
            generators: self
                .generators
                .iter()
                .map(|g| LatticePointD(g.0.iter().map(|c| c * t).collect()))
                .collect(),
        }
    }

    /// Lattice points, ascending lexicographically. Errors if the bounding
    /// box has more than `budget` cells.
    pub fn lattice_points(&self, budget: u64) -> Result<Vec<Vec<i64>>> {
        let bbox = self.bounding_box();
        let cells = bbox
            .iter()
            .try_fold(1u64, |acc, &(lo, hi)| acc.checked_mul((hi - lo + 1) as u64));
        match cells {
            Some(c) if c <= budget => {}
            _ => return Err(Error::BudgetExceeded { budget }),
        }
        let mut out = Vec::new();
        let mut cur: Vec<i64> = bbox.iter().map(|&(lo, _)| lo).collect();
        loop {
            if self.contains(&cur) {
                out.push(cur.clone());
            }
            // odometer, last axis fastest
            let mut axis = self.dim;
            loop {
                if axis == 0 {
                    return Ok(out);
                }
                axis -= 1;
                if cur[axis] < bbox[axis].1 {
                    cur[axis] += 1;
                    break;
                }
                cur[axis] = bbox[axis].0;
            }
        }
    }
}

/// Lattice points with an interior-point flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeCount {
    pub total: i64,
    pub interior: i64,
}

impl LatticeCount {
    pub fn has_interior_point(&self) -> bool {
        self.interior > 0
    }
}

/// `|P ∩ Z^d|` by scanning the bounding box with exact membership tests.
pub fn lattice_count_d(p: &LatticePolytopeD, budget: u64) -> Result<i64> {
    Ok(p.lattice_points(budget)?.len() as i64)
}

/// Lattice points and interior lattice points.
pub fn lattice_count_detailed(p: &LatticePolytopeD, budget: u64) -> Result<LatticeCount> {
    let pts = p.lattice_points(budget)?;
    let interior = pts.iter().filter(|x| p.contains_interior(x)).count() as i64;
    Ok(LatticeCount { total: pts.len() as i64, interior })
}

/// Volume of the simplex spanned by `d + 1` points in `Z^d`.
pub fn simplex_volume(vertices: &[LatticePointD]) -> Result<RationalVolume> {
    let d = vertices.first().map(LatticePointD::dim).unwrap_or(0);
    if vertices.len() != d + 1 || vertices.iter().any(|v| v.dim() != d) {
        return Err(Error::invalid("a simplex in Z^d needs d + 1 points of dimension d"));
    }
    let rows: Vec<Vec<i64>> = vertices[1..].iter().map(|v| v.sub(&vertices[0])).collect();
    let det = determinant(&rows);
    let det = i64::try_from(det.abs()).map_err(|_| Error::invalid("determinant overflows"))?;
    RationalVolume::new(det, factorial(d))
}

fn check_family(d: i64, w: i64, k: i64) -> Result<()> {
    if d < 3 {
        return Err(Error::invalid("dimension must be at least 3"));
    }
    if w < d + 1 {
        return Err(Error::invalid("cardinality must be at least d + 1"));
    }
    if k < 1 {
        return Err(Error::invalid("apex height must be at least 1"));
    }
    Ok(())
}

/// Generators of `P(d, w, k)`: origin, `e_1 .. e_{d-1}`, `-j e_d` for
/// `j = 1 .. w-d-1`, and the apex `(1, .., 1, k)`.
pub fn pdwk_vertices(d: i64, w: i64, k: i64) -> Result<LatticePolytopeD> {
    check_family(d, w, k)?;
    let n = d as usize;
    let mut g = vec![LatticePointD::origin(n)];
    g.extend((0..n - 1).map(|a| LatticePointD::axis(n, a, 1)));
    g.extend((1..w - d).map(|j| LatticePointD::axis(n, n - 1, -j)));
    let mut apex = vec![1; n];
    apex[n - 1] = k;
    g.push(LatticePointD(apex));
    LatticePolytopeD::new(g)
}

/// Smallest apex height for which the two-simplex split holds.
pub fn split_threshold(d: i64, w: i64) -> i64 {
    (d - 2) * (w - d - 1)
}

/// Volume of `P(d, w, k)` as the upper simplex under the apex plus the
/// stack of unit slabs along `-e_d`.
pub fn pdwk_volume(d: i64, w: i64, k: i64) -> Result<RationalVolume> {
    check_family(d, w, k)?;
    let threshold = split_threshold(d, w);
    if k < threshold {
        return Err(Error::SplitConditionUnmet { k, threshold });
    }
    let n = d as usize;
    let base: Vec<LatticePointD> = (0..n - 1).map(|a| LatticePointD::axis(n, a, 1)).collect();
    let mut apex = vec![1; n];
    apex[n - 1] = k;

    let mut upper = vec![LatticePointD::origin(n)];
    upper.extend(base.iter().cloned());
    upper.push(LatticePointD(apex));
    let mut total = simplex_volume(&upper)?;
    for j in 1..w - d {
        let mut slab = base.clone();
        slab.push(LatticePointD::axis(n, n - 1, -(j - 1)));
        slab.push(LatticePointD::axis(n, n - 1, -j));
        total = total + simplex_volume(&slab)?;
    }
    let closed = RationalVolume::new(k + w - d - 1, factorial(n))?;
    if total != closed {
        return Err(Error::AssemblyMismatch(alloc::format!(
            "split volume {total} differs from {closed}"
        )));
    }
    Ok(total)
}

/// One member of an infinite family of pairwise inequivalent polytopes with
/// the same lattice-point count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub k: i64,
    pub polytope: LatticePolytopeD,
    pub volume: RationalVolume,
    /// Lattice-point count, `None` when the scan exceeded the budget.
    pub count: Option<i64>,
}

/// `P(d, w, k)` for the `n` smallest `k >= max(1, (d-2)(w-d-1))`. Volumes
/// strictly increase with `k`, so the members are pairwise inequivalent.
pub fn theorem4_witnesses(d: i64, w: i64, n: i64, budget: u64) -> Result<Vec<Witness>> {
    check_family(d, w, 1)?;
    if n < 1 {
        return Err(Error::invalid("need at least one witness"));
    }
    let first = split_threshold(d, w).max(1);
    (first..first + n)
        .map(|k| {
            let polytope = pdwk_vertices(d, w, k)?;
            let volume = pdwk_volume(d, w, k)?;
            let count = match lattice_count_d(&polytope, budget) {
                Ok(c) if c == w => Some(c),
                Ok(c) => {
                    return Err(Error::AssemblyMismatch(alloc::format!(
                        "P({d},{w},{k}) has {c} lattice points"
                    )))
                }
                Err(Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(Witness { k, polytope, volume, count })
        })
        .collect()
}

fn to_q(v: i64) -> Q {
    Q::from_integer(v as i128)
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&v| to_q(v)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let f = m[i][c] / m[r][c];
            for j in c..cols {
                let t = m[r][j] * f;
                m[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

fn determinant(rows: &[Vec<i64>]) -> i128 {
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&v| to_q(v)).collect()).collect();
    let n = m.len();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for i in c + 1..n {
            let f = m[i][c] / m[c][c];
            for j in c..n {
                let t = m[c][j] * f;
                m[i][j] -= t;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// `x ∈ conv(points)`: is there `λ >= 0` with `Σλ = 1` and `Σλ p = x`?
fn in_hull(points: &[&LatticePointD], x: &[i64]) -> bool {
    let (a, b) = combination_system(points, x, false);
    let cost = vec![Q::zero(); a[0].len()];
    Simplex::new(a, b).minimize(&cost).is_some()
}

/// Largest `δ` with `x = Σ(μ_i + δ) p_i`, `μ >= 0`, weights summing to 1.
/// Positive exactly when `x` is interior (the points span the space).
fn interior_depth(points: &[&LatticePointD], x: &[i64]) -> Option<Q> {
    let (a, b) = combination_system(points, x, true);
    let mut cost = vec![Q::zero(); a[0].len()];
    *cost.last_mut()? = -Q::one();
    Simplex::new(a, b).minimize(&cost).map(|v| -v)
}

/// Rows `Σλ = 1` and `Σλ p = x`; with `depth` an extra column for `δ`.
fn combination_system(points: &[&LatticePointD], x: &[i64], depth: bool) -> (Vec<Vec<Q>>, Vec<Q>) {
    let n = points.len();
    let cols = n + usize::from(depth);
    let mut a = Vec::with_capacity(x.len() + 1);
    let mut b = Vec::with_capacity(x.len() + 1);
    let mut ones = vec![Q::one(); n];
    if depth {
        ones.push(to_q(n as i64));
    }
    a.push(ones);
    b.push(Q::one());
    for (axis, &xa) in x.iter().enumerate() {
        let mut row: Vec<Q> = points.iter().map(|p| to_q(p.0[axis])).collect();
        if depth {
            row.push(to_q(points.iter().map(|p| p.0[axis]).sum()));
        }
        debug_assert_eq!(row.len(), cols);
        a.push(row);
        b.push(to_q(xa));
    }
    (a, b)
}

/// Dense two-phase simplex over exact rationals, Bland's rule.
/// Solves `min c·x` subject to `A x = b`, `x >= 0`.
struct Simplex {
    /// Rows of `[A | I | b]`, artificial columns after the structural ones.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    structural: usize,
}

impl Simplex {
    fn new(a: Vec<Vec<Q>>, b: Vec<Q>) -> Self {
        let m = a.len();
        let structural = a.first().map_or(0, Vec::len);
        let rows = a
            .into_iter()
            .zip(b)
            .enumerate()
            .map(|(i, (mut row, rhs))| {
                let flip = rhs.is_negative();
                if flip {
                    row.iter_mut().for_each(|v| *v = -*v);
                }
                row.extend((0..m).map(|j| if i == j { Q::one() } else { Q::zero() }));
                row.push(if flip { -rhs } else { rhs });
                row
            })
            .collect();
        Simplex { rows, basis: (structural..structural + m).collect(), structural }
    }

    fn rhs(&self, i: usize) -> Q {
        *self.rows[i].last().expect("rhs column")
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        self.rows[r].iter_mut().for_each(|v| *v /= p);
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                row.iter_mut().zip(&pivot_row).for_each(|(v, &pv)| *v -= f * pv);
            }
        }
        self.basis[r] = c;
    }

    /// Optimises over columns `0..allowed`; `None` if unbounded.
    fn optimise(&mut self, cost: &[Q], allowed: usize) -> Option<()> {
        loop {
            let reduced = |j: usize| {
                self.rows
                    .iter()
                    .zip(&self.basis)
                    .fold(cost[j], |acc, (row, &bi)| acc - cost[bi] * row[j])
            };
            let Some(enter) = (0..allowed).find(|&j| !self.basis.contains(&j) && reduced(j).is_negative())
            else {
                return Some(());
            };
            let leave = (0..self.rows.len())
                .filter(|&i| self.rows[i][enter].is_positive())
                .min_by(|&i, &k| {
                    let ri = self.rhs(i) / self.rows[i][enter];
                    let rk = self.rhs(k) / self.rows[k][enter];
                    ri.cmp(&rk).then(self.basis[i].cmp(&self.basis[k]))
                })?;
            self.pivot(leave, enter);
        }
    }

    /// Optimal value, or `None` when infeasible.
    fn minimize(mut self, cost: &[Q]) -> Option<Q> {
        let m = self.rows.len();
        let total = self.structural + m;
        let mut phase1 = vec![Q::zero(); total];
        phase1[self.structural..].iter_mut().for_each(|v| *v = Q::one());
        self.optimise(&phase1, total)?;
        let infeasibility = (0..m)
            .filter(|&i| self.basis[i] >= self.structural)
            .fold(Q::zero(), |acc, i| acc + self.rhs(i));
        if !infeasibility.is_zero() {
            return None;
        }
        // drive zero-valued artificials out of the basis
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.structural {
                match (0..self.structural).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        let mut full = cost.to_vec();
        full.resize(total, Q::zero());
        self.optimise(&full, self.structural)?;
        Some(
            self.rows
                .iter()
                .zip(&self.basis)
                .fold(Q::zero(), |acc, (row, &bi)| acc + full[bi] * *row.last().expect("rhs")),
        )
    }
}
