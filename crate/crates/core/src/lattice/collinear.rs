use alloc::vec::Vec;

use super::point::LatticePoint;
use super::polygon::LatticePolygon;

/// A lattice line, given by one of its points and a primitive direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Line {
    pub point: LatticePoint,
    pub direction: LatticePoint,
}

impl Line {
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.direction.cross(p - self.point) == 0
    }
}

/// Longest set of collinear lattice points, `ℓ(P)`, with one line realising
/// it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollinearRun {
    pub length: usize,
    pub witness: Line,
}

/// Direction with a fixed sign: `x > 0`, or `x == 0` and `y > 0`.
fn sign_normalized(d: LatticePoint) -> LatticePoint {
    let d = d.primitive();
    if d.x < 0 || (d.x == 0 && d.y < 0) {
        -d
    } else {
        d
    }
}

/// Longest collinear run in a sorted list of at least two points.
///
/// For each point only the points after it are examined, so each line is
/// counted from its smallest point.
pub(crate) fn longest_run(points: &[LatticePoint]) -> CollinearRun {
    let mut best = CollinearRun {
        length: points.len().min(1),
        witness: Line {
            point: points.first().copied().unwrap_or_default(),
            direction: LatticePoint::new(1, 0),
        },
    };
    let mut dirs: Vec<LatticePoint> = Vec::with_capacity(points.len());
    for (i, &p) in points.iter().enumerate() {
        if points.len() - i <= best.length {
            break;
        }
        dirs.clear();
        dirs.extend(points[i + 1..].iter().map(|&q| sign_normalized(q - p)));
        dirs.sort_unstable();
        let mut j = 0;
        while j < dirs.len() {
            let mut k = j;
            while k < dirs.len() && dirs[k] == dirs[j] {
                k += 1;
            }
            if k - j + 1 > best.length {
                best = CollinearRun {
                    length: k - j + 1,
                    witness: Line {
                        point: p,
                        direction: dirs[j],
                    },
                };
            }
            j = k;
        }
    }
    best
}

impl LatticePolygon {
    /// `ℓ(P)`: the maximum number of collinear points of `P ∩ Z^2`, and a
    /// line attaining it. When several lines attain the maximum, the one
    /// through the smallest point (then smallest direction) is returned.
    ///
    /// Each primitive direction `v` is mapped to `(1, 0)` and the longest row
    /// of the image is read off. A run of `L` points along `v` has
    /// `(L - 1)|v| <= diam(P)`, which bounds the directions worth trying.
    pub fn max_collinear_run(&self) -> CollinearRun {
        self.run_by_directions(false)
    }

    fn run_by_directions(&self, force: bool) -> CollinearRun {
        let vs = self.vertices();
        let diam2 = vs
            .iter()
            .flat_map(|&a| vs.iter().map(move |&b| (b - a).norm2()))
            .max()
            .unwrap_or(0);
        let mut best = CollinearRun {
            length: 0,
            witness: Line { point: vs[0], direction: LatticePoint::new(1, 0) },
        };
        let seeds = [(1, 0), (0, 1), (1, 1), (1, -1)].map(LatticePoint::from);
        for d in seeds {
            self.scan_direction(d, &mut best);
        }
        // ties still matter for the witness, hence best - 1
        let bound = |best: &CollinearRun| diam2 / ((best.length as i64 - 1).max(1)).pow(2);
        // thin polygons leave many directions open; pairs are cheaper there
        let total = super::polygon::lattice_count_of_cycle(vs);
        let scan_cost = bound(&best) * num_integer::Roots::sqrt(&diam2).max(1);
        if !force && total * total <= scan_cost {
            return longest_run(&self.lattice_points());
        }
        let mut a = 0;
        while a * a <= bound(&best) {
            let reach = num_integer::Roots::sqrt(&(bound(&best) - a * a));
            let bs = if a == 0 { 1..=1 } else { -reach..=reach };
            for b in bs {
                let d = LatticePoint::new(a, b);
                if a * a + b * b <= bound(&best) && d.lattice_length() == 1 && !seeds.contains(&d) {
                    self.scan_direction(d, &mut best);
                }
            }
            a += 1;
        }
        best
    }

    fn scan_direction(&self, d: LatticePoint, best: &mut CollinearRun) {
        let e = num_integer::Integer::extended_gcd(&d.x, &d.y);
        let (p, q) = if e.gcd == 1 { (e.x, e.y) } else { (-e.x, -e.y) };
        // [[p, q], [-b, a]] sends d to (1, 0); its inverse is [[a, -q], [b, p]]
        let image: Vec<LatticePoint> = self
            .vertices()
            .iter()
            .map(|v| LatticePoint::new(p * v.x + q * v.y, -d.y * v.x + d.x * v.y))
            .collect();
        let back = |x: i64, y: i64| LatticePoint::new(d.x * x - q * y, d.y * x + p * y);
        for (y, lo, hi) in LatticePolygon::from_ccw_cycle(image).rows() {
            let len = (hi - lo + 1) as usize;
            if len < best.length {
                continue;
            }
            let start = back(lo, y).min(back(hi, y));
            let cand = Line { point: start, direction: d };
            if len > best.length
                || (start, d) < (best.witness.point, best.witness.direction)
            {
                *best = CollinearRun { length: len, witness: cand };
            }
        }
    }
}
