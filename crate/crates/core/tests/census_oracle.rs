//! The row-by-row census against a vertex-growth enumerator that
//! deduplicates with the edge-matching oracle only.

use std::collections::{BTreeSet, HashMap};

use latclass_core::enumeration::census_table;
use latclass_core::{
    canonical_form, equivalence_oracle, invariant_vector, CensusMode, InvariantVector,
    LatticePoint, LatticePolygon,
};

const MAX_W: i64 = 11;

#[derive(Default)]
struct Classes {
    buckets: HashMap<InvariantVector, Vec<LatticePolygon>>,
}

impl Classes {
    fn insert(&mut self, p: LatticePolygon) {
        let bucket = self.buckets.entry(invariant_vector(&p)).or_default();
        if !bucket.iter().any(|q| equivalence_oracle(q, &p).is_some()) {
            bucket.push(p);
        }
    }

    fn all(&self) -> Vec<&LatticePolygon> {
        self.buckets.values().flatten().collect()
    }
}

/// Lattice points of `p` moved so that they contain `o, e1, e2`.
fn normalized_points(p: &LatticePolygon) -> Vec<LatticePoint> {
    let pts = p.lattice_points();
    for &a in &pts {
        for &b in &pts {
            for &c in &pts {
                let (u, v) = (b - a, c - a);
                if u.cross(v) == 1 {
                    // inverse of the matrix with columns u, v
                    return pts
                        .iter()
                        .map(|&q| {
                            let d = q - a;
                            LatticePoint::new(v.y * d.x - v.x * d.y, -u.y * d.x + u.x * d.y)
                        })
                        .collect();
                }
            }
        }
    }
    unreachable!("every lattice polygon contains a unimodular triangle")
}

fn grow() -> Vec<Classes> {
    let mut levels = vec![Classes::default()];
    let unit = LatticePolygon::hull_of([(0, 0), (1, 0), (0, 1)].map(LatticePoint::from)).unwrap();
    levels[0].insert(unit);
    for w in 4..=MAX_W {
        let k = 2 * w - 5;
        let mut next = Classes::default();
        // from a run of w - 1 collinear points
        let seg = (0..w - 1).map(|x| LatticePoint::new(x, 0)).chain([LatticePoint::new(0, 1)]);
        next.insert(LatticePolygon::hull_of(seg).unwrap());
        for p in levels.last().unwrap().all() {
            let pts = normalized_points(p);
            for x in -k..=k {
                for y in -k..=k {
                    let q = LatticePoint::new(x, y);
                    if pts.contains(&q) {
                        continue;
                    }
                    let cand = LatticePolygon::hull_of(pts.iter().copied().chain([q])).unwrap();
                    if cand.pick_stats().total == w {
                        next.insert(cand);
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

#[test]
fn census_agrees_with_growth_oracle() {
    let levels = grow();
    let table = census_table(CensusMode::Cardinality, 3..=MAX_W, false).unwrap();
    let sym = census_table(CensusMode::Cardinality, 3..=MAX_W, true).unwrap();
    for ((level, row), sym_row) in levels.iter().zip(&table).zip(&sym) {
        let reps = level.all();
        assert_eq!(reps.len(), row.count(), "w = {}", row.parameter);
        let forms: BTreeSet<_> = reps.iter().map(|p| canonical_form(p)).collect();
        let census: BTreeSet<_> = row.classes.iter().cloned().collect();
        assert_eq!(forms, census, "w = {}", row.parameter);
        let symmetric = reps.iter().filter(|p| p.is_lattice_symmetric()).count();
        assert_eq!(symmetric, sym_row.count(), "w = {}", row.parameter);
    }

    // doubled area m needs at most m + 2 lattice points
    let areas = census_table(CensusMode::Area, 1..=MAX_W - 2, false).unwrap();
    for row in areas {
        let m = row.parameter;
        let n = levels.iter().flat_map(Classes::all).filter(|p| p.area2() == m).count();
        assert_eq!(n, row.count(), "m = {m}");
    }
}
