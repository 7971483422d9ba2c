//! Exact planar lattice geometry.

mod collinear;
mod point;
mod polygon;
mod primitive;

pub use collinear::{CollinearRun, Line};
pub use point::{orient, HalfPoint, LatticePoint, LatticeSet};
pub use polygon::{convex_hull, hull_closed, Degenerate, Hull, LatticePolygon, PickStats};
pub use primitive::{cmp_polar_angle, primitive_vectors, Region};

pub(crate) use collinear::longest_run;
pub(crate) use polygon::{area2_and_boundary, hull_of_sorted, lattice_count_of_cycle};

/// Rabinowitz's bound: a polygon with at least `m^2 + 1` lattice points has
/// `m + 1` collinear ones. Returns whether the implication holds for `p`.
pub fn rabinowitz_holds(p: &LatticePolygon, m: i64) -> bool {
    let total = p.pick_stats().total;
    total < m * m + 1 || p.max_collinear_run().length as i64 >= m + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().map(|&p| p.into()).collect()
    }

    fn poly(v: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_vertices(pts(v)).unwrap()
    }

    #[test]
    fn hull_drops_edge_midpoint() {
        let s = LatticeSet::new(pts(&[(0, 0), (2, 0), (0, 2), (1, 1)]));
        let h = convex_hull(&s).unwrap().polygon().unwrap();
        assert_eq!(h.vertices(), pts(&[(0, 0), (2, 0), (0, 2)]).as_slice());
    }

    #[test]
    fn hull_of_unit_square() {
        let s = LatticeSet::new(pts(&[(1, 1), (0, 0), (0, 1), (1, 0)]));
        let h = convex_hull(&s).unwrap().polygon().unwrap();
        assert_eq!(h.vertices(), pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]).as_slice());
    }

    #[test]
    fn degenerate_hulls() {
        let seg = LatticeSet::new(pts(&[(0, 0), (3, 0)]));
        assert_eq!(
            convex_hull(&seg).unwrap(),
            Hull::Degenerate(Degenerate::Segment((0, 0).into(), (3, 0).into()))
        );
        let seg = LatticeSet::new(pts(&[(0, 0), (1, 1), (2, 2), (3, 3)]));
        assert!(matches!(
            convex_hull(&seg).unwrap(),
            Hull::Degenerate(Degenerate::Segment(..))
        ));
        let one = LatticeSet::new(pts(&[(5, -2)]));
        assert_eq!(
            convex_hull(&one).unwrap(),
            Hull::Degenerate(Degenerate::Point((5, -2).into()))
        );
        assert!(matches!(
            convex_hull(&LatticeSet::default()),
            Err(crate::Error::InvalidInput(_))
        ));
    }

    #[test]
    fn from_vertices_validates() {
        assert!(LatticePolygon::from_vertices(pts(&[(0, 0), (0, 1), (1, 0)])).is_err());
        assert!(LatticePolygon::from_vertices(pts(&[(0, 0), (1, 0), (2, 0), (0, 1)])).is_err());
        assert!(LatticePolygon::from_vertices(pts(&[(0, 0), (1, 0)])).is_err());
        // pentagram order: every turn is a left turn but it winds twice
        let star = pts(&[(0, 0), (4, 2), (-1, 3), (5, 3), (1, 6)]);
        let star: Vec<_> = {
            let h = LatticePolygon::hull_of(star.clone()).unwrap();
            let v = h.vertices();
            (0..5).map(|i| v[(2 * i) % 5]).collect()
        };
        assert!(LatticePolygon::from_vertices(star).is_err());
        // any rotation is accepted and normalised
        let p = poly(&[(1, 1), (0, 1), (0, 0), (1, 0)]);
        assert_eq!(p.vertices()[0], LatticePoint::new(0, 0));
    }

    #[test]
    fn pick_examples() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(
            t.pick_stats(),
            PickStats { area2: 1, boundary: 3, interior: 0, total: 3 }
        );
        let sq = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(
            sq.pick_stats(),
            PickStats { area2: 8, boundary: 8, interior: 1, total: 9 }
        );
        // quadrilateral from the area sweep at ell = 2, j = 0
        let q = poly(&[(0, 0), (2, 0), (1, 2), (0, 2)]);
        assert_eq!(q.pick_stats().area2, 6);
    }

    #[test]
    fn rows_and_points() {
        let t = poly(&[(0, 0), (3, 0), (0, 1)]);
        assert_eq!(t.rows(), vec![(0, 0, 3), (1, 0, 0)]);
        assert_eq!(t.lattice_points().len(), 5);
        let slanted = poly(&[(-1, -1), (1, 0), (0, 1)]);
        assert_eq!(slanted.lattice_points(), pts(&[(-1, -1), (0, 0), (0, 1), (1, 0)]));
        assert!(slanted.contains((0, 0).into()));
        assert!(!slanted.contains((1, 1).into()));
    }

    #[test]
    fn collinear_runs() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(sq.max_collinear_run().length, 2);
        let t = poly(&[(0, 0), (3, 0), (0, 1)]);
        let run = t.max_collinear_run();
        assert_eq!(run.length, 4);
        assert_eq!(run.witness.direction, LatticePoint::new(1, 0));
        assert!(run.witness.contains((2, 0).into()));
        let diag = poly(&[(0, 0), (1, 0), (3, 3), (2, 3)]);
        // (0,0),(1,1),(2,2),(3,3)
        assert_eq!(diag.max_collinear_run().length, 4);
    }

    #[test]
    fn central_symmetry() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let (flag, c) = sq.is_centrally_symmetric();
        assert!(flag);
        let c = c.unwrap();
        assert_eq!((c.x2, c.y2), (1, 1));
        assert!(!c.is_lattice());
        assert!(!sq.is_lattice_symmetric());

        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(t.is_centrally_symmetric(), (false, None));

        let hex = poly(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]);
        let (flag, c) = hex.is_centrally_symmetric();
        assert!(flag);
        assert_eq!(c.unwrap().to_lattice(), Some(LatticePoint::ORIGIN));
        assert!(hex.is_lattice_symmetric());

        // even vertex count but not symmetric
        let trap = poly(&[(0, 0), (2, 0), (1, 1), (0, 1)]);
        assert_eq!(trap.symmetry_center(), None);
    }

    #[test]
    fn hull_closure() {
        assert!(hull_closed(&LatticeSet::new(pts(&[(0, 0), (1, 0), (0, 1)]))));
        assert!(!hull_closed(&LatticeSet::new(pts(&[(0, 0), (2, 0)]))));
        assert!(hull_closed(&LatticeSet::new(pts(&[(0, 0), (1, 0), (0, 1), (1, 1)]))));
        assert!(!hull_closed(&LatticeSet::new(pts(&[(0, 0), (2, 0), (0, 2)]))));
        assert!(hull_closed(&LatticeSet::new(pts(&[(7, 7)]))));
        assert!(!hull_closed(&LatticeSet::default()));
    }

    #[test]
    fn primitive_vector_examples() {
        let q = primitive_vectors(4, Region::QuarterNegXPosY).unwrap();
        assert_eq!(q, pts(&[(0, 1), (-1, 1), (-1, 0)]));
        let sum = q.iter().fold(LatticePoint::ORIGIN, |a, &b| a + b);
        assert_eq!(sum, LatticePoint::new(-2, 2));

        let v = primitive_vectors(4, Region::OpenHalfPosX).unwrap();
        assert_eq!(v, pts(&[(1, -1), (1, 0), (1, 1)]));

        assert!(primitive_vectors(0, Region::OpenHalfPosX).is_err());
        assert_eq!(primitive_vectors(1, Region::QuarterNegXPosY).unwrap().len(), 2);
    }

    #[test]
    fn rabinowitz_examples() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(rabinowitz_holds(&sq, 1));
        let t = poly(&[(0, 0), (3, 0), (0, 1)]);
        assert_eq!(t.pick_stats().total, 5);
        assert!(rabinowitz_holds(&t, 2));
    }
}
