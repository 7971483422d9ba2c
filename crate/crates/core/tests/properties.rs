use latclass_core::lattice::LatticeSet;
use latclass_core::unimodular::{canonical_form_in, equivalence_oracle_in};
use latclass_core::{
    canonical_form, equivalence_oracle, hull_closed, invariant_vector, rabinowitz_holds,
    EquivalenceGroup, LatticePoint, LatticePolygon, UnimodularAffineMap,
};
use proptest::prelude::*;

fn polygon() -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec((-20i64..=20, -20i64..=20), 3..12).prop_filter_map("flat", |pts| {
        LatticePolygon::hull_of(pts.into_iter().map(LatticePoint::from))
    })
}

/// Products of two shears, optionally reflected, with a translation.
fn unimodular() -> impl Strategy<Value = UnimodularAffineMap> {
    (-5i64..=5, -5i64..=5, any::<bool>(), any::<bool>(), -30i64..=30, -30i64..=30).prop_map(
        |(a, b, flip, swap, tx, ty)| {
            let m = [[1 + a * b, a], [b, 1]];
            let m = if swap { [m[1], m[0]] } else { m };
            let m = if flip { [[-m[0][0], -m[0][1]], m[1]] } else { m };
            UnimodularAffineMap::new(m, LatticePoint::new(tx, ty)).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pick_identity(p in polygon()) {
        let s = p.pick_stats();
        prop_assert_eq!(s.area2, s.boundary + 2 * s.interior - 2);
        prop_assert_eq!(s.total, p.row_scan_count());
    }

    #[test]
    fn hull_of_lattice_points_is_closed(p in polygon()) {
        let pts = p.lattice_points();
        prop_assert!(hull_closed(&LatticeSet::new(pts.iter().copied())));
        prop_assert_eq!(LatticePolygon::hull_of(pts).unwrap(), p.clone());
        prop_assert_eq!(LatticePolygon::hull_of(p.vertices().to_vec()).unwrap(), p);
    }

    #[test]
    fn canonical_form_is_invariant(p in polygon(), sigma in unimodular()) {
        let q = sigma.apply(&p);
        prop_assert_eq!(canonical_form(&q), canonical_form(&p));
        prop_assert_eq!(invariant_vector(&q), invariant_vector(&p));
        let found = equivalence_oracle(&p, &q);
        prop_assert!(found.is_some());
        prop_assert_eq!(found.unwrap().apply(&p), q);
    }

    #[test]
    fn canonical_form_is_a_representative(p in polygon()) {
        let c = canonical_form(&p);
        let rep = c.to_polygon();
        prop_assert!(equivalence_oracle(&p, &rep).is_some());
        prop_assert_eq!(canonical_form(&rep), c);
    }

    #[test]
    fn canonical_equality_matches_oracle(p in polygon(), q in polygon()) {
        prop_assert_eq!(
            canonical_form(&p) == canonical_form(&q),
            equivalence_oracle(&p, &q).is_some()
        );
        prop_assert_eq!(
            canonical_form_in(&p, EquivalenceGroup::Proper) == canonical_form_in(&q, EquivalenceGroup::Proper),
            equivalence_oracle_in(&p, &q, EquivalenceGroup::Proper).is_some()
        );
    }

    #[test]
    fn proper_form_invariant_under_proper_maps(p in polygon(), sigma in unimodular()) {
        let sigma = if sigma.det() < 0 { sigma.compose(&UnimodularAffineMap::reflect_x()) } else { sigma };
        prop_assert_eq!(sigma.det(), 1);
        let q = sigma.apply(&p);
        prop_assert_eq!(
            canonical_form_in(&q, EquivalenceGroup::Proper),
            canonical_form_in(&p, EquivalenceGroup::Proper)
        );
    }

    #[test]
    fn group_laws(p in polygon(), s in unimodular(), t in unimodular()) {
        prop_assert_eq!(s.compose(&t).apply(&p), s.apply(&t.apply(&p)));
        prop_assert_eq!(s.compose(&s.inverse()), UnimodularAffineMap::IDENTITY);
        prop_assert_eq!(s.inverse().apply(&s.apply(&p)), p);
    }

    #[test]
    fn rabinowitz_bound(p in polygon()) {
        // the largest m with m^2 + 1 <= |P| is the only binding one
        let total = p.pick_stats().total;
        let m = (1..).take_while(|m| m * m + 1 <= total).last().unwrap_or(1);
        prop_assert!(rabinowitz_holds(&p, m));
        prop_assert!(p.max_collinear_run().length as i64 >= m + 1);
    }

    #[test]
    fn symmetry_survives_maps(p in polygon(), sigma in unimodular()) {
        let sym = p.translate(LatticePoint::ORIGIN);
        let doubled: Vec<LatticePoint> = sym.vertices().iter().flat_map(|&v| [v, -v]).collect();
        let s = LatticePolygon::hull_of(doubled).unwrap();
        prop_assert!(s.is_lattice_symmetric());
        prop_assert!(sigma.apply(&s).is_lattice_symmetric());
    }
}
