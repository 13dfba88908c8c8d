use super::*;
use crate::numfield::Field;

#[test]
fn invariant_dimensions_agree() {
    let expected = [
        (P3Model::W4, 2, 1),
        (P3Model::W4, 4, 2),
        (P3Model::U4, 2, 0),
        (P3Model::U4, 4, 2),
        (P3Model::U2U2, 2, 1),
        (P3Model::U2U2, 4, 1),
        (P3Model::U2U2Prime, 2, 0),
        (P3Model::U2U2Prime, 4, 0),
        (P3Model::IW3, 2, 2),
        (P3Model::IW3, 4, 3),
    ];
    for (model, d, n) in expected {
        assert_eq!(invariant_dim(model, d).unwrap(), n, "{model} degree {d}");
    }
    assert_eq!(invariant_dim(P3Model::U4, 5), Err(U4Error::UnsupportedDegree(5)));
}

#[test]
fn u2_u2_quartic_is_square_of_quadric() {
    let q = invariant_basis(P3Model::U2U2, 2).unwrap();
    let f = invariant_basis(P3Model::U2U2, 4).unwrap();
    let sq = q[0].mul(&q[0]);
    let (m, c) = sq.leading_term().unwrap().clone();
    let k = shared_table().field().div(&f[0].coefficient(&m.0), &c).unwrap();
    assert_eq!(f[0], sq.scale(&k));
}

#[test]
fn models_round_trip_names() {
    for m in P3Model::ALL {
        assert_eq!(m.name().parse::<P3Model>().unwrap(), m);
        assert_eq!(m.representation(shared_table()).dim(), 4);
    }
    assert!("W5".parse::<P3Model>().is_err());
}

#[test]
fn sym2_of_u4() {
    let m = sym2_u4_decompose().unwrap();
    let nonzero: Vec<_> = m.iter().filter(|(_, &k)| k > 0).map(|(n, &k)| (*n, k)).collect();
    assert_eq!(nonzero, vec![("W3", 1), ("W3'", 1), ("W4", 1)]);
    assert_eq!(m["I"], 0);
    let dims: u32 = shared_table().dims().iter().zip(IRREP_NAMES).map(|(d, n)| *d as u32 * m[n]).sum();
    assert_eq!(dims, 10);
}

#[test]
fn subgroup_orders_and_census() {
    for s in SubgroupSpec::all() {
        let r = fixed_point_census(&s).unwrap();
        assert!(r.bookkeeping_holds(), "{}", s.name);
        if s.name == "dicyclic-12" {
            assert_eq!(r.orbit_lengths, vec![10, 10]);
            assert_eq!(r.stabilizer_orders, vec![6, 6]);
            assert_eq!(r.distinct_orbits, 2);
        } else {
            assert!(r.fixed_points.is_empty(), "{}", s.name);
        }
    }
    let mut bad = SubgroupSpec::quaternion_8();
    bad.order = 6;
    assert!(matches!(fixed_point_census(&bad), Err(U4Error::WrongSubgroupOrder { got: 8, .. })));
}

#[test]
fn nodal_members_of_the_pencil() {
    let r = u4_pencil_nodal_members().unwrap();
    assert_eq!(r.basis.len(), 2);
    assert_eq!(r.members.len(), 2);
    assert!(r.distinct);
    assert!(r.all_orbit_points_are_nodes());
    for m in &r.members {
        assert_eq!(m.orbit.len(), 10);
        assert!(m.hessian_ranks.iter().all(|&k| k == 3));
        assert_ne!(m.parameter, r.discriminant_parameter);
    }
    assert!(r.generic_gradient_nonzero);
}

#[test]
fn discriminant_certificates() {
    let r = binary_cubic_discriminant().unwrap();
    assert!(r.reynolds_fixed && r.gradient_vanishes_on_cubic);
    assert_eq!(r.hessian_rank_at_base, 1);
    assert_eq!(r.form.total_degree(), Some(4));
    assert_eq!(r.pencil_coordinates.len(), 2);
}
