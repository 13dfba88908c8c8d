use super::*;
use crate::grouprep::act;
use crate::numfield::{int, rat, ExtensionField};

#[test]
fn power_sums() {
    let p = [int(1), int(1), int(1), int(1)];
    assert_eq!(power_sum_form(2).unwrap().eval(&p).unwrap(), int(20));
    assert_eq!(power_sum_form(6).unwrap_err(), HashError::UnsupportedIndex(6));
    assert_eq!(power_sum_form(1).unwrap_err(), HashError::UnsupportedIndex(1));
    let z5 = ExtensionField::zeta5();
    let z = z5.generator();
    let pt: Vec<_> = (1..5).map(|k| z5.pow(&z, k)).collect();
    assert!(z5.is_zero(&lift(&power_sum_form(3).unwrap(), &z5).eval(&pt).unwrap()));
    assert_eq!(lift(&power_sum_form(5).unwrap(), &z5).eval(&pt).unwrap(), z5.from_i64(5));
}

#[test]
fn pencil_is_invariant() {
    for l in [rat(0, 1), rat(13, 20), rat(-7, 3)] {
        let f = hashimoto_quartic(&l).equation;
        for g in crate::grouprep::w4_matrices() {
            assert_eq!(act(&f, &g).unwrap(), f);
        }
    }
    assert_eq!(hashimoto_quartic(&rat(0, 1)).equation, power_sum_form(4).unwrap());
}

#[test]
fn rational_orbits_and_lambdas() {
    let expect = [(5, rat(13, 20)), (10, rat(1, 2)), (10, rat(7, 30)), (15, rat(1, 4))];
    for ((name, p), (len, lambda)) in orbit_representatives().iter().zip(expect) {
        let orbit = a5_orbit(&RationalField, p).unwrap();
        assert_eq!(orbit.len(), len, "{name}");
        for q in &orbit.points {
            assert_eq!(lambda_through(&RationalField, q).unwrap(), lambda);
            assert!(node_certificate(&lambda, q).unwrap().is_node());
        }
        assert!(a5_orbit(&RationalField, &orbit.points[len - 1]).unwrap().same_set(&orbit));
    }
    assert_eq!(nodal_lambdas()[0], rat(13, 20));
}

#[test]
fn node_errors() {
    let p = rational_point([-4, 1, 1, 1, 1]);
    assert_eq!(node_certificate(&rat(0, 1), &p).unwrap_err(), HashError::NotOnSurface);
    assert_eq!(hashimoto_quartic(&rat(0, 1)).equation.eval(p.coords()).unwrap(), int(260));
    assert!(matches!(
        point_from_x0x4(&RationalField, &[int(1), int(0), int(0), int(0), int(0)]),
        Err(HashError::NotOnHyperplane)
    ));
}

#[test]
fn quadric_ranks() {
    let reps = orbit_representatives();
    let rank = |i: usize| quadrics_through_rank(&RationalField, &a5_orbit(&RationalField, &reps[i].1).unwrap().points);
    assert_eq!(rank(0), 5);
    assert_eq!(rank(1), 10);
    assert_eq!(rank(2), 10);
    assert_eq!(quadrics_through_rank(&RationalField, &[reps[0].1.clone()]), 1);
}

#[test]
fn zeta_points() {
    let r = special_zeta_points().unwrap();
    assert_eq!(r.orbit_lengths(), vec![12, 12]);
    assert!(r.power_sums_vanish && r.f5_nonzero && r.jacobian_full_rank);
    let p = &r.orbits[0].points[0];
    assert_eq!(lambda_through(&r.field, p).unwrap_err(), HashError::IndeterminatePoint);
}

#[test]
fn incidences() {
    let reps = orbit_representatives();
    let census = |i: usize| incidence_census(&RationalField, &a5_orbit(&RationalField, &reps[i].1).unwrap().points);
    let s10 = census(1);
    assert_eq!(s10.lines_with_3plus(), 10);
    assert!(s10.lines.iter().all(|l| l.len() == 3));
    assert!(s10.has_line_orbit(10, 10, 3, 3));
    assert!(s10.witness_plane.is_some());
    // Besides the orbit of ten planes there is a second orbit of fifteen.
    let s10p = census(2);
    assert_eq!(s10p.planes_with_4plus(), 25);
    let mut sizes: Vec<usize> = s10p.plane_orbits.iter().map(|o| o.len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![10, 15]);
    assert!(s10p.has_plane_orbit(10, 10, 4, 4));
    assert!(s10p.lines.is_empty() && s10p.witness_plane.is_some());
    let s5 = census(0);
    assert_eq!(s5.lines_with_3plus(), 0);
    assert_eq!(s5.planes_with_4plus(), 0);
}

#[test]
fn genus() {
    assert_eq!(ci_genus(2, 3).unwrap(), 4);
    assert_eq!(ci_genus(2, 4).unwrap(), 9);
    assert_eq!(ci_genus(1, 1).unwrap(), 0);
    assert_eq!(ci_genus(0, 2).unwrap_err(), HashError::InvalidDegree);
}

#[test]
fn x15_checks() {
    let r = x15_tangent_cone().unwrap();
    assert_eq!(r.first_failure(), None, "{:?}", r.results);
    assert!(!r.r2.is_zero());
}

#[test]
fn quadric_point_error() {
    // (1, i, -1, -i, 0) lies on F2 = 0 with F4 = 4.
    let z20 = ExtensionField::zeta20();
    let i = z20.pow(&z20.generator(), 5);
    let coords = [z20.one(), i.clone(), z20.from_i64(-1), z20.neg(&i), z20.zero()];
    let p = point_from_x0x4(&z20, &coords).unwrap();
    assert_eq!(lambda_through(&z20, &p).unwrap_err(), HashError::QuadricPoint);
}
