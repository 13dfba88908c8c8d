//! Randomized property suites, shared by the `properties` and `acceptance`
//! targets. Each suite runs through a proptest `TestRunner` so that callers
//! can choose how many cases to spend.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use icosa_core::conicbundle::{singular_points_in_chart, x10_prime_sextic_stated, PlaneCurve};
use icosa_core::grouprep::monomials_of_degree;
use icosa_core::numfield::{int, rat, ExtElem, ExtensionField, Field, PrimeField, Rational, RationalField};
use icosa_core::polyalg::{parse_expr, resultant_wrt, MultiPoly, PolyRing, ProjPoint, RingRef};

pub struct Suite {
    pub name: &'static str,
    pub cases: u32,
    pub run: fn(u32) -> Result<(), String>,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "field axioms in Q(zeta5)", cases: 3000, run: zeta5_axioms },
    Suite { name: "field axioms in F_p", cases: 1000, run: prime_axioms },
    Suite { name: "resultant multiplicativity, univariate", cases: 1500, run: resultant_univariate },
    Suite { name: "resultant multiplicativity, bivariate", cases: 500, run: resultant_bivariate },
    Suite { name: "Euler identity", cases: 2000, run: euler_identity },
    Suite { name: "render/parse round trip", cases: 2000, run: render_round_trip },
    Suite { name: "projective normal form", cases: 1000, run: projective_normal_form },
    Suite { name: "nine nodes in every chart", cases: 6, run: chart_independence },
];

pub fn total_cases() -> u32 {
    SUITES.iter().map(|s| s.cases).sum()
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn check<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn zeta5_elem() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), 4)
}

fn zeta5_axioms(cases: u32) -> Result<(), String> {
    let f = ExtensionField::zeta5();
    check(cases, (zeta5_elem(), zeta5_elem(), zeta5_elem()), |(a, b, c)| {
        let (a, b, c): (ExtElem, ExtElem, ExtElem) = (f.elem(&a), f.elem(&b), f.elem(&c));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        prop_assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
        if !a.is_zero() {
            prop_assert!(f.is_one(&f.mul(&a, &a.inv().unwrap())));
        }
        // Complex conjugation is a ring automorphism.
        prop_assert_eq!(f.mul(&a, &b).conj(), f.mul(&a.conj(), &b.conj()));
        Ok(())
    })
}

fn prime_axioms(cases: u32) -> Result<(), String> {
    let ps = [2u64, 3, 5, 7, 31, 101, 65_521, 4_294_967_291];
    check(cases, (0..ps.len(), any::<i64>(), any::<i64>(), any::<i64>()), |(k, a, b, c)| {
        let f = PrimeField::new(ps[k]).unwrap();
        let (a, b, c) = (f.elem(a), f.elem(b), f.elem(c));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
            prop_assert_eq!(f.pow(&a, ps[k] - 1), f.one());
        }
        Ok(())
    })
}

/// Dense coefficients of degree 1 to `max_deg`, low degree first, with a
/// nonzero leading one.
fn uni_coeffs(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    (prop::collection::vec(-6i64..=6, 1..=max_deg), prop_oneof![-5i64..=-1, 1i64..=5]).prop_map(|(mut v, lead)| {
        v.push(lead);
        v
    })
}

fn uni_poly(ring: &RingRef<RationalField>, c: &[i64]) -> MultiPoly<RationalField> {
    let x = MultiPoly::var_at(ring, 0);
    c.iter().enumerate().fold(MultiPoly::zero(ring), |acc, (i, &k)| acc.add(&x.pow(i as u32).scale(&int(k))))
}

fn resultant_univariate(cases: u32) -> Result<(), String> {
    let ring = PolyRing::new(RationalField, &["x"]);
    check(cases, (uni_coeffs(3), uni_coeffs(3), uni_coeffs(3)), |(f, g, h)| {
        let (f, g, h) = (uni_poly(&ring, &f), uni_poly(&ring, &g), uni_poly(&ring, &h));
        let res = |a: &MultiPoly<RationalField>, b: &MultiPoly<RationalField>| resultant_wrt(a, b, 0).unwrap();
        prop_assert_eq!(res(&f.mul(&g), &h), res(&f, &h).mul(&res(&g, &h)));
        Ok(())
    })
}

/// A polynomial in `x, y` of degree `deg` in `y` whose `y`-leading
/// coefficient is a nonzero constant.
fn bivariate(deg: u32) -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    let lower = prop::collection::vec((0..=1u32, 0..deg, -4i64..=4), 0..=4);
    (lower, prop_oneof![-3i64..=-1, 1i64..=3]).prop_map(move |(mut v, lead)| {
        v.push((0, deg, lead));
        v
    })
}

fn bi_poly(ring: &RingRef<RationalField>, terms: &[(u32, u32, i64)]) -> MultiPoly<RationalField> {
    let (x, y) = (MultiPoly::var_at(ring, 0), MultiPoly::var_at(ring, 1));
    terms.iter().fold(MultiPoly::zero(ring), |acc, &(i, j, c)| acc.add(&x.pow(i).mul(&y.pow(j)).scale(&int(c))))
}

fn resultant_bivariate(cases: u32) -> Result<(), String> {
    let ring = PolyRing::new(RationalField, &["x", "y"]);
    check(
        cases,
        (1..=2u32, 1..=2u32, 1..=2u32).prop_flat_map(|(a, b, c)| (bivariate(a), bivariate(b), bivariate(c))),
        |(f, g, h)| {
            let (f, g, h) = (bi_poly(&ring, &f), bi_poly(&ring, &g), bi_poly(&ring, &h));
            let res = |a: &MultiPoly<RationalField>, b: &MultiPoly<RationalField>| resultant_wrt(a, b, 1).unwrap();
            prop_assert_eq!(res(&f.mul(&g), &h), res(&f, &h).mul(&res(&g, &h)));
            Ok(())
        },
    )
}

fn euler_identity(cases: u32) -> Result<(), String> {
    let ring = PolyRing::new(RationalField, &["x1", "x2", "x3", "x4"]);
    let strategy = (1u32..=5).prop_flat_map(|d| {
        let n = monomials_of_degree(4, d).len();
        (Just(d), prop::collection::vec(small_rational(), n))
    });
    check(cases, strategy, |(d, coeffs)| {
        let terms = monomials_of_degree(4, d).into_iter().zip(coeffs).collect();
        let f = MultiPoly::from_terms(&ring, terms);
        let lhs = (0..4).fold(MultiPoly::zero(&ring), |acc, i| acc.add(&MultiPoly::var_at(&ring, i).mul(&f.diff(i))));
        prop_assert_eq!(lhs, f.scale(&int(d as i64)));
        Ok(())
    })
}

fn render_round_trip(cases: u32) -> Result<(), String> {
    let ring = PolyRing::new(RationalField, &["a", "b", "c"]);
    let term = (0..=3u32, 0..=3u32, 0..=3u32, small_rational());
    check(cases, prop::collection::vec(term, 0..8), |terms| {
        let vars = MultiPoly::vars(&ring);
        let p = terms.iter().fold(MultiPoly::zero(&ring), |acc, (i, j, k, c)| {
            acc.add(&vars[0].pow(*i).mul(&vars[1].pow(*j)).mul(&vars[2].pow(*k)).scale(c))
        });
        let text = p.render();
        prop_assert_eq!(parse_expr(&text, &ring).unwrap(), p, "{}", text);
        Ok(())
    })
}

fn projective_normal_form(cases: u32) -> Result<(), String> {
    let coords = prop::collection::vec(small_rational(), 4).prop_filter("nonzero", |v| v.iter().any(|c| *c != int(0)));
    let scalar = small_rational().prop_filter("nonzero", |c| *c != int(0));
    check(cases, (coords, scalar), |(v, c)| {
        let p = ProjPoint::new(&RationalField, v.clone()).unwrap();
        let q = ProjPoint::new(&RationalField, v.iter().map(|x| x * &c).collect()).unwrap();
        prop_assert_eq!(&p, &q);
        prop_assert_eq!(ProjPoint::new(&RationalField, p.coords().to_vec()).unwrap(), p);
        Ok(())
    })
}

/// The nine-node count survives a signed permutation of the coordinates and
/// a change of affine chart.
fn chart_independence(cases: u32) -> Result<(), String> {
    let c = x10_prime_sextic_stated();
    let ring = c.form.ring().clone();
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let strategy = (0..perms.len(), prop::array::uniform3(prop::bool::ANY), 0..3usize);
    check(cases, strategy, |(k, signs, chart)| {
        let images: Vec<_> = (0..3)
            .map(|i| {
                let v = MultiPoly::var_at(&ring, perms[k][i]);
                if signs[i] {
                    v.scale(&int(-1))
                } else {
                    v
                }
            })
            .collect();
        let moved = PlaneCurve::new(c.form.compose(&images).unwrap()).unwrap();
        let r = singular_points_in_chart(&moved, chart).unwrap();
        prop_assert_eq!((r.total_points, r.total_nodes), (9, 9));
        Ok(())
    })
}
