mod common;

use common::SUITES;

fn run(name: &str) {
    let suite = SUITES.iter().find(|s| s.name == name).expect("known suite");
    if let Err(e) = (suite.run)(suite.cases) {
        panic!("{name}: {e}");
    }
}

#[test]
fn at_least_ten_thousand_cases() {
    assert!(common::total_cases() >= 10_000);
}

#[test]
fn zeta5_field_axioms() {
    run("field axioms in Q(zeta5)");
}

#[test]
fn prime_field_axioms() {
    run("field axioms in F_p");
}

#[test]
fn resultants_are_multiplicative() {
    run("resultant multiplicativity, univariate");
    run("resultant multiplicativity, bivariate");
}

#[test]
fn euler_identity() {
    run("Euler identity");
}

#[test]
fn canonical_forms_round_trip() {
    run("render/parse round trip");
    run("projective normal form");
}

#[test]
fn nine_nodes_in_every_chart() {
    run("nine nodes in every chart");
}
