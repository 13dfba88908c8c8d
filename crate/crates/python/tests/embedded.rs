//! Drives the module through an embedded interpreter.

use std::ffi::CString;

use icosa::icosa;
use pyo3::prelude::*;

fn run(code: &str) {
    pyo3::append_to_inittab!(icosa);
    Python::initialize();
    Python::attach(|py| {
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, None, None) {
            e.display(py);
            panic!("python raised");
        }
    });
}

#[test]
fn module_round_trip() {
    run(r#"
from fractions import Fraction as Q
import icosa

reps = dict(icosa.orbit_representatives())
assert icosa.lambda_through(reps["Sigma10'"]) == Q(7, 30)
assert len(icosa.a5_orbit(reps["Sigma15"])) == 15
assert icosa.node_certificate(Q(1, 4), reps["Sigma15"])["is_node"]

p = icosa.Poly("3/2*a^2*b - b + 1", ["a", "b"])
assert icosa.Poly(str(p), ["a", "b"]) == p
assert p.diff("a") == icosa.Poly("3*a*b", ["a", "b"])
assert (p ** 2).total_degree() == 6
assert p != icosa.Poly("3/2*a^2*b - b + 1", ["b", "a"])
try:
    p + icosa.Poly("a", ["a"])
    raise AssertionError("mixed rings accepted")
except ValueError:
    pass

assert icosa.invariant_dim("I+W3", 2) == 2
try:
    icosa.invariant_dim("W5", 2)
    raise AssertionError("unknown model accepted")
except ValueError:
    pass

assert len(icosa.list_claims()) >= 25
r = icosa.run_claims("lem4.genus")
assert r["summary"]["pass"] == len(r["results"]) == 2
"#);
}
