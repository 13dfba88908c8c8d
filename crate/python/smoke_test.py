"""Smoke test for the `icosa` extension module.

Build and install it first, for example with
    pip install maturin && maturin develop -m crates/python/Cargo.toml
"""

from fractions import Fraction as Q

import icosa


def main():
    reps = dict(icosa.orbit_representatives())
    lambdas = {name: icosa.lambda_through(c) for name, c in reps.items()}
    assert lambdas == {
        "Sigma5": Q(13, 20),
        "Sigma10": Q(1, 2),
        "Sigma10'": Q(7, 30),
        "Sigma15": Q(1, 4),
    }, lambdas

    sizes = {name: len(icosa.a5_orbit(c)) for name, c in reps.items()}
    assert sizes == {"Sigma5": 5, "Sigma10": 10, "Sigma10'": 10, "Sigma15": 15}, sizes

    cert = icosa.node_certificate(Q(1, 2), reps["Sigma10"])
    assert cert["is_node"] and cert["hessian_rank"] == 3, cert
    assert icosa.quadrics_through_rank(icosa.a5_orbit(reps["Sigma10"])) == 10

    f2, f4 = icosa.power_sum(2), icosa.power_sum(4)
    member = icosa.pencil_member(Q(1, 2))
    assert member == f4 - (f2 * f2).scale(Q(1, 2))
    assert member.total_degree() == 4 and member.is_homogeneous()

    p = icosa.Poly("x^2 - 2*y", ["x", "y"])
    q = icosa.Poly("x - y", ["x", "y"])
    assert icosa.Poly(str(p * q), ["x", "y"]) == p * q
    assert p.resultant(q, "x") == icosa.Poly("y^2 - 2*y", ["x", "y"])
    assert p.eval([3, Q(1, 2)]) == 8

    assert icosa.invariant_dim("W4", 4) == 2
    assert icosa.invariant_dim("U4", 2) == 0
    assert icosa.sym2_u4_decompose() == [("W3", 1), ("W3'", 1), ("W4", 1)]
    assert [icosa.ci_genus(2, 4), icosa.ci_genus(4, 4)] == [9, 33]

    cubic = icosa.Poly("x^3 + y^3 + z^3 - 3*x*y*z", ["x", "y", "z"])
    sing = icosa.singular_points_of(cubic)
    assert sing["points"] == 3 and sing["all_nodes"], sing
    assert icosa.irreducibility_certificate(icosa.Poly("x^3 + y^3 + z^3", ["x", "y", "z"])) is not None

    claims = icosa.list_claims("prop3")
    assert len(claims) == 9
    report = icosa.run_claims("prop3", jobs=2)
    assert report["summary"] == {"pass": 9, "fail": 0, "error": 0}, report["summary"]

    try:
        icosa.lambda_through([1, 1, 1, 1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("off-hyperplane point accepted")

    print(f"icosa {icosa.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
