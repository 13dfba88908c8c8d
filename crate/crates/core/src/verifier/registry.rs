use super::checks::{self as c};
use super::{Anchor, ClaimSpec, Comparator};
use crate::u4w3::P3Model;

const Z: &[&str] = &["z1", "z2", "z3"];
const Y: &[&str] = &["y1", "y2", "y3", "y4"];
const CONE: &[&str] = &["y1", "y2", "y3", "w"];

const fn anchor(section: &'static str, quote: &'static str) -> Anchor {
    Anchor { section, quote }
}

const X10_PRODUCT: &str = "z3*(z3*(z1+z2)+z1^2+z1*z2+z2^2)\
    *(z2*z3^2+z1*z3^2+z1^2*z3+5*z1*z2*z3+4*z1^2*z2+z2^2*z3+4*z1*z2^2)";

const X10_PRIME_SEXTIC: &str = "-16*z1^6-16*z2^6-13*z2^2*z3^4-13*z1^2*z3^4-42*z2^3*z3^3-61*z2^4*z3^2\
    -42*z1^3*z3^3-61*z1^4*z3^2+12*z1^4*z2^2+104*z1^3*z2^3+12*z1^2*z2^4-48*z1^5*z2-48*z1^5*z3-48*z1*z2^5\
    -48*z2^5*z3+93*z1^2*z2^2*z3^2-26*z1^3*z2*z3^2-12*z1^2*z2*z3^3-12*z1*z2^2*z3^3-72*z1^4*z2*z3+120*z1^2*z2^3*z3\
    -72*z1*z2^4*z3-26*z1*z2^3*z3^2-10*z1*z2*z3^4+120*z1^3*z2^2*z3";

const PROP: Anchor = anchor(
    "Section 3, proposition on the singular members",
    "is given by the equation (3.1) with λ=13/20 (respectively, λ=1/2, λ=7/30, λ=1/4)",
);
const NODES: Anchor = anchor(
    "Section 3, proposition on the singular members",
    "has nodes at the points of the A_5-orbit Σ_5 (respectively, Σ_10, Σ_10', Σ_15)",
);
const QFACT: Anchor = anchor("Theorem 3.6, proof", "Σ_10 is not contained in any quadric surface");
const U4_PENCIL: Anchor =
    anchor("Section 2, theorem on P(U4)", "A_5-invariant quartic surfaces in P^3 form a pencil P");
const U4_CENSUS: Anchor =
    anchor("Section 2, theorem on P(U4), proof", "does not contain A_5-orbits of lengths 5, 6, and 15");

/// Each in-scope item and the claim-id prefixes that cover it.
pub const ANCHOR_MAP: &[(&str, &[&str])] = &[
    ("Remark 2.3: symmetric powers of U2+U2 and U2+U2'", &["rem2-3."]),
    ("Section 2, P(U4): Sym^2 decomposition", &["thm2-u4.sym2-decomposition"]),
    ("Section 2, P(U4): invariant quartic pencil", &["thm2-u4.quartic-pencil", "thm2-u4.no-invariant-quadric"]),
    ("Section 2, P(U4): orbit census", &["thm2-u4.no-short-orbits", "thm2-u4.two-orbits-of-length-10"]),
    ("Section 2, P(U4): exactly two nodal surfaces", &["thm2-u4.two-nodal-members"]),
    ("Section 2, P(U4): tangent developable", &["thm2-u4.tangent-developable"]),
    ("Section 2, P(I+W3): invariant dimensions", &["thm2-iw3."]),
    ("Equation 3.1: F4 = lambda F2^2", &["eq3-1."]),
    ("Section 3, singular members: lambda values", &["prop3.nodal-lambdas", "prop3.lambda."]),
    ("Section 3, singular members: nodes", &["prop3.nodes."]),
    ("Section 3: orbit lengths", &["sec3.orbit-lengths", "sec3.sigma12-orbits"]),
    ("Remark 3.2: ten lines, ten planes", &["rem3-2."]),
    ("Theorem 3.6: Q-factoriality ranks", &["thm3-6.qfact."]),
    ("Theorem 3.6: affine chart", &["thm3-6.affine-chart"]),
    ("Theorem 3.6: degeneration sextic", &["thm3-6.discriminant-factorization"]),
    ("Theorem 3.6: tacnodes and transversality", &["thm3-6.tacnodes", "thm3-6.line-", "thm3-6.sextic-"]),
    ("Remark 3.7: nine nodes, irreducible", &["rem3-7."]),
    ("Theorem 3.9: tangent cone at O", &["thm3-9."]),
    ("Section 4: Bring's curve", &["lem4.bring-f4-cut", "lem4.no-common-zeros"]),
    ("Section 4: complete-intersection genera", &["lem4.genus-"]),
];

#[rustfmt::skip]
pub fn registry() -> Vec<ClaimSpec> {
    use Comparator::*;
    let claim = |id, description, anchor, expected, comparator, runner| ClaimSpec { id, description, anchor, expected, comparator, runner };
    vec![
        claim("rem2-3.u2u2-quadric", "one invariant quadric in P(U2+U2)",
            anchor("Remark 2.3", "the unique A_5-invariant quadric taken with multiplicity two"),
            "1", Exact, |_| c::dim_of(P3Model::U2U2, 2)),
        claim("rem2-3.u2u2-quartic-dim", "one invariant quartic in P(U2+U2)",
            anchor("Remark 2.3", "the only A_5-invariant quartic surface in P(U_2⊕U_2) is not reduced"),
            "1", Exact, |_| c::dim_of(P3Model::U2U2, 4)),
        claim("rem2-3.u2u2-quartic-square", "the invariant quartic is the square of the quadric",
            anchor("Remark 2.3", "it is the unique A_5-invariant quadric taken with multiplicity two"),
            "unique quartic is the square of the quadric: yes", Exact, c::u2u2_square),
        claim("rem2-3.u2u2prime-no-quartic", "no invariant quartic in P(U2+U2')",
            anchor("Remark 2.3", "there are no A_5-invariant quartic surfaces in P(U_2⊕U_2') at all"),
            "0", Exact, |_| c::dim_of(P3Model::U2U2Prime, 4)),

        claim("thm2-u4.sym2-decomposition", "Sym^2 U4 by characters",
            anchor("Section 2, theorem on P(U4), proof", "Sym^2(U_4)=W_3⊕W_3'⊕W_4"),
            "W3 + W3' + W4", Exact, c::sym2_u4),
        claim("thm2-u4.quartic-pencil", "invariant quartics in P(U4)", U4_PENCIL,
            "2", Exact, |_| c::dim_of(P3Model::U4, 4)),
        claim("thm2-u4.no-invariant-quadric", "no invariant quadric in P(U4)",
            anchor("Section 2, theorem on P(U4), proof", "Sym^2(U_4)=W_3⊕W_3'⊕W_4"),
            "0", Exact, |_| c::dim_of(P3Model::U4, 2)),
        claim("thm2-u4.no-short-orbits", "no fixed points of 2.A4, 2.D10, 2.D4 in P(U4)", U4_CENSUS,
            "2.A4: 0 fixed points; 2.D10: 0 fixed points; quaternion-8: 0 fixed points", SetEquality, c::no_short_orbits),
        claim("thm2-u4.two-orbits-of-length-10", "fixed points of 2.S3 give two orbits of length 10",
            anchor("Section 2, theorem on P(U4), proof", "P^3 contains exactly two A_5-orbits of length 10"),
            "orbit lengths 10,10; distinct orbits 2; stabilizers 6,6", Exact, c::length_ten_orbits),
        claim("thm2-u4.two-nodal-members", "two pencil members with nodes at the length-10 orbits",
            anchor("Section 2, theorem on P(U4)", "This pencil contains exactly two (isomorphic) surfaces with non-isolated singularities, and exactly two nodal surfaces"),
            "2 members, distinct: yes, nodes 10/10 10/10, differ from the discriminant: yes, control member smooth at the orbits: yes",
            Exact, c::nodal_members),
        claim("thm2-u4.tangent-developable", "binary cubic discriminant: invariant, cuspidal along the twisted cubic",
            anchor("Section 2, theorem on P(U4)", "the singular locus of S is a twisted cubic curve C"),
            "Reynolds-fixed: yes; singular along the cubes: yes; Hessian rank at (1,0,0,0): 1", Exact, c::tangent_developable),

        claim("thm2-iw3.quadric-pencil", "invariant quadrics in P(I+W3)",
            anchor("Section 2, theorem on P(I+W3)", "All A_5-invariant quadric surfaces in P^3 form a pencil P"),
            "2", Exact, |_| c::dim_of(P3Model::IW3, 2)),
        claim("thm2-iw3.quartic-dim", "invariant quartics in P(I+W3) are products of two quadrics of the pencil",
            anchor("Section 2, theorem on P(I+W3)", "any reduced A_5-invariant quartic surface in P^3 is a union of two different quadrics from P"),
            "3", Exact, |_| c::dim_of(P3Model::IW3, 4)),

        claim("eq3-1.invariant-dims", "invariant quadrics and quartics in P(W4)",
            anchor("Section 3", "any A_5-invariant quartic surface in P^3 is given by F_4=λF_2^2"),
            "quadrics 1, quartics 2", Exact, c::w4_invariant_dims),
        claim("eq3-1.pencil-invariance", "F2 and F4 are A5-invariant",
            anchor("Section 3", "F_2 is the unique A_5-invariant polynomial of degree two"),
            "F2 and F4 invariant: yes", Exact, c::pencil_invariance),

        claim("prop3.nodal-lambdas", "lambda through each orbit representative", PROP,
            "13/20, 1/2, 7/30, 1/4", Exact, c::nodal_lambdas),
        claim("prop3.lambda.sigma5", "lambda through [-4:1:1:1:1]", PROP, "13/20", Exact, |x| c::lambda_of(x, 0)),
        claim("prop3.lambda.sigma10", "lambda through [0:0:0:-1:1]", PROP, "1/2", Exact, |x| c::lambda_of(x, 1)),
        claim("prop3.lambda.sigma10p", "lambda through [-2:-2:-2:3:3]", PROP, "7/30", Exact, |x| c::lambda_of(x, 2)),
        claim("prop3.lambda.sigma15", "lambda through [0:-1:-1:1:1]", PROP, "1/4", Exact, |x| c::lambda_of(x, 3)),
        claim("prop3.nodes.sigma5", "S5 has nodes at all of Sigma5", NODES, "5/5", Exact, |x| c::nodes_of(x, 0)),
        claim("prop3.nodes.sigma10", "S10 has nodes at all of Sigma10", NODES, "10/10", Exact, |x| c::nodes_of(x, 1)),
        claim("prop3.nodes.sigma10p", "S10' has nodes at all of Sigma10'", NODES, "10/10", Exact, |x| c::nodes_of(x, 2)),
        claim("prop3.nodes.sigma15", "S15 has nodes at all of Sigma15", NODES, "15/15", Exact, |x| c::nodes_of(x, 3)),

        claim("sec3.orbit-lengths", "orbit lengths of the four representatives",
            anchor("Section 3", "|Σ_5|=5, |Σ_10|=|Σ_10'|=10, and |Σ_15|=15"),
            "5, 10, 10, 15", Exact, c::orbit_lengths),
        claim("sec3.sigma12-orbits", "the zeta5 points form two orbits of length 12",
            anchor("Section 3", "there are exactly two A_5-orbits Σ_12 and Σ_12' in P^3 of length 12"),
            "12, 12", Exact, c::sigma12_orbits),

        claim("rem3-2.ten-lines", "lines through three points of Sigma10",
            anchor("Remark 3.2", "there are ten lines in P^3 such that each of them contains three points of Σ_10"),
            "10 lines through 3 points; orbit of 10 lines, 3 points each, 3 per point: yes", Exact, c::ten_lines),
        claim("rem3-2.ten-planes", "planes through four points of Sigma10'",
            anchor("Remark 3.2", "there are ten planes in P^3 such that each of them contains four points of Σ_10'"),
            "plane orbits 10+15; orbit of 10 planes, 4 points each, 4 per point: yes", Exact, c::ten_planes),
        claim("rem3-2.witness-plane", "a plane with four points, no three collinear",
            anchor("Remark 3.2", "there exists a plane in P^3 that contains at least four points of Σ such that no three of them are collinear"),
            "Sigma10: yes; Sigma10': yes", SetEquality, c::witness_planes),

        claim("thm3-6.qfact.sigma10", "no quadric through Sigma10", QFACT, "10", Exact, |x| c::quadric_rank(x, 1)),
        claim("thm3-6.qfact.sigma10p", "no quadric through Sigma10'",
            anchor("Theorem 3.6, proof", "Σ_10' is not contained in any quadric surface in P^3"),
            "10", Exact, |x| c::quadric_rank(x, 2)),
        claim("thm3-6.affine-chart", "the printed affine equation and the chart centred at O",
            anchor("Theorem 3.6, proof", "we see that O=(0,0,0) in these coordinates"),
            "equation is the member in the printed chart: yes; node there at (0, 0, -2); centred chart shift (0, 0, 1)",
            Exact, c::affine_chart),
        claim("thm3-6.discriminant-factorization", "degeneration sextic of the projection of S10 from O",
            anchor("Theorem 3.6, proof", "z_3(z_3(z_1+z_2)+z_1^2+z_1z_2+z_2^2)(z_2z_3^2+z_1z_3^2+z_1^2z_3+5z_1z_2z_3+4z_1^2z_2+z_2^2z_3+4z_1z_2^2)=0"),
            X10_PRODUCT, UpToScalar(Z), c::x10_discriminant),
        claim("thm3-6.tacnodes", "gamma and zeta are tangent at three points",
            anchor("Theorem 3.6, proof", "γ∪ζ has three tacnodes at these points"),
            "[0:1:-1]=2; [1:0:-1]=2; [0:0:1]=2", SetEquality, c::tacnodes),
        claim("thm3-6.line-transversality", "the line meets gamma and zeta transversally",
            anchor("Theorem 3.6, proof", "The line ℓ intersects the curves γ and ζ transversally"),
            "gamma: 2 points, simple: yes, field degrees 2,2; zeta: 3 points, simple: yes, field degrees 1,1,1",
            Exact, c::line_transversality),
        claim("thm3-6.line-gamma-points", "the two points of the line and the conic are conjugate",
            anchor("Theorem 3.6, proof", "the two points of the intersections ℓ∩γ are [-1+√3:2:0] and [-1+√3:2:0]"),
            "[(1) : (-1/2 + -1/2*sqrt(-3)) : 0]; [(1) : (-1/2 + 1/2*sqrt(-3)) : 0]", SetEquality, c::line_conic_points),
        claim("thm3-6.sextic-singularities", "eight singular points: five nodes, the other three are the tacnodes",
            anchor("Theorem 3.6, proof", "γ∪ζ has three tacnodes at these points"),
            "8 singular points, 5 nodes", Exact, c::x10_sextic_singularities),

        claim("rem3-7.sextic", "degeneration sextic of the projection of S10' from O",
            anchor("Remark 3.7", "we see that C can be given by"),
            X10_PRIME_SEXTIC, UpToScalar(Z), c::x10_prime_sextic),
        claim("rem3-7.nine-nodes", "the sextic has nine singular points, all nodes",
            anchor("Remark 3.7", "C is an irreducible nodal curve with exactly nine nodes"),
            "9 singular points, 9 nodes", Exact, |x| c::nine_nodes(x, 2)),
        claim("rem3-7.nine-nodes-chart-z1", "the same count from the chart z1 = 1",
            anchor("Remark 3.7", "C is an irreducible nodal curve with exactly nine nodes"),
            "9 singular points, 9 nodes", Exact, |x| c::nine_nodes(x, 0)),
        claim("rem3-7.irreducible", "irreducibility over Q by reduction",
            anchor("Remark 3.7", "C is an irreducible nodal curve"),
            "irreducible mod 7 at z2 = -6", Exact, c::irreducible),

        claim("thm3-9.r2", "the y4^2 coefficient of R",
            anchor("Theorem 3.9, proof", "R_2(y_1,y_2,y_3)=4y_3^2-16y_1y_2"),
            "4*y3^2 - 16*y1*y2", Polynomial(Y), c::x15_r2),
        claim("thm3-9.tangent-cone", "the tangent cone of X15 at O",
            anchor("Theorem 3.9, proof", "16y_1y_2=4y_3^2-w^2"),
            "16*y1*y2 - 4*y3^2 + w^2", UpToScalar(CONE), c::x15_cone),
        claim("thm3-9.lines-swapped", "checks (a) to (e) on the node of X15",
            anchor("Theorem 3.9, proof", "They are interchanged by the involution σ"),
            "abcde", Exact, c::x15_checks),

        claim("lem4.bring-f4-cut", "the 24 points on Bring's curve with F4 = 0",
            anchor("Section 4, lemma on Bring's curve", "Σ_12∪Σ_12' is cut out on B_6 by the equation F_4=0"),
            "24 points (12+12); F2=F3=F4=0: yes; F5 nonzero: yes; Jacobian rank 3: yes", Exact, c::bring_cut),
        claim("lem4.no-common-zeros", "F2, F3, F4, F5 have no common zero",
            anchor("Section 4", "the system of equations F_2=F_3=F_4=F_5 has no solution in P^3"),
            "no common zero", Exact, c::no_common_zeros),
        claim("lem4.genus-four", "genus of a (2,3) complete intersection",
            anchor("Section 4", "B_6 is a smooth irreducible curve of genus four"),
            "4", Exact, |_| c::genus(2, 3)),
        claim("lem4.genus-nine", "genus of a (2,4) complete intersection",
            anchor("Section 3", "the curve in P^3 that is given by F_2=F_4=0 is a smooth curve of genus nine"),
            "9", Exact, |_| c::genus(2, 4)),
    ]
}
