//! The executable side of each claim. Every check renders its result as
//! text; the registry holds the expected text.

use std::fmt::Display;

use crate::conicbundle::{
    chart_form, chart_ring, conic_param, discriminant_sextic, irreducibility_search, line_curve_transversality,
    node_chart, pullback_root_multiplicity, singular_points, singular_points_in_chart, x10_conic, x10_cubic, x10_line,
    x10_prime_sextic_stated, ChartSpec, PlaneCurve,
};
use crate::grouprep::is_invariant;
use crate::hashimoto::{
    a5_orbit, ci_genus, incidence_census, node_report, orbit_representatives, quadrics_through_rank,
    special_zeta_points, w4_generators_in, x15_tangent_cone, HashError, IncidenceReport,
};
use crate::numfield::{int, rat, Rational, RationalField};
use crate::polyalg::{parse_expr, ProjPoint};
use crate::u4w3::{
    binary_cubic_discriminant, fixed_point_census, invariant_basis, invariant_dim, sym2_u4_decompose,
    u4_pencil_nodal_members, P3Model, SubgroupSpec,
};

use super::Context;

pub(crate) type Outcome = Result<String, String>;

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

// ---- the pencil F₄ = λF₂² on ℙ(W₄)

pub(crate) fn w4_invariant_dims(_: &Context) -> Outcome {
    let d2 = invariant_dim(P3Model::W4, 2).map_err(err)?;
    let d4 = invariant_dim(P3Model::W4, 4).map_err(err)?;
    Ok(format!("quadrics {d2}, quartics {d4}"))
}

pub(crate) fn pencil_invariance(ctx: &Context) -> Outcome {
    let mut ok = true;
    for g in w4_generators_in(&RationalField) {
        ok &= is_invariant(&ctx.f2, &g).map_err(err)? && is_invariant(&ctx.f4, &g).map_err(err)?;
    }
    Ok(format!("F2 and F4 invariant: {}", yes(ok)))
}

fn lambda_at(ctx: &Context, p: &ProjPoint<RationalField>) -> Result<Rational, String> {
    let f2 = ctx.f2.eval(p.coords()).map_err(err)?;
    let f4 = ctx.f4.eval(p.coords()).map_err(err)?;
    if f2 == int(0) {
        return Err(HashError::QuadricPoint.to_string());
    }
    Ok(f4 / (&f2 * &f2))
}

fn representative(i: usize) -> ProjPoint<RationalField> {
    orbit_representatives()[i].1.clone()
}

pub(crate) fn nodal_lambdas(ctx: &Context) -> Outcome {
    let v = (0..4).map(|i| lambda_at(ctx, &representative(i))).collect::<Result<Vec<_>, _>>()?;
    Ok(join(v, ", "))
}

pub(crate) fn lambda_of(ctx: &Context, i: usize) -> Outcome {
    Ok(lambda_at(ctx, &representative(i))?.to_string())
}

/// Nodes of the member through the `i`-th representative, over its orbit.
pub(crate) fn nodes_of(ctx: &Context, i: usize) -> Outcome {
    let p = representative(i);
    let member = ctx.member(&lambda_at(ctx, &p)?);
    let orbit = a5_orbit(&RationalField, &p).map_err(err)?;
    let mut nodes = 0;
    for q in &orbit.points {
        match node_report(&member, q) {
            Ok(r) => nodes += r.is_node() as usize,
            Err(HashError::NotOnSurface) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("{nodes}/{}", orbit.len()))
}

pub(crate) fn orbit_lengths(_: &Context) -> Outcome {
    let v = (0..4)
        .map(|i| a5_orbit(&RationalField, &representative(i)).map(|o| o.len()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    Ok(join(v, ", "))
}

pub(crate) fn sigma12_orbits(_: &Context) -> Outcome {
    let r = special_zeta_points().map_err(err)?;
    Ok(join(r.orbit_lengths(), ", "))
}

fn census(i: usize) -> Result<IncidenceReport, String> {
    let orbit = a5_orbit(&RationalField, &representative(i)).map_err(err)?;
    Ok(incidence_census(&RationalField, &orbit.points))
}

pub(crate) fn ten_lines(_: &Context) -> Outcome {
    let r = census(1)?;
    Ok(format!(
        "{} lines through 3 points; orbit of 10 lines, 3 points each, 3 per point: {}",
        r.lines_with_3plus(),
        yes(r.has_line_orbit(10, 10, 3, 3))
    ))
}

pub(crate) fn ten_planes(_: &Context) -> Outcome {
    let r = census(2)?;
    let mut sizes: Vec<usize> = r.plane_orbits.iter().map(|o| o.len()).collect();
    sizes.sort();
    Ok(format!(
        "plane orbits {}; orbit of 10 planes, 4 points each, 4 per point: {}",
        join(sizes, "+"),
        yes(r.has_plane_orbit(10, 10, 4, 4))
    ))
}

pub(crate) fn witness_planes(_: &Context) -> Outcome {
    Ok(format!(
        "Sigma10: {}; Sigma10': {}",
        yes(census(1)?.witness_plane.is_some()),
        yes(census(2)?.witness_plane.is_some())
    ))
}

pub(crate) fn quadric_rank(_: &Context, i: usize) -> Outcome {
    let orbit = a5_orbit(&RationalField, &representative(i)).map_err(err)?;
    Ok(quadrics_through_rank(&RationalField, &orbit.points).to_string())
}

// ---- projection of S₁₀ and S₁₀′ from a node

fn delta_at(i: usize, lambda: Rational) -> Result<PlaneCurve, String> {
    let node = representative(i);
    let chart = ChartSpec::centered(&node).map_err(err)?;
    let q = node_chart(&lambda, &node, &chart).map_err(err)?;
    discriminant_sextic(&q).map_err(err)
}

pub(crate) fn affine_chart(_: &Context) -> Outcome {
    let node = representative(1);
    let printed = ChartSpec::printed_x10();
    let stated =
        parse_expr("(y1+y2+y3+2)^4+y1^4+y2^4+(y3+1)^4+1-1/2*((y1+y2+y3+2)^2+y1^2+y2^2+(y3+1)^2+1)^2", &chart_ring())
            .map_err(err)?;
    let same = chart_form(&rat(1, 2), &printed) == stated;
    let image = printed.image(&node).ok_or("node outside the chart")?;
    let centred = ChartSpec::centered(&node).map_err(err)?;
    Ok(format!(
        "equation is the member in the printed chart: {}; node there at ({}); centred chart shift ({})",
        yes(same),
        join(image.iter(), ", "),
        join(centred.shift.iter(), ", ")
    ))
}

pub(crate) fn x10_discriminant(_: &Context) -> Outcome {
    Ok(delta_at(1, rat(1, 2))?.form.render())
}

fn pt(c: [i64; 3]) -> ProjPoint<RationalField> {
    ProjPoint::new(&RationalField, c.iter().map(|&v| int(v)).collect()).expect("nonzero")
}

pub(crate) fn tacnodes(_: &Context) -> Outcome {
    let param = conic_param(&x10_conic(), &pt([0, 0, 1])).map_err(err)?;
    let zeta = x10_cubic();
    let mut out = Vec::new();
    for c in [[0, 1, -1], [1, 0, -1], [0, 0, 1]] {
        let m = pullback_root_multiplicity(&RationalField, &zeta, &param, &pt(c)).map_err(err)?;
        out.push(format!("[{}]={m}", join(c, ":")));
    }
    Ok(out.join("; "))
}

pub(crate) fn line_transversality(_: &Context) -> Outcome {
    let describe = |curve: &PlaneCurve| -> Result<String, String> {
        let pts = line_curve_transversality(&x10_line(), curve).map_err(err)?;
        let simple = pts.iter().all(|p| p.multiplicity == 1);
        let degrees: Vec<usize> = pts.iter().map(|p| p.field_degree).collect();
        Ok(format!("{} points, simple: {}, field degrees {}", pts.len(), yes(simple), join(degrees, ",")))
    };
    Ok(format!("gamma: {}; zeta: {}", describe(&x10_conic())?, describe(&x10_cubic())?))
}

pub(crate) fn line_conic_points(_: &Context) -> Outcome {
    let pts = line_curve_transversality(&x10_line(), &x10_conic()).map_err(err)?;
    Ok(join(pts.iter().map(|p| p.render()), "; "))
}

pub(crate) fn x10_prime_sextic(_: &Context) -> Outcome {
    Ok(delta_at(2, rat(7, 30))?.form.render())
}

pub(crate) fn nine_nodes(_: &Context, chart: usize) -> Outcome {
    let r = singular_points_in_chart(&x10_prime_sextic_stated(), chart).map_err(err)?;
    Ok(format!("{} singular points, {} nodes", r.total_points, r.total_nodes))
}

pub(crate) fn x10_sextic_singularities(_: &Context) -> Outcome {
    let c = x10_line().mul(&x10_conic()).mul(&x10_cubic());
    let r = singular_points(&c).map_err(err)?;
    Ok(format!("{} singular points, {} nodes", r.total_points, r.total_nodes))
}

pub(crate) fn irreducible(_: &Context) -> Outcome {
    match irreducibility_search(&x10_prime_sextic_stated()).map_err(err)? {
        Some((p, v)) => Ok(format!("irreducible mod {p} at z2 = {v}")),
        None => Ok("no certificate".into()),
    }
}

// ---- the node of S₁₅

pub(crate) fn x15_r2(_: &Context) -> Outcome {
    Ok(x15_tangent_cone().map_err(err)?.r2.render())
}

pub(crate) fn x15_cone(_: &Context) -> Outcome {
    Ok(x15_tangent_cone().map_err(err)?.cone.render())
}

pub(crate) fn x15_checks(_: &Context) -> Outcome {
    let r = x15_tangent_cone().map_err(err)?;
    Ok(r.results.iter().filter(|(_, ok)| *ok).map(|(c, _)| c.code()).collect())
}

// ---- ℙ(U₄) and the other models

pub(crate) fn dim_of(model: P3Model, d: u32) -> Outcome {
    invariant_dim(model, d).map(|n| n.to_string()).map_err(err)
}

pub(crate) fn u2u2_square(_: &Context) -> Outcome {
    let q = invariant_basis(P3Model::U2U2, 2).map_err(err)?;
    let f = invariant_basis(P3Model::U2U2, 4).map_err(err)?;
    let [q] = q.as_slice() else { return Ok(format!("{} quadrics", q.len())) };
    let [f] = f.as_slice() else { return Ok(format!("{} quartics", f.len())) };
    // Both are in echelon form, so the square is the quartic iff they agree
    // after making the square monic.
    let sq = q.mul(q).monic();
    Ok(format!("unique quartic is the square of the quadric: {}", yes(sq == f.monic())))
}

pub(crate) fn sym2_u4(_: &Context) -> Outcome {
    let m = sym2_u4_decompose().map_err(err)?;
    let parts: Vec<String> = m
        .iter()
        .filter(|(_, &k)| k > 0)
        .map(|(n, &k)| if k == 1 { n.to_string() } else { format!("{k}{n}") })
        .collect();
    Ok(parts.join(" + "))
}

pub(crate) fn no_short_orbits(_: &Context) -> Outcome {
    let specs = [SubgroupSpec::binary_tetrahedral(), SubgroupSpec::binary_dihedral_10(), SubgroupSpec::quaternion_8()];
    let mut out = Vec::new();
    for s in specs {
        let r = fixed_point_census(&s).map_err(err)?;
        out.push(format!("{}: {} fixed points", s.name, r.fixed_points.len()));
    }
    Ok(out.join("; "))
}

pub(crate) fn length_ten_orbits(_: &Context) -> Outcome {
    let r = fixed_point_census(&SubgroupSpec::dicyclic_12()).map_err(err)?;
    Ok(format!(
        "orbit lengths {}; distinct orbits {}; stabilizers {}",
        join(&r.orbit_lengths, ","),
        r.distinct_orbits,
        join(&r.stabilizer_orders, ",")
    ))
}

pub(crate) fn nodal_members(_: &Context) -> Outcome {
    let r = u4_pencil_nodal_members().map_err(err)?;
    let counts: Vec<String> = r.members.iter().map(|m| format!("{}/{}", m.node_count, m.orbit.len())).collect();
    let apart = r.members.iter().all(|m| m.parameter != r.discriminant_parameter);
    Ok(format!(
        "{} members, distinct: {}, nodes {}, differ from the discriminant: {}, control member smooth at the orbits: {}",
        r.members.len(),
        yes(r.distinct),
        counts.join(" "),
        yes(apart),
        yes(r.generic_gradient_nonzero)
    ))
}

pub(crate) fn tangent_developable(_: &Context) -> Outcome {
    let r = binary_cubic_discriminant().map_err(err)?;
    Ok(format!(
        "Reynolds-fixed: {}; singular along the cubes: {}; Hessian rank at (1,0,0,0): {}",
        yes(r.reynolds_fixed),
        yes(r.gradient_vanishes_on_cubic),
        r.hessian_rank_at_base
    ))
}

// ---- Bring's curve

pub(crate) fn bring_cut(_: &Context) -> Outcome {
    let r = special_zeta_points().map_err(err)?;
    Ok(format!(
        "{} points ({}); F2=F3=F4=0: {}; F5 nonzero: {}; Jacobian rank 3: {}",
        r.total_points(),
        join(r.orbit_lengths(), "+"),
        yes(r.power_sums_vanish),
        yes(r.f5_nonzero),
        yes(r.jacobian_full_rank)
    ))
}

/// `F₂ = F₃ = F₄ = 0` has at most `2·3·4 = 24` points, with equality only
/// when all are simple; if 24 simple ones are known, they are all of them.
pub(crate) fn no_common_zeros(_: &Context) -> Outcome {
    let r = special_zeta_points().map_err(err)?;
    let complete = r.total_points() == 24 && r.power_sums_vanish && r.jacobian_full_rank;
    Ok(if complete && r.f5_nonzero { "no common zero" } else { "undetermined" }.into())
}

pub(crate) fn genus(d1: i64, d2: i64) -> Outcome {
    ci_genus(d1, d2).map(|g| g.to_string()).map_err(err)
}
