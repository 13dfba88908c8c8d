use crate::numfield::{int, Field, RationalField};
use crate::polyalg::{resultant_wrt, MultiPoly, PolyRing, RingRef, UniPoly};

use super::triangular::{self, Coeffs, U};
use super::{ConicError, PlaneCurve};

/// Points `m(z1) = 0, h(z1, z2) = 0` of the affine chart, in the sheared
/// coordinates of the report. `h` is monic in `z2` modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularSet {
    pub m: MultiPoly<RationalField>,
    pub h: MultiPoly<RationalField>,
    /// `deg m · deg_{z2} h`.
    pub points: usize,
    /// Points of the set at which the Hessian determinant is nonzero.
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularLocusReport {
    /// Index of the coordinate set to 1 for the affine part.
    pub chart: usize,
    /// The affine coordinates are `(u + shear·v, v)` for the two remaining
    /// variables `u, v`.
    pub shear: i64,
    pub components: Vec<TriangularSet>,
    /// Singular points on the line where the chart coordinate vanishes.
    pub infinity_points: usize,
    pub infinity_nodes: usize,
    pub infinity_checked: bool,
    pub total_points: usize,
    pub total_nodes: usize,
    pub all_nodes: bool,
}

/// Singular points of a square-free plane curve, in the chart `z3 = 1` plus
/// the line `z3 = 0`.
pub fn singular_points(c: &PlaneCurve) -> Result<SingularLocusReport, ConicError> {
    singular_points_in_chart(c, 2)
}

/// Same, with `z_{chart+1} = 1` as the affine chart.
pub fn singular_points_in_chart(c: &PlaneCurve, chart: usize) -> Result<SingularLocusReport, ConicError> {
    if chart > 2 {
        return Err(ConicError::NotAPlaneCurve);
    }
    // Reorder so that the chart variable comes last: g(u, v, w).
    let order: Vec<usize> = (0..3).filter(|&i| i != chart).chain([chart]).collect();
    let ring = c.form.ring().clone();
    let mut inv = [0; 3];
    for (pos, &i) in order.iter().enumerate() {
        inv[i] = pos;
    }
    let g = c.form.compose(&inv.iter().map(|&p| MultiPoly::var_at(&ring, p)).collect::<Vec<_>>())?;

    let (shear, components) = affine_part(&g)?;
    let (infinity_points, infinity_nodes) = infinity_part(&g)?;
    let total_points = components.iter().map(|t| t.points).sum::<usize>() + infinity_points;
    let total_nodes = components.iter().map(|t| t.nodes).sum::<usize>() + infinity_nodes;
    Ok(SingularLocusReport {
        chart,
        shear,
        components,
        infinity_points,
        infinity_nodes,
        infinity_checked: true,
        total_points,
        total_nodes,
        all_nodes: total_nodes == total_points,
    })
}

fn affine_ring() -> RingRef<RationalField> {
    PolyRing::new(RationalField, &["u", "v"])
}

fn affine_part(g: &MultiPoly<RationalField>) -> Result<(i64, Vec<TriangularSet>), ConicError> {
    let ring = affine_ring();
    let (u, v) = (MultiPoly::var_at(&ring, 0), MultiPoly::var_at(&ring, 1));
    let f0 = g.compose(&[u.clone(), v.clone(), MultiPoly::one(&ring)])?;
    if f0.is_constant() {
        return Ok((0, Vec::new()));
    }
    let deg = f0.total_degree().unwrap_or(0) as i64;
    // Shear until the leading coefficient in v is a constant, so that no
    // root escapes to infinity and the discriminant detects square factors.
    let mut chosen = None;
    for k in 0..=deg + 1 {
        let fk = f0.compose(&[u.add(&v.scale(&int(k))), v.clone()])?;
        let parts = fk.coeffs_in(1);
        if parts.last().is_some_and(|l| l.is_constant()) && fk.degree_in(1).unwrap_or(0) > 0 {
            chosen = Some((k, fk));
            break;
        }
    }
    let (k, f) = chosen.ok_or(ConicError::NotSquareFree)?;
    let fv = f.diff(1);
    let disc = UniPoly::from_multi(&resultant_wrt(&f, &fv, 1)?, 0)?;
    if disc.is_zero() {
        return Err(ConicError::NotSquareFree);
    }
    let m = disc.squarefree_part();
    if m.degree() == Some(0) {
        return Ok((k, Vec::new()));
    }
    let fu = f.diff(0);
    let hess = f.diff(0).diff(0).mul(&f.diff(1).diff(1)).sub(&f.diff(0).diff(1).pow(2));
    let (cf, cu, cv, ch) = (
        triangular::from_bivariate(&f),
        triangular::from_bivariate(&fu),
        triangular::from_bivariate(&fv),
        triangular::from_bivariate(&hess),
    );

    let mut sets: Vec<(U, Coeffs)> = Vec::new();
    for (m1, g1) in triangular::gcd(&m, &cf, &cv) {
        for (m2, g2) in triangular::gcd(&m1, &g1, &cu) {
            if triangular::degree(&g2).unwrap_or(0) == 0 {
                continue;
            }
            // Square-free part of the gcd in v on each branch.
            let d = triangular::derivative(&g2);
            for (m3, g3) in triangular::gcd(&m2, &g2, &d) {
                let (h, _) = triangular::divrem(&m3, &g2, &g3);
                if triangular::degree(&h).unwrap_or(0) > 0 {
                    sets.push((m3, h));
                }
            }
        }
    }

    let mut out = Vec::new();
    for (m, h) in sets {
        debug_assert!(triangular::divrem(&m, &cf, &h).1.is_empty());
        let (_, hr) = triangular::divrem(&m, &ch, &h);
        for (mi, gi) in triangular::gcd(&m, &h, &hr) {
            let hi = triangular::reduce(&h, &mi);
            let dh = triangular::degree(&hi).unwrap();
            let bad = triangular::degree(&gi).unwrap_or(dh);
            let points = mi.degree().unwrap() * dh;
            out.push(TriangularSet {
                m: mi.to_multi(&ring, 0),
                h: triangular::to_bivariate(&hi, &ring),
                points,
                nodes: points - mi.degree().unwrap() * bad,
            });
        }
    }
    Ok((k, out))
}

/// Singular points with `w = 0`: the points `[u : 1 : 0]` and `[1 : 0 : 0]`.
fn infinity_part(g: &MultiPoly<RationalField>) -> Result<(usize, usize), ConicError> {
    let f = RationalField;
    let ring = g.ring().clone();
    let one = MultiPoly::one(&ring);
    let zero = MultiPoly::zero(&ring);
    let u = MultiPoly::var_at(&ring, 0);
    let w = MultiPoly::var_at(&ring, 2);
    let partials: Vec<_> = std::iter::once(g.clone()).chain(g.gradient()).collect();

    // Points [u : 1 : 0].
    let restrict = |p: &MultiPoly<RationalField>| -> Result<U, ConicError> {
        Ok(UniPoly::from_multi(&p.compose(&[u.clone(), one.clone(), zero.clone()])?, 0)?)
    };
    let mut common = UniPoly::zero(&f);
    for p in &partials {
        common = common.gcd(&restrict(p)?);
    }
    if common.is_zero() {
        return Err(ConicError::NotSquareFree);
    }
    let pts = common.squarefree_part();
    let n = pts.degree().unwrap();
    // Hessian of g(u, 1, w) in (u, w) along w = 0.
    let chart = g.compose(&[u.clone(), one.clone(), w.clone()])?;
    let h = chart.diff(0).diff(0).mul(&chart.diff(2).diff(2)).sub(&chart.diff(0).diff(2).pow(2));
    let bad = if n == 0 { 0 } else { pts.gcd(&restrict(&h)?).degree().unwrap() };
    let (mut points, mut nodes) = (n, n - bad);

    // The point [1 : 0 : 0].
    let corner = [f.one(), f.zero(), f.zero()];
    let mut singular = true;
    for p in &partials {
        singular &= f.is_zero(&p.eval(&corner)?);
    }
    if singular {
        points += 1;
        let v = MultiPoly::var_at(&ring, 1);
        let chart = g.compose(&[one.clone(), v, w])?;
        let h = chart.diff(1).diff(1).mul(&chart.diff(2).diff(2)).sub(&chart.diff(1).diff(2).pow(2));
        if !f.is_zero(&h.eval(&corner)?) {
            nodes += 1;
        }
    }
    Ok((points, nodes))
}
