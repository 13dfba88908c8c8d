use crate::grouprep::act;
use crate::hashimoto::{lift, node_report, orbit_under};
use crate::numfield::{int, ExtElem, ExtensionField, Field, RationalField};
use crate::polyalg::{MultiPoly, PolyRing, ProjPoint};

use super::census::{fixed_point_census, SubgroupSpec};
use super::{images_in_zeta20, invariant_basis, model_ring, poly_to_zeta20, shared_table, P3Model, U4Error};

type Z = ExtensionField;

/// A member of the invariant pencil in `ℙ(U₄)` through a length-10 orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodalMember {
    /// `[α : β]` for the member `α·q₁ + β·q₂`.
    pub parameter: ProjPoint<Z>,
    pub equation: MultiPoly<Z>,
    pub orbit: Vec<ProjPoint<Z>>,
    pub hessian_ranks: Vec<usize>,
    pub node_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct U4PencilReport {
    /// Reduced-echelon basis `q₁, q₂` of the invariant quartics, over `Q(ζ₅)`.
    pub basis: Vec<MultiPoly<Z>>,
    pub members: Vec<NodalMember>,
    pub distinct: bool,
    /// A member different from the nodal ones, used as a control.
    pub generic_parameter: ProjPoint<Z>,
    /// The control member has nonzero gradient at every orbit point.
    pub generic_gradient_nonzero: bool,
    /// Where the discriminant quartic sits in the pencil.
    pub discriminant_parameter: ProjPoint<Z>,
}

impl U4PencilReport {
    pub fn all_orbit_points_are_nodes(&self) -> bool {
        self.members.iter().all(|m| m.node_count == m.orbit.len())
    }
}

/// `[c₁ : c₂]` with `form = c₁q₁ + c₂q₂`, reading the coefficients at the
/// pivot monomials of the echelon basis.
fn pencil_coordinates(basis: &[MultiPoly<Z>], form: &MultiPoly<Z>) -> Option<Vec<ExtElem>> {
    let f = form.field();
    let mut acc = MultiPoly::zero(form.ring());
    let mut coords = Vec::new();
    for q in basis {
        let (pivot, _) = q.leading_term()?;
        let c = form.coefficient(&pivot.0);
        acc = acc.add(&q.scale(&c));
        coords.push(c);
    }
    (acc == *form && coords.iter().any(|c| !f.is_zero(c))).then_some(coords)
}

fn combine(basis: &[MultiPoly<Z>], param: &ProjPoint<Z>) -> MultiPoly<Z> {
    let c = param.coords();
    basis[0].scale(&c[0]).add(&basis[1].scale(&c[1]))
}

/// The two members of the pencil singular along the length-10 orbits.
pub fn u4_pencil_nodal_members() -> Result<U4PencilReport, U4Error> {
    let z20 = Z::zeta20();
    let basis = invariant_basis(P3Model::U4, 4)?;
    if basis.len() != 2 {
        return Err(U4Error::BasisDegenerate);
    }
    let basis20: Vec<_> = basis.iter().map(poly_to_zeta20).collect();
    let census = fixed_point_census(&SubgroupSpec::dicyclic_12())?;
    let a5_gens = images_in_zeta20(&crate::grouprep::u4_matrices());

    let mut members: Vec<NodalMember> = Vec::new();
    for p in &census.fixed_points {
        if members.iter().any(|m| m.orbit.contains(p)) {
            continue;
        }
        let v: Vec<ExtElem> = basis20.iter().map(|q| q.eval(p.coords())).collect::<Result<_, _>>()?;
        if v.iter().all(|x| z20.is_zero(x)) {
            return Err(U4Error::BasisDegenerate);
        }
        let parameter = ProjPoint::new(&z20, vec![v[1].clone(), z20.neg(&v[0])])?;
        let equation = combine(&basis20, &parameter);
        let orbit = orbit_under(&z20, &a5_gens, p)?.points;
        let mut hessian_ranks = Vec::with_capacity(orbit.len());
        let mut node_count = 0;
        for q in &orbit {
            let r = node_report(&equation, q)?;
            node_count += r.is_node() as usize;
            hessian_ranks.push(r.hessian_rank);
        }
        members.push(NodalMember { parameter, equation, orbit, hessian_ranks, node_count });
    }
    let distinct = members.len() == 2 && members[0].parameter != members[1].parameter;

    let mut t = 1;
    let generic_parameter = loop {
        let cand = ProjPoint::new(&z20, vec![z20.one(), z20.from_i64(t)])?;
        if members.iter().all(|m| m.parameter != cand) {
            break cand;
        }
        t += 1;
    };
    let generic = combine(&basis20, &generic_parameter);
    let gradient = generic.gradient();
    let mut generic_gradient_nonzero = true;
    for q in members.iter().flat_map(|m| &m.orbit) {
        let mut all_zero = true;
        for g in &gradient {
            all_zero &= z20.is_zero(&g.eval(q.coords())?);
        }
        generic_gradient_nonzero &= !all_zero;
    }

    let disc = lift(&discriminant_form(), shared_table().field());
    let disc = disc.map_field(&model_ring(shared_table().field()), |x| Ok(x.clone()))?;
    let coords = pencil_coordinates(&basis, &disc).ok_or(U4Error::NotInPencil)?;
    let discriminant_parameter =
        ProjPoint::new(&z20, coords.iter().map(|c| c.map_generator(&z20.pow(&z20.generator(), 4))).collect())?;

    Ok(U4PencilReport { basis, members, distinct, generic_parameter, generic_gradient_nonzero, discriminant_parameter })
}

pub const CUBIC_VARS: [&str; 4] = ["a0", "a1", "a2", "a3"];

/// Discriminant of `a0·t³ + a1·t²s + a2·ts² + a3·s³`.
fn discriminant_form() -> MultiPoly<RationalField> {
    let ring = PolyRing::new(RationalField, &CUBIC_VARS);
    let terms: [([u32; 4], i64); 5] =
        [([0, 2, 2, 0], 1), ([1, 0, 3, 0], -4), ([0, 3, 0, 1], -4), ([1, 1, 1, 1], 18), ([2, 0, 0, 2], -27)];
    terms.iter().fold(MultiPoly::zero(&ring), |acc, (e, c)| acc.add(&MultiPoly::monomial(&ring, e, int(*c))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantReport {
    /// The quartic, in the coefficients `a0..a3` of a binary cubic, which are
    /// the coordinates of `U₄ = Sym³U₂` in the basis `e1³, e1²e2, e1e2², e2³`.
    pub form: MultiPoly<RationalField>,
    pub reynolds_fixed: bool,
    pub gradient_vanishes_on_cubic: bool,
    pub hessian_rank_at_base: usize,
    /// Coordinates in the echelon basis of the invariant quartics.
    pub pencil_coordinates: Vec<ExtElem>,
}

/// The discriminant quartic with its certificates: (a) fixed by the Reynolds
/// projection of the `U₄` action, (b) singular along the cubes
/// `(t³, 3t²s, 3ts², s³)`, (c) chart Hessian of rank 1 at `(1, 0, 0, 0)`.
pub fn binary_cubic_discriminant() -> Result<DiscriminantReport, U4Error> {
    let table = shared_table();
    let f = table.field();
    let form = discriminant_form();
    let lifted = lift(&form, f);

    let images = table.model("U4").images();
    let mut sum = MultiPoly::zero(lifted.ring());
    for g in images {
        sum = sum.add(&act(&lifted, g)?);
    }
    let average = sum.scale(&f.inv(&f.from_i64(images.len() as i64))?);
    let reynolds_fixed = average == lifted;
    if !reynolds_fixed {
        return Err(U4Error::NotInvariant);
    }

    let ts = PolyRing::new(RationalField, &["t", "s"]);
    let (t, s) = (MultiPoly::var_at(&ts, 0), MultiPoly::var_at(&ts, 1));
    let cubes = [t.pow(3), t.pow(2).mul(&s).scale(&int(3)), t.mul(&s.pow(2)).scale(&int(3)), s.pow(3)];
    let mut gradient_vanishes_on_cubic = true;
    for g in form.gradient() {
        gradient_vanishes_on_cubic &= g.compose(&cubes)?.is_zero();
    }
    if !gradient_vanishes_on_cubic {
        return Err(U4Error::GradientOnCubic);
    }

    let base = ProjPoint::new(&RationalField, vec![int(1), int(0), int(0), int(0)])?;
    let hessian_rank_at_base = node_report(&form, &base)?.hessian_rank;
    if hessian_rank_at_base != 1 {
        return Err(U4Error::HessianRank(hessian_rank_at_base));
    }

    let basis = invariant_basis(P3Model::U4, 4)?;
    let in_model = lifted.map_field(&model_ring(f), |x| Ok(x.clone()))?;
    let pencil_coordinates = pencil_coordinates(&basis, &in_model).ok_or(U4Error::NotInPencil)?;

    Ok(DiscriminantReport {
        form,
        reynolds_fixed,
        gradient_vanishes_on_cubic,
        hessian_rank_at_base,
        pencil_coordinates,
    })
}
