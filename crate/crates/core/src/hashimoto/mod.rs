//! The pencil `F₄ = λF₂²` of A₅-invariant quartics on `P³ = P(W₄)`, its
//! special orbits and nodal members.
//!
//! Points of `P³` are written in the coordinates `x1..x4`; the fifth
//! coordinate is `x0 = -(x1 + x2 + x3 + x4)`.

mod incidence;
mod orbit;
mod x15;

use thiserror::Error;

use crate::grouprep::GroupError;
use crate::numfield::{Field, NumError, Rational, RationalField};
use crate::polyalg::{ExactMatrix, MultiPoly, PolyError, PolyRing, ProjPoint, RingRef};

pub use incidence::{incidence_census, IncidenceReport};
pub use orbit::{a5_orbit, orbit_under, special_zeta_points, w4_generators_in, OrbitSet, ZetaPointsReport};
pub use x15::{x15_tangent_cone, X15Check, X15Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HashError {
    #[error("power sums are available for degrees 2 to 5, not {0}")]
    UnsupportedIndex(u32),
    #[error("F2 vanishes at the point but F4 does not; no member passes through it")]
    QuadricPoint,
    #[error("F2 and F4 both vanish at the point; every member passes through it")]
    IndeterminatePoint,
    #[error("the point is not on the surface")]
    NotOnSurface,
    #[error("expected a point with {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coordinates do not sum to zero")]
    NotOnHyperplane,
    #[error("degrees must be positive")]
    InvalidDegree,
    #[error("genus formula gave a non-integer")]
    NonIntegral,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub const VARS: [&str; 4] = ["x1", "x2", "x3", "x4"];

/// The rational ring in `x1..x4`.
pub fn w4_ring() -> RingRef<RationalField> {
    PolyRing::new(RationalField, &VARS)
}

/// `F_i = x0^i + x1^i + ... + x4^i` with `x0` eliminated.
pub fn power_sum_form(i: u32) -> Result<MultiPoly<RationalField>, HashError> {
    if !(2..=5).contains(&i) {
        return Err(HashError::UnsupportedIndex(i));
    }
    Ok(power_sum_in(&w4_ring(), i))
}

fn power_sum_in<F: Field>(ring: &RingRef<F>, i: u32) -> MultiPoly<F> {
    let xs = MultiPoly::vars(ring);
    let x0 = xs.iter().fold(MultiPoly::zero(ring), |acc, x| acc.sub(x));
    xs.iter().fold(x0.pow(i), |acc, x| acc.add(&x.pow(i)))
}

/// A member `F₄ - λF₂² = 0` of the pencil.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilMember {
    pub lambda: Rational,
    pub equation: MultiPoly<RationalField>,
}

pub fn hashimoto_quartic(lambda: &Rational) -> PencilMember {
    let ring = w4_ring();
    let f2 = power_sum_in(&ring, 2);
    let f4 = power_sum_in(&ring, 4);
    PencilMember { lambda: lambda.clone(), equation: f4.sub(&f2.pow(2).scale(lambda)) }
}

/// A rational polynomial viewed over another field of characteristic 0.
pub fn lift<F: Field>(p: &MultiPoly<RationalField>, field: &F) -> MultiPoly<F> {
    let names: Vec<String> = p.ring().vars().to_vec();
    let ring = PolyRing::from_names(field.clone(), names);
    p.map_field(&ring, |q| field.from_rational(q)).expect("same arity")
}

/// The point `[x0 : x1 : x2 : x3 : x4]`, which must satisfy `Σ x_i = 0`.
pub fn point_from_x0x4<F: Field>(field: &F, coords: &[F::Elem]) -> Result<ProjPoint<F>, HashError> {
    if coords.len() != 5 {
        return Err(HashError::DimensionMismatch { expected: 5, got: coords.len() });
    }
    let sum = coords.iter().fold(field.zero(), |a, c| field.add(&a, c));
    if !field.is_zero(&sum) {
        return Err(HashError::NotOnHyperplane);
    }
    Ok(ProjPoint::new(field, coords[1..].to_vec())?)
}

/// Shorthand for a rational point given by five integers.
pub fn rational_point(coords: [i64; 5]) -> ProjPoint<RationalField> {
    let c: Vec<Rational> = coords.iter().map(|&v| Rational::from_integer(v.into())).collect();
    point_from_x0x4(&RationalField, &c).expect("coordinates sum to zero")
}

/// Renders with the eliminated coordinate restored, `[x0 : ... : x4]`.
pub fn fmt_x0x4<F: Field>(field: &F, p: &ProjPoint<F>) -> String {
    let c = p.coords();
    let x0 = c.iter().fold(field.zero(), |a, x| field.sub(&a, x));
    let all: Vec<String> = std::iter::once(&x0).chain(c.iter()).map(|x| field.fmt_elem(x)).collect();
    format!("[{}]", all.join(":"))
}

/// The four orbit representatives listed for Σ₅, Σ₁₀, Σ₁₀′, Σ₁₅.
pub fn orbit_representatives() -> [(&'static str, ProjPoint<RationalField>); 4] {
    [
        ("Sigma5", rational_point([-4, 1, 1, 1, 1])),
        ("Sigma10", rational_point([0, 0, 0, -1, 1])),
        ("Sigma10'", rational_point([-2, -2, -2, 3, 3])),
        ("Sigma15", rational_point([0, -1, -1, 1, 1])),
    ]
}

/// `λ = F₄(p) / F₂(p)²`, the unique member through `p`.
pub fn lambda_through<F: Field>(field: &F, p: &ProjPoint<F>) -> Result<F::Elem, HashError> {
    let f2 = lift(&power_sum_form(2)?, field).eval(p.coords())?;
    let f4 = lift(&power_sum_form(4)?, field).eval(p.coords())?;
    match (field.is_zero(&f2), field.is_zero(&f4)) {
        (true, true) => Err(HashError::IndeterminatePoint),
        (true, false) => Err(HashError::QuadricPoint),
        _ => Ok(field.div(&f4, &field.mul(&f2, &f2))?),
    }
}

/// Local data of a quartic surface at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeReport<F: Field> {
    pub point: ProjPoint<F>,
    pub on_surface: bool,
    pub gradient_zero: bool,
    /// Rank of the 3×3 Hessian in the affine chart where the last nonzero
    /// coordinate of the point is 1.
    pub hessian_rank: usize,
}

impl<F: Field> NodeReport<F> {
    pub fn is_node(&self) -> bool {
        self.on_surface && self.gradient_zero && self.hessian_rank == 3
    }
}

/// Gradient and chart Hessian of an arbitrary form in four variables at `p`.
pub fn node_report<F: Field>(form: &MultiPoly<F>, p: &ProjPoint<F>) -> Result<NodeReport<F>, HashError> {
    let field = form.field();
    let n = form.ring().arity();
    if p.coords().len() != n {
        return Err(HashError::DimensionMismatch { expected: n, got: p.coords().len() });
    }
    let k = p.coords().iter().rposition(|c| !field.is_zero(c)).unwrap();
    let scale = field.inv(&p.coords()[k])?;
    let pt: Vec<F::Elem> = p.coords().iter().map(|c| field.mul(c, &scale)).collect();
    if !field.is_zero(&form.eval(&pt)?) {
        return Err(HashError::NotOnSurface);
    }
    let mut gradient_zero = true;
    for g in form.gradient() {
        if !field.is_zero(&g.eval(&pt)?) {
            gradient_zero = false;
        }
    }
    let chart = form.set_var(k, &field.one());
    let others: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let mut h = ExactMatrix::zeros(field, others.len(), others.len());
    for (a, &i) in others.iter().enumerate() {
        let di = chart.diff(i);
        for (b, &j) in others.iter().enumerate() {
            h.set(a, b, di.diff(j).eval(&pt)?);
        }
    }
    Ok(NodeReport { point: p.clone(), on_surface: true, gradient_zero, hessian_rank: h.rank() })
}

/// [`node_report`] for the pencil member with parameter `λ`.
pub fn node_certificate(
    lambda: &Rational,
    p: &ProjPoint<RationalField>,
) -> Result<NodeReport<RationalField>, HashError> {
    node_report(&hashimoto_quartic(lambda).equation, p)
}

/// Rank of the matrix of the ten degree-2 monomials evaluated at the
/// points; 10 means no quadric passes through all of them.
pub fn quadrics_through_rank<F: Field>(field: &F, points: &[ProjPoint<F>]) -> usize {
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|p| {
            let c = p.coords();
            let mut row = Vec::with_capacity(10);
            for i in 0..c.len() {
                for j in i..c.len() {
                    row.push(field.mul(&c[i], &c[j]));
                }
            }
            row
        })
        .collect();
    if rows.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(field, rows).unwrap().rank()
}

/// Genus `d₁d₂(d₁ + d₂ - 4)/2 + 1` of a smooth complete intersection of
/// surfaces of degrees `d₁`, `d₂` in `P³`.
pub fn ci_genus(d1: i64, d2: i64) -> Result<i64, HashError> {
    if d1 < 1 || d2 < 1 {
        return Err(HashError::InvalidDegree);
    }
    let twice = d1 * d2 * (d1 + d2 - 4);
    if twice % 2 != 0 {
        return Err(HashError::NonIntegral);
    }
    Ok(twice / 2 + 1)
}

/// The pencil parameters of the four nodal members, as stated.
pub fn nodal_lambdas() -> [Rational; 4] {
    use crate::numfield::rat;
    [rat(13, 20), rat(1, 2), rat(7, 30), rat(1, 4)]
}

#[cfg(test)]
mod tests;
