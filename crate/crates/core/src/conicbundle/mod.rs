//! Projection of a nodal quartic from one of its nodes: the affine chart at
//! the node, the discriminant sextic of the resulting conic bundle, and
//! exact certificates about plane curves (tangency, transversality,
//! singular points, irreducibility over ℚ).

mod conic;
mod irreducible;
mod singular;
mod triangular;

use thiserror::Error;

use crate::hashimoto::{hashimoto_quartic, node_certificate, HashError};
use crate::numfield::{int, Field, NumError, Rational, RationalField};
use crate::polyalg::{parse_expr, MultiPoly, PolyError, PolyRing, ProjPoint, RingRef};

pub use conic::{
    conic_param, line_curve_transversality, pullback_root_multiplicity, ConicParam, IntersectionPoint, PointCoords,
};
pub use irreducible::{irreducibility_search, q_irreducibility_cert, SEARCH_PRIMES, SEARCH_VALUES};
pub use singular::{singular_points, singular_points_in_chart, SingularLocusReport, TriangularSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConicError {
    #[error("the point is not a node of the surface")]
    NotANode,
    #[error("the chart does not send the point to the origin")]
    ChartMissesPoint,
    #[error("the quadratic part at the origin vanishes")]
    DegenerateQuadraticPart,
    #[error("the polynomial has terms of degree below 2 or above 4")]
    NotADoublePoint,
    #[error("the base point is not on the conic")]
    NotOnConic,
    #[error("the conic is singular")]
    SingularConic,
    #[error("the point is not on the parametrized conic")]
    PointNotOnConic,
    #[error("the curve contains the conic")]
    CurveContainsConic,
    #[error("the line is a component of the curve")]
    LineIsComponent,
    #[error("the curve is not square-free")]
    NotSquareFree,
    #[error("the form is not homogeneous of positive degree in z1, z2, z3")]
    NotAPlaneCurve,
    #[error("expected a curve of degree {expected}, got {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("the specialization lowers the degree in z1")]
    DegreeDropped,
    #[error("the prime divides the leading coefficient or a denominator")]
    PrimeDividesLeading,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Hash(#[from] HashError),
}

type Q = RationalField;
type QPoly = MultiPoly<Q>;

pub const PLANE_VARS: [&str; 3] = ["z1", "z2", "z3"];
pub const CHART_VARS: [&str; 3] = ["y1", "y2", "y3"];

pub fn plane_ring() -> RingRef<Q> {
    PolyRing::new(RationalField, &PLANE_VARS)
}

pub fn chart_ring() -> RingRef<Q> {
    PolyRing::new(RationalField, &CHART_VARS)
}

/// A nonzero homogeneous form in `z1, z2, z3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    pub form: QPoly,
    pub degree: u32,
}

impl PlaneCurve {
    pub fn new(form: QPoly) -> Result<Self, ConicError> {
        if form.ring().arity() != 3 || form.is_zero() || !form.is_homogeneous() {
            return Err(ConicError::NotAPlaneCurve);
        }
        let degree = form.total_degree().unwrap_or(0);
        if degree == 0 {
            return Err(ConicError::NotAPlaneCurve);
        }
        Ok(PlaneCurve { form, degree })
    }

    pub fn parse(text: &str) -> Result<Self, ConicError> {
        Self::new(parse_expr(text, &plane_ring())?)
    }

    pub fn contains<F: Field>(&self, field: &F, p: &ProjPoint<F>) -> Result<bool, ConicError> {
        Ok(field.is_zero(&crate::hashimoto::lift(&self.form, field).eval(p.coords())?))
    }

    pub fn mul(&self, other: &PlaneCurve) -> PlaneCurve {
        PlaneCurve { form: self.form.mul(&other.form), degree: self.degree + other.degree }
    }
}

/// A polynomial in `y1, y2, y3` with a double point at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineQuartic {
    pub poly: QPoly,
}

impl AffineQuartic {
    /// Checks that the constant and linear parts vanish and that the degree
    /// is at most 4. The quadratic part may still be zero.
    pub fn new(poly: QPoly) -> Result<Self, ConicError> {
        if poly.ring().arity() != 3
            || !poly.homogeneous_part(0).is_zero()
            || !poly.homogeneous_part(1).is_zero()
            || poly.total_degree().unwrap_or(0) > 4
        {
            return Err(ConicError::NotADoublePoint);
        }
        Ok(AffineQuartic { poly })
    }

    /// `A_d`, the degree-`d` part.
    pub fn part(&self, d: u32) -> QPoly {
        self.poly.homogeneous_part(d)
    }
}

/// An affine chart of `P(W₄)`: `y_i = x_i / x_k + shift_i` over the three
/// indices `i ≠ k` (indices into `x1..x4`, so `k = 3` is `x4`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartSpec {
    pub dehomogenize: usize,
    pub shift: [Rational; 3],
}

impl ChartSpec {
    /// The chart in `x4 ≠ 0` centred at `p`.
    pub fn centered(p: &ProjPoint<Q>) -> Result<Self, ConicError> {
        let c = p.coords();
        let k = 3;
        if c[k] == int(0) {
            return Err(ConicError::ChartMissesPoint);
        }
        let shift = [-(&c[0] / &c[k]), -(&c[1] / &c[k]), -(&c[2] / &c[k])];
        Ok(ChartSpec { dehomogenize: k, shift })
    }

    /// `y1 = x1/x4, y2 = x2/x4, y3 = x3/x4 - 1`, as printed for `X₁₀`.
    pub fn printed_x10() -> Self {
        ChartSpec { dehomogenize: 3, shift: [int(0), int(0), int(-1)] }
    }

    fn others(&self) -> [usize; 3] {
        let v: Vec<usize> = (0..4).filter(|&i| i != self.dehomogenize).collect();
        [v[0], v[1], v[2]]
    }

    /// Coordinates of `p` in the chart, if `x_k(p) ≠ 0`.
    pub fn image(&self, p: &ProjPoint<Q>) -> Option<[Rational; 3]> {
        let c = p.coords();
        let xk = &c[self.dehomogenize];
        if *xk == int(0) {
            return None;
        }
        let o = self.others();
        Some([0, 1, 2].map(|j| &c[o[j]] / xk + &self.shift[j]))
    }
}

/// The member `F₄ - λF₂²` written in the chart, after checking that `node`
/// is a node and that the chart sends it to the origin.
pub fn node_chart(lambda: &Rational, node: &ProjPoint<Q>, chart: &ChartSpec) -> Result<AffineQuartic, ConicError> {
    match node_certificate(lambda, node) {
        Ok(r) if r.is_node() => {}
        Ok(_) | Err(HashError::NotOnSurface) => return Err(ConicError::NotANode),
        Err(e) => return Err(e.into()),
    }
    let img = chart.image(node).ok_or(ConicError::ChartMissesPoint)?;
    if img.iter().any(|c| *c != int(0)) {
        return Err(ConicError::ChartMissesPoint);
    }
    AffineQuartic::new(chart_form(lambda, chart))
}

/// The member in the chart without any checks.
pub fn chart_form(lambda: &Rational, chart: &ChartSpec) -> QPoly {
    let ring = chart_ring();
    let ys = MultiPoly::vars(&ring);
    let mut images = vec![MultiPoly::one(&ring); 4];
    for (j, i) in chart.others().into_iter().enumerate() {
        images[i] = ys[j].sub(&MultiPoly::constant(&ring, chart.shift[j].clone()));
    }
    hashimoto_quartic(lambda).equation.compose(&images).expect("four images")
}

/// Lines `y = t·z` through the origin meet the surface again where
/// `A₂ + A₃t + A₄t² = 0`; the conic is degenerate along `A₃² - 4A₂A₄ = 0`.
pub fn discriminant_sextic(q: &AffineQuartic) -> Result<PlaneCurve, ConicError> {
    let a2 = q.part(2);
    if a2.is_zero() {
        return Err(ConicError::DegenerateQuadraticPart);
    }
    let (a3, a4) = (q.part(3), q.part(4));
    let delta = a3.mul(&a3).sub(&a2.mul(&a4).scale(&int(4)));
    let z = MultiPoly::vars(&plane_ring());
    PlaneCurve::new(delta.compose(&z)?)
}

/// `c` with `f = c·g`, comparing leading terms first.
pub fn equal_up_to_scalar(f: &QPoly, g: &QPoly) -> Option<Rational> {
    match (f.leading_term(), g.leading_term()) {
        (None, None) => Some(int(1)),
        (Some((mf, cf)), Some((mg, cg))) if mf == mg => {
            let c = cf / cg;
            (*f == g.scale(&c)).then_some(c)
        }
        _ => None,
    }
}

/// `ℓ: z3 = 0`.
pub fn x10_line() -> PlaneCurve {
    PlaneCurve::parse("z3").unwrap()
}

/// `γ: z3(z1 + z2) + z1² + z1z2 + z2² = 0`.
pub fn x10_conic() -> PlaneCurve {
    PlaneCurve::parse("z3*(z1 + z2) + z1^2 + z1*z2 + z2^2").unwrap()
}

/// The cubic `ζ`.
pub fn x10_cubic() -> PlaneCurve {
    PlaneCurve::parse("z2*z3^2 + z1*z3^2 + z1^2*z3 + 5*z1*z2*z3 + 4*z1^2*z2 + z2^2*z3 + 4*z1*z2^2").unwrap()
}

/// `ℓ·γ·ζ` as stated.
pub fn x10_sextic_stated() -> PlaneCurve {
    x10_line().mul(&x10_conic()).mul(&x10_cubic())
}

/// The sextic stated for the projection of `S₁₀′` from `[-2:-2:-2:3:3]`.
pub fn x10_prime_sextic_stated() -> PlaneCurve {
    PlaneCurve::parse(
        "-16*z1^6 - 16*z2^6 - 13*z2^2*z3^4 - 13*z1^2*z3^4 - 42*z2^3*z3^3 - 61*z2^4*z3^2 \
         - 42*z1^3*z3^3 - 61*z1^4*z3^2 + 12*z1^4*z2^2 + 104*z1^3*z2^3 + 12*z1^2*z2^4 - 48*z1^5*z2 \
         - 48*z1^5*z3 - 48*z1*z2^5 - 48*z2^5*z3 + 93*z1^2*z2^2*z3^2 - 26*z1^3*z2*z3^2 \
         - 12*z1^2*z2*z3^3 - 12*z1*z2^2*z3^3 - 72*z1^4*z2*z3 + 120*z1^2*z2^3*z3 - 72*z1*z2^4*z3 \
         - 26*z1*z2^3*z3^2 - 10*z1*z2*z3^4 + 120*z1^3*z2^2*z3",
    )
    .unwrap()
}
