use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::hashimoto::lift;
use crate::numfield::{int, ExtensionField, Field, Rational, RationalField};
use crate::polyalg::{ExactMatrix, MultiPoly, PolyRing, ProjPoint, RingRef, UniPoly};

use super::{ConicError, PlaneCurve};

type Q = RationalField;

fn param_ring() -> RingRef<Q> {
    PolyRing::new(RationalField, &["s", "t"])
}

/// A rational parametrization `P¹ → C` of a smooth conic by projection
/// from a rational point `b`: the line through `b` in direction
/// `w = s·u + t·v` meets `C` again at `-Q(w)·b + 2B(b, w)·w`.
#[derive(Debug, Clone)]
pub struct ConicParam {
    pub conic: PlaneCurve,
    pub base: ProjPoint<Q>,
    pub u: [Rational; 3],
    pub v: [Rational; 3],
    /// The three coordinate forms, quadratic in `s, t`.
    pub forms: [MultiPoly<Q>; 3],
}

fn polar<F: Field>(field: &F, q: &MultiPoly<F>, x: &[F::Elem], y: &[F::Elem]) -> Result<F::Elem, ConicError> {
    let sum: Vec<F::Elem> = x.iter().zip(y).map(|(a, b)| field.add(a, b)).collect();
    let v = field.sub(&field.sub(&q.eval(&sum)?, &q.eval(x)?), &q.eval(y)?);
    Ok(field.div(&v, &field.from_i64(2))?)
}

pub fn conic_param(c: &PlaneCurve, base: &ProjPoint<Q>) -> Result<ConicParam, ConicError> {
    let f = RationalField;
    if c.degree != 2 {
        return Err(ConicError::WrongDegree { expected: 2, got: c.degree });
    }
    let b = base.coords();
    if b.len() != 3 || !c.form.eval(b)?.is_zero() {
        return Err(ConicError::NotOnConic);
    }
    let hess = ExactMatrix::from_fn(&f, 3, 3, |i, j| c.form.diff(i).diff(j).constant_term());
    if hess.det()?.is_zero() {
        return Err(ConicError::SingularConic);
    }
    let k = b.iter().position(|x| !x.is_zero()).unwrap();
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let unit = |i: usize| [0, 1, 2].map(|j| if j == i { int(1) } else { int(0) });
    let (u, v) = (unit(others[0]), unit(others[1]));

    let ring = param_ring();
    let (s, t) = (MultiPoly::var_at(&ring, 0), MultiPoly::var_at(&ring, 1));
    let w: Vec<MultiPoly<Q>> = (0..3).map(|i| s.scale(&u[i]).add(&t.scale(&v[i]))).collect();
    let qw = c.form.compose(&w)?;
    // 2B(b, w) is linear in w: the gradient of Q at b applied to w.
    let grad: Vec<Rational> = c.form.gradient().iter().map(|g| g.eval(b)).collect::<Result<_, _>>()?;
    let two_b = (0..3).fold(MultiPoly::zero(&ring), |acc, i| acc.add(&w[i].scale(&grad[i])));
    let forms = [0, 1, 2].map(|i| qw.scale(&-&b[i]).add(&two_b.mul(&w[i])));
    Ok(ConicParam { conic: c.clone(), base: base.clone(), u, v, forms })
}

impl ConicParam {
    /// `(s : t)` of a point of the conic, possibly over an extension.
    pub fn parameter_of<F: Field>(&self, field: &F, p: &ProjPoint<F>) -> Result<[F::Elem; 2], ConicError> {
        let form = lift(&self.conic.form, field);
        if p.coords().len() != 3 || !field.is_zero(&form.eval(p.coords())?) {
            return Err(ConicError::PointNotOnConic);
        }
        let lift_vec = |x: &[Rational]| -> Result<Vec<F::Elem>, ConicError> {
            Ok(x.iter().map(|c| field.from_rational(c)).collect::<Result<_, _>>()?)
        };
        let b = lift_vec(self.base.coords())?;
        let k = b.iter().position(|x| !field.is_zero(x)).unwrap();
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let alpha = field.div(&p.coords()[k], &b[k])?;
        let s = field.sub(&p.coords()[others[0]], &field.mul(&alpha, &b[others[0]]));
        let t = field.sub(&p.coords()[others[1]], &field.mul(&alpha, &b[others[1]]));
        if !field.is_zero(&s) || !field.is_zero(&t) {
            return Ok([s, t]);
        }
        // p = b: the tangent direction, where B(b, w) = 0.
        let (u, v) = (lift_vec(&self.u)?, lift_vec(&self.v)?);
        Ok([polar(field, &form, &b, &v)?, field.neg(&polar(field, &form, &b, &u)?)])
    }
}

/// Multiplicity of the parameter of `p` as a root of `curve ∘ param`.
pub fn pullback_root_multiplicity<F: Field>(
    field: &F,
    curve: &PlaneCurve,
    param: &ConicParam,
    p: &ProjPoint<F>,
) -> Result<u32, ConicError> {
    let [s0, t0] = param.parameter_of(field, p)?;
    let pulled = curve.form.compose(&param.forms)?;
    if pulled.is_zero() {
        return Err(ConicError::CurveContainsConic);
    }
    binary_root_multiplicity(field, &pulled, &s0, &t0)
}

/// Order of vanishing of a binary form in `s, t` at `(s0 : t0)`.
fn binary_root_multiplicity<F: Field>(
    field: &F,
    form: &MultiPoly<Q>,
    s0: &F::Elem,
    t0: &F::Elem,
) -> Result<u32, ConicError> {
    let lifted = lift(form, field);
    let ring = lifted.ring().clone();
    let (mut poly, root) = if field.is_zero(t0) {
        // Dehomogenize at s = 1; the root is t = 0.
        let g = lifted.compose(&[MultiPoly::one(&ring), MultiPoly::var_at(&ring, 0)])?;
        (UniPoly::from_multi(&g, 0)?, field.zero())
    } else {
        let g = lifted.compose(&[MultiPoly::var_at(&ring, 0), MultiPoly::one(&ring)])?;
        (UniPoly::from_multi(&g, 0)?, field.div(s0, t0)?)
    };
    let linear = UniPoly::new(field, vec![field.neg(&root), field.one()]);
    let mut mult = 0;
    while !poly.is_zero() {
        let (q, r) = poly.divrem(&linear);
        if !r.is_zero() {
            break;
        }
        poly = q;
        mult += 1;
    }
    Ok(mult)
}

/// Coordinates of an intersection point.
#[derive(Debug, Clone)]
pub enum PointCoords {
    Rational(ProjPoint<Q>),
    Quadratic(ExtensionField, ProjPoint<ExtensionField>),
    /// A root of an irreducible factor of degree at least 3 over ℚ that is
    /// not resolved further; the polynomial is in the line parameter.
    Algebraic(String),
}

#[derive(Debug, Clone)]
pub struct IntersectionPoint {
    pub multiplicity: u32,
    /// Degree over ℚ of the field generated by the point.
    pub field_degree: usize,
    pub coords: PointCoords,
}

impl IntersectionPoint {
    pub fn render(&self) -> String {
        match &self.coords {
            PointCoords::Rational(p) => p.fmt_with(&RationalField),
            PointCoords::Quadratic(f, p) => p.fmt_with(f),
            PointCoords::Algebraic(s) => format!("root of {s}"),
        }
    }
}

/// Intersections of a line with a curve, one entry per geometric point
/// (roots of factors of degree 3 or more are listed per root without
/// explicit coordinates).
pub fn line_curve_transversality(line: &PlaneCurve, curve: &PlaneCurve) -> Result<Vec<IntersectionPoint>, ConicError> {
    let f = RationalField;
    if line.degree != 1 {
        return Err(ConicError::WrongDegree { expected: 1, got: line.degree });
    }
    let normal = ExactMatrix::from_rows(&f, vec![(0..3).map(|i| line.form.coefficient(&unit_exps(i))).collect()])?;
    let basis = normal.kernel_basis();
    let (p, r) = (basis[0].clone(), basis[1].clone());
    let ring = param_ring();
    let (s, t) = (MultiPoly::var_at(&ring, 0), MultiPoly::var_at(&ring, 1));
    let images: Vec<MultiPoly<Q>> = (0..3).map(|i| s.scale(&p[i]).add(&t.scale(&r[i]))).collect();
    let pulled = curve.form.compose(&images)?;
    if pulled.is_zero() {
        return Err(ConicError::LineIsComponent);
    }
    let d = curve.degree as usize;
    let g = UniPoly::from_multi(&pulled.compose(&[MultiPoly::var_at(&ring, 0), MultiPoly::one(&ring)])?, 0)?;
    let mut out = Vec::new();
    let at_infinity = d - g.degree().unwrap();
    if at_infinity > 0 {
        out.push(IntersectionPoint {
            multiplicity: at_infinity as u32,
            field_degree: 1,
            coords: PointCoords::Rational(ProjPoint::new(&f, p.clone())?),
        });
    }
    let point_at = |root: &Rational| -> Result<ProjPoint<Q>, ConicError> {
        Ok(ProjPoint::new(&f, (0..3).map(|i| root * &p[i] + &r[i]).collect())?)
    };
    for (mult, factor) in squarefree_decomposition(&g) {
        let (roots, rest) = rational_roots(&factor);
        for root in roots {
            out.push(IntersectionPoint {
                multiplicity: mult,
                field_degree: 1,
                coords: PointCoords::Rational(point_at(&root)?),
            });
        }
        match rest.degree() {
            Some(0) | None => {}
            Some(2) => {
                let c = rest.monic();
                let (b, c0) = (c.coeffs()[1].clone(), c.coeffs()[0].clone());
                let (field, sqrt) = quadratic_field(&(&b * &b - int(4) * &c0));
                for sign in [1, -1] {
                    let root = field.div(
                        &field.add(&field.from_rational(&-&b)?, &field.mul(&sqrt, &field.from_i64(sign))),
                        &field.from_i64(2),
                    )?;
                    let coords = (0..3)
                        .map(|i| {
                            Ok(field.add(&field.mul(&root, &field.from_rational(&p[i])?), &field.from_rational(&r[i])?))
                        })
                        .collect::<Result<Vec<_>, ConicError>>()?;
                    out.push(IntersectionPoint {
                        multiplicity: mult,
                        field_degree: 2,
                        coords: PointCoords::Quadratic(field.clone(), ProjPoint::new(&field, coords)?),
                    });
                }
            }
            Some(k) => {
                let text = rest.to_multi(&ring, 0).render();
                for _ in 0..k {
                    out.push(IntersectionPoint {
                        multiplicity: mult,
                        field_degree: k,
                        coords: PointCoords::Algebraic(text.clone()),
                    });
                }
            }
        }
    }
    Ok(out)
}

fn unit_exps(i: usize) -> Vec<u32> {
    let mut e = vec![0; 3];
    e[i] = 1;
    e
}

/// Yun's algorithm: `(i, a_i)` with `g = c·Π a_i^i`, each `a_i` square-free.
fn squarefree_decomposition(g: &UniPoly<Q>) -> Vec<(u32, UniPoly<Q>)> {
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = g.derivative();
    let a0 = g.gcd(&d);
    let mut b = g.divrem(&a0).0;
    let mut c = d.divrem(&a0).0;
    let mut dd = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&dd);
        if a.degree().unwrap_or(0) > 0 {
            out.push((i, a.monic()));
        }
        b = b.divrem(&a).0;
        c = dd.divrem(&a).0;
        dd = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Rational roots by the rational root theorem, and the cofactor.
fn rational_roots(g: &UniPoly<Q>) -> (Vec<Rational>, UniPoly<Q>) {
    let f = RationalField;
    let lcm = g.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = g.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut rest = g.clone();
    let mut roots = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    let mut candidates = vec![Rational::zero()];
    let lead = ints.last().unwrap().abs();
    let low = ints.iter().find(|c| !c.is_zero()).unwrap().abs();
    for p in divisors(&low) {
        for q in divisors(&lead) {
            let r = Rational::new(p.clone(), q);
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        if rest.eval(&r).is_zero() {
            let lin = UniPoly::new(&f, vec![-r.clone(), Rational::one()]);
            rest = rest.divrem(&lin).0;
            roots.push(r);
        }
    }
    (roots, rest)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            let j = n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
    }
    out
}

/// `ℚ(√d₀)` for the square-free part `d₀` of `disc`, and `√disc` in it.
fn quadratic_field(disc: &Rational) -> (ExtensionField, crate::numfield::ExtElem) {
    // disc = n/d; √disc = √(n·d)/d.
    let nd = disc.numer() * disc.denom();
    let (k, d0) = square_split(&nd);
    let d0r = Rational::from_integer(d0.clone());
    let field = ExtensionField::new(
        &format!("Q(sqrt({d0}))"),
        &format!("sqrt({d0})"),
        &[-d0r, Rational::zero(), Rational::one()],
    )
    .expect("monic quadratic");
    let scale = Rational::new(k, disc.denom().clone());
    let sqrt = field.mul(&field.generator(), &field.from_rational(&scale).unwrap());
    (field, sqrt)
}

/// `n = k²·d₀` with `d₀` square-free.
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = n.abs();
    let mut k = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let sq = &p * &p;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            k *= &p;
        }
        p += 1;
    }
    (k, sign * rest)
}
