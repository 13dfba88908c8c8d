use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::numfield::{Field, NumError};

use super::PolyError;

/// Variable names plus coefficient field. Shared by reference between all
/// polynomials of the ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str]) -> RingRef<F> {
        Arc::new(PolyRing { field, vars: vars.iter().map(|v| v.to_string()).collect() })
    }

    pub fn from_names(field: F, vars: Vec<String>) -> RingRef<F> {
        Arc::new(PolyRing { field, vars })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

/// Exponent vector, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// Graded-lex: total degree first, then the exponent of the first variable,
/// then the second, and so on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial. Terms are kept in descending graded-lex
/// order with nonzero coefficients and no repeated monomials, so equality is
/// structural.
#[derive(Clone)]
pub struct MultiPoly<F: Field> {
    ring: RingRef<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> Hash for MultiPoly<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        MultiPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(ring.arity()), c)])
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &RingRef<F>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &RingRef<F>, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var_at(ring, ring.var_index(name)?))
    }

    pub fn var_at(ring: &RingRef<F>, i: usize) -> Self {
        let mut e = vec![0; ring.arity()];
        e[i] = 1;
        Self::from_terms(ring, vec![(Monomial(e), ring.field().one())])
    }

    /// All ring variables in order.
    pub fn vars(ring: &RingRef<F>) -> Vec<Self> {
        (0..ring.arity()).map(|i| Self::var_at(ring, i)).collect()
    }

    pub fn monomial(ring: &RingRef<F>, exps: &[u32], c: F::Elem) -> Self {
        Self::from_terms(ring, vec![(Monomial(exps.to_vec()), c)])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &RingRef<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), ring.arity());
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef<F>, acc: HashMap<Monomial, F::Elem>) -> Self {
        let field = ring.field();
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.total_degree() == 0)
    }

    /// Coefficient of the given exponent vector.
    pub fn coefficient(&self, exps: &[u32]) -> F::Elem {
        self.terms.iter().find(|(m, _)| m.0 == exps).map(|(_, c)| c.clone()).unwrap_or_else(|| self.field().zero())
    }

    pub fn constant_term(&self) -> F::Elem {
        self.coefficient(&vec![0; self.ring.arity()])
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.total_degree())
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.0[var]).max()
    }

    /// Indices of the variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.arity()).filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.total_degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(m, _)| m.total_degree() == d),
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(same_ring(&self.ring, &other.ring), "polynomials from different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ring(other);
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => b.0.cmp(&a.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { field.neg(c) } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let (m, a) = &self.terms[i];
                    let b = &other.terms[j].1;
                    let c = if negate { field.sub(a, b) } else { field.add(a, b) };
                    if !field.is_zero(&c) {
                        out.push((m.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scales so that the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field().inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Exact evaluation at a point with one coordinate per ring variable.
    pub fn eval(&self, point: &[F::Elem]) -> Result<F::Elem, PolyError> {
        if point.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch { expected: self.ring.arity(), got: point.len() });
        }
        let field = self.field();
        let mut powers: Vec<Vec<F::Elem>> = point.iter().map(|x| vec![field.one(), x.clone()]).collect();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = field.mul(pw.last().unwrap(), &pw[1]);
                    pw.push(next);
                }
                t = field.mul(&t, &pw[e as usize]);
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Ring homomorphism sending the i-th variable to `images[i]`; the
    /// result lives in the images' common ring.
    pub fn compose(&self, images: &[MultiPoly<F>]) -> Result<MultiPoly<F>, PolyError> {
        if images.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch { expected: self.ring.arity(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => {
                return Ok(MultiPoly::constant(&self.ring, self.constant_term()));
            }
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<MultiPoly<F>>> =
            images.iter().map(|p| vec![MultiPoly::one(&target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        let field = self.field();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul(&pw[1]);
                    pw.push(next);
                }
                t = t.mul(&pw[e as usize]);
            }
            for (tm, tc) in t.terms {
                match acc.get_mut(&tm) {
                    Some(v) => *v = field.add(v, &tc),
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Ok(MultiPoly::from_map(&target, acc))
    }

    /// Substitutes the named variables; every other variable maps to the
    /// variable of the same name in `target`.
    pub fn subs(&self, bindings: &[(&str, MultiPoly<F>)], target: &RingRef<F>) -> Result<MultiPoly<F>, PolyError> {
        let mut images = Vec::with_capacity(self.ring.arity());
        for name in self.ring.vars() {
            match bindings.iter().find(|(v, _)| v == name) {
                Some((_, p)) => {
                    if !same_ring(&p.ring, target) {
                        return Err(PolyError::RingMismatch);
                    }
                    images.push(p.clone());
                }
                None => images.push(MultiPoly::var(target, name)?),
            }
        }
        for (v, _) in bindings {
            self.ring.var_index(v)?;
        }
        self.compose(&images)
    }

    /// Moves the polynomial into a ring containing all of its variables
    /// (matched by name).
    pub fn embed(&self, target: &RingRef<F>) -> Result<MultiPoly<F>, PolyError> {
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.var_index(v).ok()).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; target.arity()];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    let j = map[i].ok_or_else(|| PolyError::UnknownVariable(self.ring.vars()[i].clone()))?;
                    e[j] += x;
                }
            }
            terms.push((Monomial(e), c.clone()));
        }
        Ok(MultiPoly::from_terms(target, terms))
    }

    /// Changes the coefficient field through `f`, keeping variable names.
    pub fn map_field<G: Field>(
        &self,
        target: &RingRef<G>,
        f: impl Fn(&F::Elem) -> Result<G::Elem, NumError>,
    ) -> Result<MultiPoly<G>, PolyError> {
        if target.arity() != self.ring.arity() {
            return Err(PolyError::ArityMismatch { expected: self.ring.arity(), got: target.arity() });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f(c)?));
        }
        Ok(MultiPoly::from_terms(target, terms))
    }

    pub fn diff(&self, var: usize) -> Self {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[var];
                e[var] -= 1;
                (Monomial(e), field.mul(c, &field.from_i64(k as i64)))
            })
            .collect();
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn diff_var(&self, name: &str) -> Result<Self, PolyError> {
        Ok(self.diff(self.ring.var_index(name)?))
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.ring.arity()).map(|i| self.diff(i)).collect()
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.total_degree() == d).cloned().collect(),
        }
    }

    /// Sum of the terms whose degree in the listed variables is exactly `d`.
    pub fn homogeneous_part_in(&self, vars: &[usize], d: u32) -> Self {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| vars.iter().map(|&v| m.0[v]).sum::<u32>() == d).cloned().collect(),
        }
    }

    /// `[c_0, c_1, ...]` with `self = Σ c_k var^k`; the `c_k` stay in the same
    /// ring and do not involve `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut e = m.0.clone();
            e[var] = 0;
            buckets[k].push((Monomial(e), c.clone()));
        }
        buckets.into_iter().map(|t| MultiPoly::from_terms(&self.ring, t)).collect()
    }

    /// Exact quotient `self / g`; fails if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Result<Self, PolyError> {
        self.check_ring(g);
        let (lm, lc) = g.terms.first().ok_or(PolyError::Num(NumError::ZeroDivision))?;
        let field = self.field();
        let lc_inv = field.inv(lc)?;
        let mut r = self.clone();
        let mut q_terms = Vec::new();
        while let Some((m, c)) = r.terms.first().cloned() {
            if !lm.divides(&m) {
                return Err(PolyError::InexactDivision);
            }
            let qm = m.div(lm);
            let qc = field.mul(&c, &lc_inv);
            r = r.sub(&g.mul_monomial(&qm, &qc));
            q_terms.push((qm, qc));
        }
        Ok(MultiPoly::from_terms(&self.ring, q_terms))
    }

    /// Dehomogenizes by setting the variable to one (the ring is kept).
    pub fn set_var(&self, var: usize, value: &F::Elem) -> Self {
        let mut images = MultiPoly::vars(&self.ring);
        images[var] = MultiPoly::constant(&self.ring, value.clone());
        self.compose(&images).expect("same arity")
    }

    /// Textual rendering in descending graded-lex order with explicit
    /// coefficients, `*` and `^`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let field = self.field();
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = match field.to_rational(c) {
                Some(q) if q < num_traits::Zero::zero() => (true, field.neg(c)),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&field.fmt_elem(&abs));
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => {
                        out.push('*');
                        out.push_str(&self.ring.vars()[i]);
                    }
                    _ => {
                        out.push('*');
                        out.push_str(&self.ring.vars()[i]);
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.render())
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident) => {
        impl<F: Field> std::ops::$trait<&MultiPoly<F>> for &MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $method(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
                MultiPoly::$method(self, rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl<F: Field> std::ops::Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{int, RationalField};

    fn ring() -> RingRef<RationalField> {
        PolyRing::new(RationalField, &["x", "y", "z"])
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![0, 2, 0]);
        let b = Monomial(vec![1, 0, 0]);
        let c = Monomial(vec![1, 1, 0]);
        let d = Monomial(vec![0, 1, 1]);
        assert!(a > b);
        assert!(c > a);
        assert!(c > d);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let r = ring();
        let x = MultiPoly::var(&r, "x").unwrap();
        let y = MultiPoly::var(&r, "y").unwrap();
        let f = &(&x + &y).pow(2) - &(&x - &y).pow(2);
        assert_eq!(f, x.mul(&y).scale(&int(4)));
        assert!((&f - &f).is_zero());
        assert_eq!(f.render(), "4*x*y");
    }

    #[test]
    fn derivatives_and_parts() {
        let r = ring();
        let x = MultiPoly::var(&r, "x").unwrap();
        let one = MultiPoly::one(&r);
        assert_eq!(x.pow(3).diff(0), x.pow(2).scale(&int(3)));
        let f = (&x + &one).pow(2);
        assert_eq!(f.homogeneous_part(2), x.pow(2));
        assert!(x.homogeneous_part(0).is_zero());
        assert_eq!(MultiPoly::var(&r, "w").unwrap_err(), PolyError::UnknownVariable("w".into()));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x = MultiPoly::var(&r, "x").unwrap();
        let y = MultiPoly::var(&r, "y").unwrap();
        let a = &x + &y;
        let b = &(&x - &y) + &MultiPoly::from_i64(&r, 3);
        assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        assert_eq!(x.div_exact(&y).unwrap_err(), PolyError::InexactDivision);
    }

    #[test]
    fn evaluation_checks_arity() {
        let r = ring();
        let x = MultiPoly::var(&r, "x").unwrap();
        assert_eq!(x.eval(&[int(1)]).unwrap_err(), PolyError::ArityMismatch { expected: 3, got: 1 });
        let f = &x.pow(2) + &MultiPoly::from_i64(&r, 7);
        assert_eq!(f.eval(&[int(0), int(0), int(0)]).unwrap(), int(7));
    }
}
