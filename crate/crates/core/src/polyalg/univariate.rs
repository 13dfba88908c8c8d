//! Dense univariate polynomials over a field, used internally for gcds,
//! square-free parts and the mod-p irreducibility sieve.

use crate::numfield::{Field, PrimeField, Rational, RationalField};

use super::{Monomial, MultiPoly, PolyError, RingRef};

/// Coefficients low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &F) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &F) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// The polynomial `x`.
    pub fn x(field: &F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(f, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect() }
    }

    pub fn scale(&self, k: &F::Elem) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| self.field.mul(c, k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || o.is_zero() {
            return Self::zero(f);
        }
        Self::new(f, f.convolve(&self.coeffs, &o.coeffs))
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = d.degree().expect("division by zero polynomial");
        if self.coeffs.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let (q, r) = f.poly_divrem(&self.coeffs, &d.coeffs);
        (Self::new(f, q), Self::new(f, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).unwrap()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// `(g, s)` with `s·self ≡ g (mod m)` and `g = gcd(self, m)` monic.
    pub fn half_xgcd(&self, m: &Self) -> (Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (m.clone(), self.clone());
        let (mut s0, mut s1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        match r0.lead() {
            None => (r0, s0),
            Some(l) => {
                let inv = f.inv(l).unwrap();
                (r0.scale(&inv), s0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
        Self::new(f, c)
    }

    /// `self / gcd(self, self')`, monic. Correct in characteristic zero and
    /// for polynomials of degree below the characteristic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Reads a polynomial in which only variable `var` occurs.
    pub fn from_multi(p: &MultiPoly<F>, var: usize) -> Result<Self, PolyError> {
        if p.support_vars().iter().any(|&v| v != var) {
            return Err(PolyError::NotUnivariate);
        }
        let f = p.field();
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut c = vec![f.zero(); deg + 1];
        for (m, k) in p.terms() {
            c[m.0[var] as usize] = k.clone();
        }
        Ok(Self::new(f, c))
    }

    pub fn to_multi(&self, ring: &RingRef<F>, var: usize) -> MultiPoly<F> {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut e = vec![0; ring.arity()];
                e[var] = i as u32;
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly::from_terms(ring, terms)
    }
}

/// The single variable a univariate polynomial uses (0 for constants).
fn univariate_var<F: Field>(p: &MultiPoly<F>) -> Result<usize, PolyError> {
    match p.support_vars().as_slice() {
        [] => Ok(0),
        [v] => Ok(*v),
        _ => Err(PolyError::NotUnivariate),
    }
}

/// Monic gcd of two univariate polynomials in the same variable;
/// `gcd(f, 0)` is `f` made monic.
pub fn gcd_uni<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Result<MultiPoly<F>, PolyError> {
    let var = match (f.support_vars().as_slice(), g.support_vars().as_slice()) {
        ([], _) => univariate_var(g)?,
        (_, []) => univariate_var(f)?,
        ([a], [b]) if a == b => *a,
        _ => return Err(PolyError::NotUnivariate),
    };
    let a = UniPoly::from_multi(f, var)?;
    let b = UniPoly::from_multi(g, var)?;
    Ok(a.gcd(&b).to_multi(f.ring(), var))
}

/// `f / gcd(f, f')` made monic.
pub fn squarefree_part<F: Field>(f: &MultiPoly<F>) -> Result<MultiPoly<F>, PolyError> {
    let var = univariate_var(f)?;
    Ok(UniPoly::from_multi(f, var)?.squarefree_part().to_multi(f.ring(), var))
}

/// Distinct-degree sieve: a polynomial of degree `n` over `F_p` is
/// irreducible iff `gcd(x^(p^k) - x, f) = 1` for every `k ≤ n/2`.
pub fn is_irreducible_fp(f: &UniPoly<PrimeField>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let p = f.field().modulus();
    let x = UniPoly::x(f.field());
    let mut xp = x.clone();
    for _ in 1..=n / 2 {
        xp = xp.powmod(p, f);
        if f.gcd(&xp.sub(&x)).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Irreducibility over the `p`-element field of a univariate polynomial
/// with coefficients in `F_p`.
pub fn irreducible_mod_p(f: &MultiPoly<PrimeField>, p: u64) -> Result<bool, PolyError> {
    if !crate::numfield::is_prime(p) {
        return Err(PolyError::CompositeModulus(p));
    }
    if f.field().modulus() != p {
        return Err(PolyError::RingMismatch);
    }
    let var = univariate_var(f)?;
    Ok(is_irreducible_fp(&UniPoly::from_multi(f, var)?))
}

/// Reduces a rational univariate polynomial modulo `p`, refusing when the
/// degree would drop or a denominator vanishes.
pub fn reduce_mod_p(f: &MultiPoly<RationalField>, p: u64) -> Result<UniPoly<PrimeField>, PolyError> {
    let fp = PrimeField::new(p).map_err(|_| PolyError::CompositeModulus(p))?;
    let var = univariate_var(f)?;
    let u = UniPoly::from_multi(f, var)?;
    let mut c = Vec::with_capacity(u.coeffs().len());
    for q in u.coeffs() {
        c.push(fp.from_rational(q).map_err(|_| PolyError::BadLeadingCoefficient)?);
    }
    let out = UniPoly::new(&fp, c);
    if out.degree() != u.degree() {
        return Err(PolyError::BadLeadingCoefficient);
    }
    Ok(out)
}

/// Convenience for `Q[x]` from integer coefficients, low degree first.
pub fn rational_uni(coeffs: &[i64]) -> UniPoly<RationalField> {
    UniPoly::new(&RationalField, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::int;
    use crate::polyalg::{parse_poly, PolyRing};

    #[test]
    fn gcd_and_squarefree() {
        let ring = PolyRing::new(RationalField, &["x"]);
        let p = |s| parse_poly(s, &ring).unwrap();
        assert_eq!(gcd_uni(&p("x^2 - 1"), &p("x - 1")).unwrap(), p("x - 1"));
        assert_eq!(gcd_uni(&p("2*x^2 - 2"), &p("0")).unwrap(), p("x^2 - 1"));
        // (x-1)^2 (x+2)
        assert_eq!(squarefree_part(&p("x^3 - 3*x + 2")).unwrap(), p("x^2 + x - 2"));
    }

    #[test]
    fn not_univariate() {
        let ring = PolyRing::new(RationalField, &["x", "y"]);
        let f = parse_poly("x*y", &ring).unwrap();
        assert_eq!(squarefree_part(&f).unwrap_err(), PolyError::NotUnivariate);
    }

    #[test]
    fn irreducibility_small_primes() {
        let ring = PolyRing::new(RationalField, &["x"]);
        let check = |s, p| {
            let f = parse_poly(s, &ring).unwrap();
            let fp = PrimeField::new(p).unwrap();
            let ring_p = PolyRing::new(fp, &["x"]);
            let g = f.map_field(&ring_p, |q| fp.from_rational(q)).unwrap();
            irreducible_mod_p(&g, p).unwrap()
        };
        assert!(check("x^2 + 1", 3));
        assert!(!check("x^2 - 1", 3));
        assert!(!check("x^2 + 1", 5));
        // x^4 + 1 is reducible modulo every prime
        assert!(!check("x^4 + 1", 7));
        // (x^2 + 1)^2 over F_3 is not irreducible even though it has no roots
        assert!(!check("x^4 + 2*x^2 + 1", 3));
        assert!(check("x^3 + 2*x + 1", 3));
    }

    #[test]
    fn irreducibility_errors() {
        let fp = PrimeField::new(3).unwrap();
        let ring = PolyRing::new(fp, &["x"]);
        let f = MultiPoly::var(&ring, "x").unwrap();
        assert_eq!(irreducible_mod_p(&f, 4).unwrap_err(), PolyError::CompositeModulus(4));
        let q = rational_uni(&[1, 0, 3]).to_multi(&PolyRing::new(RationalField, &["x"]), 0);
        assert_eq!(reduce_mod_p(&q, 3).unwrap_err(), PolyError::BadLeadingCoefficient);
        assert_eq!(reduce_mod_p(&q, 5).unwrap().coeffs().len(), 3);
        assert_eq!(rational_uni(&[1, 2]).eval(&int(3)), int(7));
    }
}
