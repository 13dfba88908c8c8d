//! Exact coefficient fields: rationals, simple algebraic extensions of the
//! rationals, and prime fields.
//!
//! Every field implements [`Field`], a context object that knows how to
//! combine its elements. Polynomials, matrices and groups elsewhere in the
//! crate are generic over it.

mod extension;
mod prime;
mod small;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use extension::{ext_arith, ArithOp, ExtElem, ExtensionField};
pub use prime::{is_prime, PrimeField, PrimeFieldElem};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus has degree zero")]
    DegreeZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    ZeroDivision,
    #[error("nonzero element is not invertible: the modulus is reducible")]
    ReducibleModulus,
    #[error("{0} is not prime")]
    CompositeModulus(u64),
    #[error("rational {0} has no image in this field")]
    NotRepresentable(String),
}

/// A field together with the operations on its elements.
///
/// Elements are plain values; the field object carries whatever context
/// (modulus, prime) the arithmetic needs. Element equality must be
/// structural: two equal field elements compare equal and hash equal.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, NumError>;
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem, NumError>;
    /// The element as a rational number, if it is one.
    fn to_rational(&self, a: &Self::Elem) -> Option<Rational>;
    /// 0 for fields containing the rationals.
    fn characteristic(&self) -> u64;
    /// The roots of unity that lie in this field (used as the candidate
    /// eigenvalues of finite-order matrices).
    fn roots_of_unity(&self) -> Vec<Self::Elem>;
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Product of dense coefficient vectors, low degree first. Fields with
    /// a cheaper route than term-by-term arithmetic override this.
    fn convolve(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(x, y));
            }
        }
        out
    }

    /// Quotient and remainder of dense polynomials. `d` must have a nonzero
    /// last coefficient and `a` at least as many coefficients as `d`. Both
    /// results may carry trailing zeros.
    fn poly_divrem(&self, a: &[Self::Elem], d: &[Self::Elem]) -> (Vec<Self::Elem>, Vec<Self::Elem>) {
        let dd = d.len() - 1;
        let lead_inv = self.inv(&d[dd]).expect("nonzero leading coefficient");
        let mut r = a.to_vec();
        let mut q = vec![self.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = self.mul(&r[k + dd], &lead_inv);
            if !self.is_zero(&c) {
                for (i, di) in d.iter().enumerate() {
                    r[k + i] = self.sub(&r[k + i], &self.mul(&c, di));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (q, r)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, NumError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_integer(BigInt::from(n))).expect("integers embed in every field")
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        small::add(a, b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        small::sub(a, b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        small::mul(a, b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn convolve(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        dense::mul(a, b)
    }
    fn poly_divrem(&self, a: &[Rational], d: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        dense::divrem(a, d)
    }
    fn inv(&self, a: &Rational) -> Result<Rational, NumError> {
        if a.is_zero() {
            Err(NumError::ZeroDivision)
        } else {
            Ok(a.recip())
        }
    }
    fn from_rational(&self, q: &Rational) -> Result<Rational, NumError> {
        Ok(q.clone())
    }
    fn to_rational(&self, a: &Rational) -> Option<Rational> {
        Some(a.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn roots_of_unity(&self) -> Vec<Rational> {
        vec![Rational::one(), -Rational::one()]
    }
    fn fmt_elem(&self, a: &Rational) -> String {
        fmt_rational(a)
    }
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `3`, `-3/4`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `3`, `-3/4`, `+7`. The result is reduced.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if !den.is_positive() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Dense univariate helpers over the rationals (low degree first), shared by
/// the extension-field arithmetic.
pub(crate) mod dense {
    use super::Rational;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    pub fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let mut out: Vec<Rational> = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
                match b.get(i) {
                    Some(y) => x - y,
                    None => x,
                }
            })
            .collect();
        trim(&mut out);
        out
    }

    /// Integer numerators over the least common denominator.
    fn integral(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
        let mut d = BigInt::one();
        for c in v {
            if !c.denom().is_one() && !(&d % c.denom()).is_zero() {
                d = d.lcm(c.denom());
            }
        }
        let nums =
            v.iter().map(|c| if c.denom() == &d { c.numer().clone() } else { c.numer() * (&d / c.denom()) }).collect();
        (nums, d)
    }

    /// Product over a common denominator: one normalization per output
    /// coefficient instead of one per term.
    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let (x, dx) = integral(a);
        let (y, dy) = integral(b);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    out[i + j] += xi * yj;
                }
            }
        }
        let d = dx * dy;
        let mut out: Vec<Rational> = out.into_iter().map(|c| Rational::new(c, d.clone())).collect();
        trim(&mut out);
        out
    }

    /// Quotient and remainder; `b` must be nonzero. The dividend is kept as
    /// integers over one denominator, which grows by the denominator of the
    /// monic divisor at each step.
    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut a = a.to_vec();
        trim(&mut a);
        let mut b = b.to_vec();
        trim(&mut b);
        let db = b.len() - 1;
        if a.len() < b.len() {
            return (Vec::new(), a);
        }
        let lead_inv = b[db].recip();
        let monic: Vec<Rational> = b.iter().map(|c| c * &lead_inv).collect();
        let (d, delta) = integral(&monic);
        let (mut r, mut rho) = integral(&a);
        let mut q = vec![Rational::zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let t = std::mem::take(&mut r[k + db]);
            if t.is_zero() {
                continue;
            }
            q[k] = Rational::new(t.clone(), rho.clone());
            if !delta.is_one() {
                for c in &mut r[..k + db] {
                    *c *= &delta;
                }
                rho *= &delta;
            }
            for (i, di) in d[..db].iter().enumerate() {
                if !di.is_zero() {
                    r[k + i] -= &t * di;
                }
            }
        }
        // The quotient was computed against the monic divisor.
        let mut q: Vec<Rational> = q.iter().map(|c| c * &lead_inv).collect();
        let mut r: Vec<Rational> = r[..db].iter().map(|c| Rational::new(c.clone(), rho.clone())).collect();
        trim(&mut q);
        trim(&mut r);
        (q, r)
    }

    /// Returns `(g, s)` with `s*a ≡ g (mod m)` and `g = gcd(a, m)` monic.
    pub fn half_xgcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let lead = r0.last().cloned().unwrap_or_else(Rational::one).recip();
        let g = r0.iter().map(|c| c * &lead).collect();
        let s = s0.iter().map(|c| c * &lead).collect();
        (g, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5), int(0));
        assert_eq!(fmt_rational(&rat(13, 20)), "13/20");
        assert_eq!(parse_rational(" -26/40 "), Some(rat(-13, 20)));
        assert_eq!(parse_rational("3/0"), None);
        assert_eq!(parse_rational("3/-2"), None);
    }

    #[test]
    fn xgcd_inverts_coprime() {
        // (x + 1) mod (x^2 - 2): inverse is (x - 1)
        let m = vec![int(-2), int(0), int(1)];
        let a = vec![int(1), int(1)];
        let (g, s) = dense::half_xgcd(&a, &m);
        assert_eq!(g, vec![int(1)]);
        let (_, r) = dense::divrem(&dense::mul(&s, &a), &m);
        assert_eq!(r, vec![int(1)]);
    }

    fn naive_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![int(0); (a.len() + b.len()).saturating_sub(1)];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        dense::trim(&mut out);
        out
    }

    fn poly() -> impl proptest::strategy::Strategy<Value = Vec<Rational>> {
        use proptest::prelude::*;
        prop::collection::vec((-30i64..=30, 1i64..=9).prop_map(|(n, d)| rat(n, d)), 0..7)
    }

    proptest::proptest! {
        #![proptest_config(proptest::test_runner::Config::with_cases(500))]

        #[test]
        fn dense_kernels_agree_with_naive_arithmetic(a in poly(), b in poly()) {
            proptest::prop_assert_eq!(dense::mul(&a, &b), naive_mul(&a, &b));
            let mut b = b;
            dense::trim(&mut b);
            if !b.is_empty() {
                let (q, r) = dense::divrem(&a, &b);
                proptest::prop_assert!(r.len() < b.len());
                let mut back = naive_mul(&q, &b);
                back.resize(back.len().max(r.len()), int(0));
                for (i, c) in r.iter().enumerate() {
                    back[i] += c;
                }
                dense::trim(&mut back);
                let mut a = a;
                dense::trim(&mut a);
                proptest::prop_assert_eq!(back, a);
            }
        }
    }
}
