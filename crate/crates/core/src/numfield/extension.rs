use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{dense, fmt_rational, int, small, Field, NumError, Rational};

struct ExtInner {
    name: String,
    symbol: String,
    /// Monic minimal polynomial, low degree first; length `degree + 1`.
    modulus: Vec<Rational>,
    /// `Some(n)` when the modulus is the n-th cyclotomic polynomial.
    cyclotomic_order: Option<u32>,
    /// The modulus again, when its coefficients are small integers.
    small_modulus: Option<Vec<i128>>,
}

fn small_modulus(m: &[Rational]) -> Option<Vec<i128>> {
    m.iter()
        .map(|c| match small::get(c)? {
            (n, 1) if n.abs() < 1 << 20 => Some(n),
            _ => None,
        })
        .collect()
}

/// The simple extension `Q[x]/(m(x))`.
///
/// Irreducibility of `m` is not checked; a reducible modulus surfaces as
/// [`NumError::ReducibleModulus`] when a zero divisor is inverted.
#[derive(Clone)]
pub struct ExtensionField {
    inner: Arc<ExtInner>,
}

impl ExtensionField {
    /// Builds `Q[x]/(m)` from the coefficients of `m`, low degree first.
    pub fn new(name: &str, symbol: &str, modulus: &[Rational]) -> Result<Self, NumError> {
        let mut m = modulus.to_vec();
        dense::trim(&mut m);
        if m.len() <= 1 {
            return Err(NumError::DegreeZero);
        }
        if !m.last().unwrap().is_one() {
            return Err(NumError::NotMonic);
        }
        Ok(ExtensionField {
            inner: Arc::new(ExtInner {
                name: name.to_string(),
                symbol: symbol.to_string(),
                small_modulus: small_modulus(&m),
                modulus: m,
                cyclotomic_order: None,
            }),
        })
    }

    /// `Q(ζ_n)`, with modulus the n-th cyclotomic polynomial.
    pub fn cyclotomic(n: u32) -> Self {
        let modulus = cyclotomic_poly(n);
        ExtensionField {
            inner: Arc::new(ExtInner {
                name: format!("ZETA{n}"),
                symbol: "z".to_string(),
                small_modulus: small_modulus(&modulus),
                modulus,
                cyclotomic_order: Some(n),
            }),
        }
    }

    /// `Q(√3)`.
    pub fn sqrt3() -> Self {
        Self::new("SQRT3", "r3", &[int(-3), int(0), int(1)]).unwrap()
    }

    /// `Q(√5)`.
    pub fn sqrt5() -> Self {
        Self::new("SQRT5", "r5", &[int(-5), int(0), int(1)]).unwrap()
    }

    /// `Q(ζ₅)` with modulus `x⁴+x³+x²+x+1`.
    pub fn zeta5() -> Self {
        Self::cyclotomic(5)
    }

    /// `Q(ζ₂₀) = Q(ζ₅, i)`.
    pub fn zeta20() -> Self {
        Self::cyclotomic(20)
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.inner.modulus
    }

    pub fn cyclotomic_order(&self) -> Option<u32> {
        self.inner.cyclotomic_order
    }

    /// The class of `x`.
    pub fn generator(&self) -> ExtElem {
        self.elem(&[Rational::zero(), Rational::one()])
    }

    /// The class of the polynomial with the given coefficients (any length).
    pub fn elem(&self, coeffs: &[Rational]) -> ExtElem {
        ExtElem { field: self.clone(), coeffs: self.reduce(coeffs.to_vec()) }
    }

    pub fn from_rational_elem(&self, q: &Rational) -> ExtElem {
        self.elem(std::slice::from_ref(q))
    }

    /// Reduces an arbitrary coefficient vector modulo the modulus, padding
    /// to exactly `degree` entries.
    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let m = &self.inner.modulus;
        let n = m.len() - 1;
        while c.len() > n {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - n;
            for (i, mi) in m[..n].iter().enumerate() {
                if !mi.is_zero() {
                    c[shift + i] -= &top * mi;
                }
            }
        }
        c.resize(n, Rational::zero());
        c
    }

    fn same(&self, other: &ExtensionField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.modulus == other.inner.modulus
    }

    fn mul_coeffs(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if let Some(v) = self.mul_coeffs_small(a, b) {
            return v;
        }
        let n = self.degree();
        let mut out = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce(out)
    }

    /// Word-sized product over a common denominator; `None` on overflow.
    fn mul_coeffs_small(&self, a: &[Rational], b: &[Rational]) -> Option<Vec<Rational>> {
        let m = self.inner.small_modulus.as_ref()?;
        let (na, da) = small::common_denominator(a)?;
        let (nb, db) = small::common_denominator(b)?;
        let n = self.degree();
        let mut out = vec![0i128; 2 * n - 1];
        for (i, x) in na.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(x.checked_mul(*y)?)?;
            }
        }
        while out.len() > n {
            let top = out.pop().unwrap();
            let shift = out.len() - n;
            for (i, mi) in m[..n].iter().enumerate() {
                out[shift + i] = out[shift + i].checked_sub(top.checked_mul(*mi)?)?;
            }
        }
        let d = da.checked_mul(db)?;
        Some(out.into_iter().map(|c| small::make(c, d)).collect())
    }
}

impl PartialEq for ExtensionField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for ExtensionField {}

impl fmt::Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.name)
    }
}

/// Element of an [`ExtensionField`], stored as the unique representative
/// of degree below the field degree.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtElem {
    field: ExtensionField,
    coeffs: Vec<Rational>,
}

impl Hash for ExtElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl ExtElem {
    pub fn field(&self) -> &ExtensionField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn inv(&self) -> Result<ExtElem, NumError> {
        self.field.inv(self)
    }

    /// `a(x) ↦ a(x^k)` reduced. This is a field automorphism whenever `x^k`
    /// is another root of the modulus, e.g. for cyclotomic fields with
    /// `gcd(k, n) = 1`; `k = n - 1` is complex conjugation.
    pub fn substitute_power(&self, k: u32) -> ExtElem {
        let k = k as usize;
        let mut out = vec![Rational::zero(); k * (self.coeffs.len().max(1) - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] += c;
        }
        ExtElem { field: self.field.clone(), coeffs: self.field.reduce(out) }
    }

    /// Evaluates the representative at `image`, an element of another
    /// field. This is the embedding `x ↦ image` when `image` is a root of
    /// this field's modulus; the caller is responsible for that.
    pub fn map_generator(&self, image: &ExtElem) -> ExtElem {
        let target = image.field();
        self.coeffs
            .iter()
            .rev()
            .fold(target.zero(), |acc, c| target.add(&target.mul(&acc, image), &target.from_rational_elem(c)))
    }

    /// Complex conjugate in a cyclotomic field.
    pub fn conj(&self) -> ExtElem {
        match self.field.cyclotomic_order() {
            Some(n) => self.substitute_power(n - 1),
            None => self.clone(),
        }
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.fmt_elem(self))
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.fmt_elem(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic on two extension elements.
pub fn ext_arith(a: &ExtElem, b: &ExtElem, op: ArithOp) -> Result<ExtElem, NumError> {
    if !a.field.same(&b.field) {
        return Err(NumError::FieldMismatch);
    }
    let f = &a.field;
    Ok(match op {
        ArithOp::Add => f.add(a, b),
        ArithOp::Sub => f.sub(a, b),
        ArithOp::Mul => f.mul(a, b),
    })
}

macro_rules! ext_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl std::ops::$trait<&ExtElem> for &ExtElem {
            type Output = ExtElem;
            fn $method(self, rhs: &ExtElem) -> ExtElem {
                ext_arith(self, rhs, $op).expect("operands from different extension fields")
            }
        }
    };
}

ext_binop!(Add, add, ArithOp::Add);
ext_binop!(Sub, sub, ArithOp::Sub);
ext_binop!(Mul, mul, ArithOp::Mul);

impl std::ops::Neg for &ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        self.field.neg(self)
    }
}

impl Field for ExtensionField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem { field: self.clone(), coeffs: vec![Rational::zero(); self.degree()] }
    }

    fn one(&self) -> ExtElem {
        self.from_rational_elem(&Rational::one())
    }

    fn is_zero(&self, a: &ExtElem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| small::add(x, y)).collect();
        ExtElem { field: self.clone(), coeffs }
    }

    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| small::sub(x, y)).collect();
        ExtElem { field: self.clone(), coeffs }
    }

    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem { field: self.clone(), coeffs: self.mul_coeffs(&a.coeffs, &b.coeffs) }
    }

    fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem { field: self.clone(), coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    fn inv(&self, a: &ExtElem) -> Result<ExtElem, NumError> {
        if a.is_zero() {
            return Err(NumError::ZeroDivision);
        }
        let (g, s) = dense::half_xgcd(&a.coeffs, &self.inner.modulus);
        if g.len() != 1 {
            return Err(NumError::ReducibleModulus);
        }
        Ok(self.elem(&s))
    }

    fn from_rational(&self, q: &Rational) -> Result<ExtElem, NumError> {
        Ok(self.from_rational_elem(q))
    }

    fn to_rational(&self, a: &ExtElem) -> Option<Rational> {
        if a.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn roots_of_unity(&self) -> Vec<ExtElem> {
        let mut out = vec![self.one(), self.neg(&self.one())];
        if let Some(n) = self.cyclotomic_order() {
            let z = self.generator();
            let mut p = self.one();
            for _ in 1..n {
                p = self.mul(&p, &z);
                let q = self.neg(&p);
                for c in [p.clone(), q] {
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }

    fn fmt_elem(&self, a: &ExtElem) -> String {
        let mut parts = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = fmt_rational(c);
            parts.push(match i {
                0 => coef,
                1 => format!("{coef}*{}", self.inner.symbol),
                _ => format!("{coef}*{}^{i}", self.inner.symbol),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            format!("({})", parts.join(" + "))
        }
    }
}

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
fn cyclotomic_poly(n: u32) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); n as usize + 1];
    p[0] = -Rational::one();
    p[n as usize] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = dense::divrem(&p, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}
