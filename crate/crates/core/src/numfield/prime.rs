use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, NumError, Rational};

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    pub modulus: u64,
    pub value: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Trial-division primality check; moduli above `2^32` are rejected
    /// to keep products inside `u128` trivially.
    pub fn new(p: u64) -> Result<Self, NumError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(NumError::CompositeModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> PrimeFieldElem {
        PrimeFieldElem { modulus: self.p, value: v.rem_euclid(self.p as i64) as u64 }
    }

    fn wrap(&self, value: u64) -> PrimeFieldElem {
        PrimeFieldElem { modulus: self.p, value }
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElem;

    fn zero(&self) -> PrimeFieldElem {
        self.wrap(0)
    }
    fn one(&self) -> PrimeFieldElem {
        self.wrap(1 % self.p)
    }
    fn is_zero(&self, a: &PrimeFieldElem) -> bool {
        a.value == 0
    }
    fn add(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        self.wrap((a.value + b.value) % self.p)
    }
    fn sub(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        self.wrap((a.value + self.p - b.value) % self.p)
    }
    fn mul(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        self.wrap(((a.value as u128 * b.value as u128) % self.p as u128) as u64)
    }
    fn neg(&self, a: &PrimeFieldElem) -> PrimeFieldElem {
        self.wrap((self.p - a.value) % self.p)
    }
    fn inv(&self, a: &PrimeFieldElem) -> Result<PrimeFieldElem, NumError> {
        if a.value == 0 {
            return Err(NumError::ZeroDivision);
        }
        Ok(self.pow(a, self.p - 2))
    }
    fn from_rational(&self, q: &Rational) -> Result<PrimeFieldElem, NumError> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().unwrap();
        let den = q.denom().mod_floor(&p).to_u64().unwrap();
        if den == 0 {
            return Err(NumError::NotRepresentable(format!("{q} mod {}", self.p)));
        }
        Ok(self.mul(&self.wrap(num), &self.inv(&self.wrap(den))?))
    }
    fn to_rational(&self, _a: &PrimeFieldElem) -> Option<Rational> {
        None
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn roots_of_unity(&self) -> Vec<PrimeFieldElem> {
        (1..self.p).map(|v| self.wrap(v)).collect()
    }
    fn fmt_elem(&self, a: &PrimeFieldElem) -> String {
        a.value.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat;

    #[test]
    fn arithmetic_mod_p() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&f.elem(3), &f.elem(5)), f.elem(1));
        assert_eq!(f.inv(&f.elem(3)).unwrap(), f.elem(5));
        assert_eq!(f.from_rational(&rat(1, 2)).unwrap(), f.elem(4));
        assert!(f.from_rational(&rat(1, 14)).is_err());
        assert_eq!(PrimeField::new(9).unwrap_err(), NumError::CompositeModulus(9));
        assert_eq!(f.neg(&f.zero()), f.zero());
    }
}
