//! Polynomials in `z2` over `ℚ[z1]/(m)` with `m` square-free, computed by
//! dynamic evaluation: whenever a leading coefficient is a zero divisor the
//! modulus is split into the part where it vanishes and the part where it
//! is invertible, and each branch continues separately.

use crate::numfield::RationalField;
use crate::polyalg::{MultiPoly, UniPoly};

pub(crate) type U = UniPoly<RationalField>;
/// Coefficients in `z2`, low degree first, each a polynomial in `z1`.
pub(crate) type Coeffs = Vec<U>;

pub(crate) fn from_bivariate(p: &MultiPoly<RationalField>) -> Coeffs {
    p.coeffs_in(1).iter().map(|c| UniPoly::from_multi(c, 0).expect("coefficients depend on z1 only")).collect()
}

pub(crate) fn to_bivariate(c: &[U], ring: &crate::polyalg::RingRef<RationalField>) -> MultiPoly<RationalField> {
    let z2 = MultiPoly::var_at(ring, 1);
    c.iter().enumerate().fold(MultiPoly::zero(ring), |acc, (i, u)| acc.add(&u.to_multi(ring, 0).mul(&z2.pow(i as u32))))
}

pub(crate) fn reduce(p: &[U], m: &U) -> Coeffs {
    let mut out: Coeffs = p.iter().map(|c| c.rem(m)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

pub(crate) fn degree(p: &[U]) -> Option<usize> {
    p.len().checked_sub(1)
}

fn inverse_mod(c: &U, m: &U) -> U {
    let (g, s) = c.half_xgcd(m);
    debug_assert_eq!(g.degree(), Some(0));
    s.rem(m)
}

/// Branches on which `p` reduced modulo the branch has an invertible
/// leading coefficient (or is zero).
pub(crate) fn split_lead(m: &U, p: &[U]) -> Vec<(U, Coeffs)> {
    let p = reduce(p, m);
    let Some(c) = p.last() else {
        return vec![(m.clone(), p)];
    };
    let g = c.gcd(m);
    if g.degree() == Some(0) {
        return vec![(m.clone(), p)];
    }
    let rest = m.divrem(&g).0;
    let mut out = split_lead(&g, &p);
    if rest.degree().unwrap_or(0) > 0 {
        out.extend(split_lead(&rest, &p));
    }
    out
}

fn monic(m: &U, p: &[U]) -> Coeffs {
    let inv = inverse_mod(p.last().unwrap(), m);
    p.iter().map(|c| c.mul(&inv).rem(m)).collect()
}

/// Division by `b`, whose leading coefficient must be invertible mod `m`.
pub(crate) fn divrem(m: &U, a: &[U], b: &[U]) -> (Coeffs, Coeffs) {
    let db = b.len() - 1;
    let inv = inverse_mod(&b[db], m);
    let mut r = reduce(a, m);
    let mut q = vec![U::zero(&RationalField); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r[r.len() - 1].mul(&inv).rem(m);
        for (i, bi) in b.iter().enumerate() {
            r[k + i] = r[k + i].sub(&c.mul(bi)).rem(m);
        }
        q[k] = c;
        r = reduce(&r, m);
    }
    (reduce(&q, m), r)
}

/// Monic gcds of `a` and `b` on a splitting of `m`. A branch with gcd
/// zero is reported with an empty coefficient list.
pub(crate) fn gcd(m: &U, a: &[U], b: &[U]) -> Vec<(U, Coeffs)> {
    let mut out = Vec::new();
    let mut stack = vec![(m.clone(), a.to_vec(), b.to_vec())];
    while let Some((m, a, b)) = stack.pop() {
        for (mi, bi) in split_lead(&m, &b) {
            if bi.is_empty() {
                for (mj, aj) in split_lead(&mi, &a) {
                    let g = if aj.is_empty() { aj } else { monic(&mj, &aj) };
                    out.push((mj, g));
                }
            } else {
                let (_, r) = divrem(&mi, &a, &bi);
                stack.push((mi, bi, r));
            }
        }
    }
    out
}

pub(crate) fn derivative(p: &[U]) -> Coeffs {
    p.iter().enumerate().skip(1).map(|(i, c)| c.scale(&crate::numfield::int(i as i64))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rational_uni;

    #[test]
    fn splits_on_zero_divisor() {
        // m = z1(z1 - 1); a = z1*z2 + 1, b = z2 + 1.
        let m = rational_uni(&[0, -1, 1]);
        let a = vec![rational_uni(&[1]), rational_uni(&[0, 1])];
        let b = vec![rational_uni(&[1]), rational_uni(&[1])];
        let branches = gcd(&m, &a, &b);
        let mut degs: Vec<(usize, usize)> =
            branches.iter().map(|(mi, g)| (mi.degree().unwrap(), degree(g).unwrap())).collect();
        degs.sort();
        // At z1 = 0, a = 1 so the gcd is 1; at z1 = 1, a = b.
        assert_eq!(degs, vec![(1, 0), (1, 1)]);
    }
}
