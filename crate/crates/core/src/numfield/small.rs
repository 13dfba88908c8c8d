//! Machine-word shortcuts for rationals with `i64` numerator and
//! denominator. Every function agrees exactly with the `BigRational`
//! operation it replaces and falls back to it on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Rational;

pub(crate) fn get(q: &Rational) -> Option<(i128, i128)> {
    Some((q.numer().to_i64()? as i128, q.denom().to_i64()? as i128))
}

/// `n / d` in lowest terms; `d > 0`.
pub(crate) fn make(n: i128, d: i128) -> Rational {
    let g = n.gcd(&d);
    Rational::new_raw(BigInt::from(n / g), BigInt::from(d / g))
}

/// Integer numerators over the least common denominator.
pub(crate) fn common_denominator(v: &[Rational]) -> Option<(Vec<i128>, i128)> {
    let parts: Vec<(i128, i128)> = v.iter().map(get).collect::<Option<_>>()?;
    let mut d: i128 = 1;
    for &(_, di) in &parts {
        d = d.checked_mul(di / d.gcd(&di))?;
        if d > i64::MAX as i128 {
            return None;
        }
    }
    let nums = parts.iter().map(|&(n, di)| n.checked_mul(d / di)).collect::<Option<_>>()?;
    Some((nums, d))
}

pub(crate) fn add(x: &Rational, y: &Rational) -> Rational {
    match (get(x), get(y)) {
        (Some((a, b)), Some((c, d))) if b == d => make(a + c, b),
        (Some((a, b)), Some((c, d))) => make(a * d + c * b, b * d),
        _ => x + y,
    }
}

pub(crate) fn sub(x: &Rational, y: &Rational) -> Rational {
    match (get(x), get(y)) {
        (Some((a, b)), Some((c, d))) if b == d => make(a - c, b),
        (Some((a, b)), Some((c, d))) => make(a * d - c * b, b * d),
        _ => x - y,
    }
}

pub(crate) fn mul(x: &Rational, y: &Rational) -> Rational {
    match (get(x), get(y)) {
        (Some((a, b)), Some((c, d))) => make(a * c, b * d),
        _ => x * y,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat;

    #[test]
    fn agrees_with_bigrational() {
        let big = Rational::new(BigInt::from(i64::MAX) * 3, BigInt::from(7));
        let xs = [rat(0, 1), rat(3, 4), rat(-5, 6), rat(i64::MAX, 2), rat(i64::MIN + 1, 3), big];
        for x in &xs {
            for y in &xs {
                assert_eq!(add(x, y), x + y);
                assert_eq!(sub(x, y), x - y);
                assert_eq!(mul(x, y), x * y);
            }
        }
        let (n, d) = common_denominator(&[rat(1, 6), rat(-3, 4), rat(0, 1)]).unwrap();
        assert_eq!((n, d), (vec![2, -9, 0], 12));
        assert_eq!(make(-6, 4), rat(-3, 2));
    }
}
