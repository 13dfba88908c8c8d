use crate::numfield::{int, is_prime, RationalField};
use crate::polyalg::{gcd_uni, is_irreducible_fp, reduce_mod_p, MultiPoly, PolyError};

use super::{ConicError, PlaneCurve};

/// Primes tried by [`irreducibility_search`], ascending.
pub const SEARCH_PRIMES: [u64; 25] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];
/// Specializations `z2 ↦ v` tried for each prime, ascending.
pub const SEARCH_VALUES: std::ops::RangeInclusive<i64> = -10..=10;

/// Certifies irreducibility over ℚ: the curve must not contain `z3 = 0`,
/// its chart `f(z1, z2) = c(z1, z2, 1)` must be primitive in `z1` over
/// `ℚ[z2]`, and `f(z1, v) mod p` must be irreducible of full degree.
/// `false` is inconclusive; it is also the answer when the curve visibly
/// splits off `z3` or a factor free of `z1`.
pub fn q_irreducibility_cert(c: &PlaneCurve, p: u64, value: i64) -> Result<bool, ConicError> {
    if !is_prime(p) {
        return Err(ConicError::NotPrime(p));
    }
    let Some(f) = chart_primitive(c)? else {
        return Ok(false);
    };
    let n = f.degree_in(0).unwrap_or(0);
    let spec = f.set_var(1, &int(value));
    if spec.degree_in(0).unwrap_or(0) != n {
        return Err(ConicError::DegreeDropped);
    }
    let reduced = match reduce_mod_p(&spec, p) {
        Ok(r) => r,
        Err(PolyError::BadLeadingCoefficient) => return Err(ConicError::PrimeDividesLeading),
        Err(e) => return Err(e.into()),
    };
    Ok(is_irreducible_fp(&reduced))
}

fn chart_primitive(c: &PlaneCurve) -> Result<Option<MultiPoly<RationalField>>, ConicError> {
    let ring = c.form.ring();
    let z = MultiPoly::vars(ring);
    if c.form.compose(&[z[0].clone(), z[1].clone(), MultiPoly::zero(ring)])?.is_zero() {
        return Ok(None);
    }
    let f = c.form.set_var(2, &int(1));
    let content = f.coeffs_in(0).iter().try_fold(MultiPoly::zero(ring), |acc, k| gcd_uni(&acc, k))?;
    Ok(content.is_constant().then_some(f))
}

/// The lexicographically least `(p, v)` for which the certificate fires.
pub fn irreducibility_search(c: &PlaneCurve) -> Result<Option<(u64, i64)>, ConicError> {
    if chart_primitive(c)?.is_none() {
        return Ok(None);
    }
    for p in SEARCH_PRIMES {
        for v in SEARCH_VALUES {
            match q_irreducibility_cert(c, p, v) {
                Ok(true) => return Ok(Some((p, v))),
                Ok(false) | Err(ConicError::DegreeDropped) | Err(ConicError::PrimeDividesLeading) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}
