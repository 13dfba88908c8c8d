use std::collections::HashMap;

use crate::numfield::Field;
use crate::polyalg::{ExactMatrix, Monomial, MultiPoly, RingRef};

use super::GroupError;

/// Exponent vectors of total degree `d` in `n` variables, descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// `p(M x)`: substitutes `x_i ↦ Σ_j M_ij x_j`.
pub fn act<F: Field>(p: &MultiPoly<F>, m: &ExactMatrix<F>) -> Result<MultiPoly<F>, GroupError> {
    let ring = p.ring();
    if m.rows() != ring.arity() || m.cols() != ring.arity() {
        return Err(GroupError::DimensionMismatch);
    }
    Ok(p.compose(&linear_forms(ring, m))?)
}

fn linear_forms<F: Field>(ring: &RingRef<F>, m: &ExactMatrix<F>) -> Vec<MultiPoly<F>> {
    let n = ring.arity();
    (0..n)
        .map(|i| {
            let terms = (0..n)
                .map(|j| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    (Monomial(e), m.get(i, j).clone())
                })
                .collect();
            MultiPoly::from_terms(ring, terms)
        })
        .collect()
}

pub fn is_invariant<F: Field>(p: &MultiPoly<F>, m: &ExactMatrix<F>) -> Result<bool, GroupError> {
    Ok(act(p, m)? == *p)
}

/// Images of all degree-`d` monomials under `x ↦ M x`, built up one linear
/// factor at a time.
fn monomial_images<F: Field>(ring: &RingRef<F>, m: &ExactMatrix<F>, d: u32) -> HashMap<Monomial, MultiPoly<F>> {
    let n = ring.arity();
    let forms = linear_forms(ring, m);
    let mut level: HashMap<Monomial, MultiPoly<F>> = HashMap::from([(Monomial::one(n), MultiPoly::one(ring))]);
    for _ in 0..d {
        let mut next = HashMap::new();
        for (mono, img) in &level {
            // Extend only by variables at or after the last used one so each
            // monomial is produced once.
            let last = mono.0.iter().rposition(|&e| e > 0).unwrap_or(0);
            for (i, form) in forms.iter().enumerate().skip(last) {
                let mut e = mono.0.clone();
                e[i] += 1;
                next.insert(Monomial(e), img.mul(form));
            }
        }
        level = next;
    }
    level
}

/// Basis of the degree-`d` forms fixed by every matrix in `group`: each
/// monomial is averaged over the group and a maximal independent set of the
/// averages is returned in reduced echelon form.
pub fn reynolds_invariant_basis<F: Field>(
    group: &[ExactMatrix<F>],
    ring: &RingRef<F>,
    d: u32,
) -> Result<Vec<MultiPoly<F>>, GroupError> {
    let f = ring.field();
    if group.is_empty() {
        return Err(GroupError::EmptyGenerators);
    }
    let monos = monomials_of_degree(ring.arity(), d);
    let col: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut sums = ExactMatrix::zeros(f, monos.len(), monos.len());
    for g in group {
        if g.rows() != ring.arity() {
            return Err(GroupError::DimensionMismatch);
        }
        let images = monomial_images(ring, g, d);
        for (r, m) in monos.iter().enumerate() {
            for (mono, c) in images[m].terms() {
                let j = col[mono];
                let v = f.add(sums.get(r, j), c);
                sums.set(r, j, v);
            }
        }
    }
    let avg = sums.scale(&f.inv(&f.from_i64(group.len() as i64))?);
    let (e, pivots) = avg.rref();
    Ok((0..pivots.len())
        .map(|r| {
            let terms = monos.iter().cloned().zip(e.row(r).iter().cloned()).collect();
            MultiPoly::from_terms(ring, terms)
        })
        .collect())
}
