use crate::numfield::Field;

use super::{same_ring, MultiPoly, PolyError};

/// Sylvester matrix of `f` and `g` with respect to variable `var`: `n` shifted
/// rows of the coefficients of `f` followed by `m` shifted rows of those of
/// `g`, where `m = deg f`, `n = deg g`. Coefficients run from the top degree
/// down.
pub fn sylvester_matrix<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
    var: usize,
) -> Result<Vec<Vec<MultiPoly<F>>>, PolyError> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(PolyError::RingMismatch);
    }
    if var >= f.ring().arity() {
        return Err(PolyError::ArityMismatch { expected: f.ring().arity(), got: var + 1 });
    }
    let m = f.degree_in(var).unwrap_or(0) as usize;
    let n = g.degree_in(var).unwrap_or(0) as usize;
    if m == 0 || n == 0 {
        return Err(PolyError::DegreeZeroInVar);
    }
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let zero = MultiPoly::zero(f.ring());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for k in 0..=m {
            row[i + k] = fc[m - k].clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for k in 0..=n {
            row[i + k] = gc[n - k].clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Determinant of a square matrix of polynomials by fraction-free
/// elimination; every division is exact.
// Bareiss reads clearest with explicit row and column indices.
#[allow(clippy::needless_range_loop)]
fn bareiss_det<F: Field>(mut a: Vec<Vec<MultiPoly<F>>>, one: MultiPoly<F>) -> MultiPoly<F> {
    let n = a.len();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n {
        // Prefer the sparsest nonzero pivot to keep intermediate sizes down.
        let p = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].num_terms());
        let Some(p) = p else {
            return MultiPoly::zero(one.ring());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let piv = a[k][k].clone();
        for i in k + 1..n {
            let lead = a[i][k].clone();
            for j in k + 1..n {
                let mut v = piv.mul(&a[i][j]);
                if !lead.is_zero() && !a[k][j].is_zero() {
                    v = v.sub(&lead.mul(&a[k][j]));
                }
                a[i][j] = if prev.is_constant() {
                    v.scale(&one.field().inv(&prev.constant_term()).unwrap())
                } else {
                    v.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
            a[i][k] = MultiPoly::zero(one.ring());
        }
        prev = piv;
    }
    if negate {
        prev.neg()
    } else {
        prev
    }
}

/// `Res_var(f, g)`, the determinant of the Sylvester matrix.
pub fn resultant_wrt<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, var: usize) -> Result<MultiPoly<F>, PolyError> {
    let s = sylvester_matrix(f, g, var)?;
    Ok(bareiss_det(s, MultiPoly::one(f.ring())))
}
