use crate::numfield::Field;
use crate::polyalg::{ExactMatrix, ProjPoint};

use super::GroupError;

type Basis<F> = Vec<Vec<<F as Field>::Elem>>;

fn eigenspace<F: Field>(m: &ExactMatrix<F>, lambda: &F::Elem) -> Basis<F> {
    let f = m.field();
    let shifted = m.add(&ExactMatrix::identity(f, m.rows()).scale(&f.neg(lambda))).unwrap();
    shifted.kernel_basis()
}

fn intersect<F: Field>(f: &F, a: &Basis<F>, b: &Basis<F>) -> Basis<F> {
    let n = a[0].len();
    let cols = a.len() + b.len();
    let m =
        ExactMatrix::from_fn(f, n, cols, |i, j| if j < a.len() { a[j][i].clone() } else { f.neg(&b[j - a.len()][i]) });
    let vecs: Vec<Vec<F::Elem>> = m
        .kernel_basis()
        .into_iter()
        .map(|k| (0..n).map(|i| (0..a.len()).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(&k[j], &a[j][i])))).collect())
        .collect();
    if vecs.is_empty() {
        return vecs;
    }
    let (e, pivots) = ExactMatrix::from_rows(f, vecs).unwrap().rref();
    (0..pivots.len()).map(|r| e.row(r).to_vec()).collect()
}

/// Common fixed points in projective space of all the given matrices.
///
/// Eigenvalues are searched among the roots of unity of the field; each
/// matrix splits the current candidate subspaces by its eigenspaces. The
/// search stops as soon as no candidates remain. A non-scalar matrix whose
/// eigenspaces do not fill the space (an eigenvalue outside the field) is
/// an error while candidates remain. All fixed loci must be points.
pub fn common_eigenvectors<F: Field>(field: &F, matrices: &[ExactMatrix<F>]) -> Result<Vec<ProjPoint<F>>, GroupError> {
    let active: Vec<&ExactMatrix<F>> = matrices.iter().filter(|m| !m.is_scalar()).collect();
    if active.is_empty() {
        return Err(GroupError::InvalidInput("every matrix is scalar".into()));
    }
    let n = active[0].rows();
    if active.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(GroupError::DimensionMismatch);
    }
    let roots = field.roots_of_unity();
    let mut candidates: Vec<Basis<F>> = vec![ExactMatrix::identity(field, n).to_rows()];
    for m in active {
        if candidates.is_empty() {
            break;
        }
        let spaces: Vec<Basis<F>> = roots.iter().map(|l| eigenspace(m, l)).filter(|b| !b.is_empty()).collect();
        if spaces.iter().map(|b| b.len()).sum::<usize>() < n {
            return Err(GroupError::UnsupportedEigenvalue);
        }
        candidates = candidates
            .iter()
            .flat_map(|w| spaces.iter().map(move |e| (w, e)))
            .map(|(w, e)| intersect(field, w, e))
            .filter(|b| !b.is_empty())
            .collect();
    }
    let mut points = Vec::with_capacity(candidates.len());
    for b in candidates {
        if b.len() > 1 {
            return Err(GroupError::PositiveDimensional(b.len()));
        }
        points.push(ProjPoint::new(field, b.into_iter().next().unwrap())?);
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{int, RationalField};

    #[test]
    fn diagonal_and_swap() {
        let f = RationalField;
        let d = ExactMatrix::diagonal(&f, &[int(1), int(-1)]);
        assert_eq!(common_eigenvectors(&f, std::slice::from_ref(&d)).unwrap().len(), 2);
        let swap = ExactMatrix::from_rows(&f, vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        assert!(common_eigenvectors(&f, &[d, swap]).unwrap().is_empty());
        let id = ExactMatrix::identity(&f, 3);
        assert!(matches!(common_eigenvectors(&f, &[id]), Err(GroupError::InvalidInput(_))));
        let rot = ExactMatrix::from_rows(&f, vec![vec![int(0), int(-1)], vec![int(1), int(0)]]).unwrap();
        assert!(matches!(common_eigenvectors(&f, &[rot]), Err(GroupError::UnsupportedEigenvalue)));
        let d3 = ExactMatrix::diagonal(&f, &[int(1), int(1), int(-1)]);
        assert!(matches!(common_eigenvectors(&f, &[d3]), Err(GroupError::PositiveDimensional(2))));
    }
}
