use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::numfield::Field;
use crate::polyalg::ExactMatrix;

use super::GroupError;

/// A finite group of invertible matrices, stored as its full element list.
///
/// Element 0 is the identity. Every element remembers how it was first
/// reached during closure (a parent element and a generator), which gives a
/// word in the generators for it and lets other models of the same group
/// be built by following the same words.
pub struct MatrixGroup<F: Field> {
    field: F,
    dim: usize,
    elements: Vec<ExactMatrix<F>>,
    generators: Vec<ExactMatrix<F>>,
    index: HashMap<ExactMatrix<F>, usize>,
    /// `cayley[g][s]` is the index of `g * generators[s]`.
    cayley: Vec<Vec<usize>>,
    parent: Vec<Option<(usize, usize)>>,
    table: OnceLock<Vec<Vec<usize>>>,
}

impl<F: Field> std::fmt::Debug for MatrixGroup<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MatrixGroup(order {}, dim {}, {:?})", self.order(), self.dim, self.field)
    }
}

/// Closure of the generators under multiplication. Fails once more than
/// `bound` elements have been found.
pub fn generate_group<F: Field>(
    field: &F,
    generators: &[ExactMatrix<F>],
    bound: usize,
) -> Result<MatrixGroup<F>, GroupError> {
    let dim = generators.first().ok_or(GroupError::EmptyGenerators)?.rows();
    for g in generators {
        if g.rows() != dim || g.cols() != dim {
            return Err(GroupError::DimensionMismatch);
        }
        if field.is_zero(&g.det()?) {
            return Err(GroupError::SingularGenerator);
        }
    }
    let id = ExactMatrix::identity(field, dim);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut parent = vec![None];
    let mut cayley: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(generators.len());
        for (s, g) in generators.iter().enumerate() {
            let prod = elements[i].mul(g)?;
            let j = match index.get(&prod) {
                Some(&j) => j,
                None => {
                    if elements.len() >= bound {
                        return Err(GroupError::ClosureBoundExceeded(bound));
                    }
                    let j = elements.len();
                    index.insert(prod.clone(), j);
                    elements.push(prod);
                    parent.push(Some((i, s)));
                    queue.push_back(j);
                    j
                }
            };
            row.push(j);
        }
        if cayley.len() <= i {
            cayley.resize(i + 1, Vec::new());
        }
        cayley[i] = row;
    }
    Ok(MatrixGroup {
        field: field.clone(),
        dim,
        elements,
        generators: generators.to_vec(),
        index,
        cayley,
        parent,
        table: OnceLock::new(),
    })
}

impl<F: Field> MatrixGroup<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[ExactMatrix<F>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ExactMatrix<F> {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[ExactMatrix<F>] {
        &self.generators
    }

    pub fn index_of(&self, m: &ExactMatrix<F>) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Generator indices whose product (left to right) is element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((p, s)) = self.parent[i] {
            w.push(s);
            i = p;
        }
        w.reverse();
        w
    }

    /// Index of the product of the given generators, left to right.
    pub fn eval_word(&self, word: &[usize]) -> Result<usize, GroupError> {
        word.iter().try_fold(0, |i, &s| {
            self.cayley[i].get(s).copied().ok_or_else(|| GroupError::BadWord(format!("generator {s}")))
        })
    }

    /// Multiplication table by element index.
    pub fn table(&self) -> &Vec<Vec<usize>> {
        self.table.get_or_init(|| {
            let words: Vec<Vec<usize>> = (0..self.order()).map(|j| self.word(j)).collect();
            (0..self.order())
                .map(|i| words.iter().map(|w| w.iter().fold(i, |k, &s| self.cayley[k][s])).collect())
                .collect()
        })
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table()[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.table()[i].iter().position(|&k| k == 0).expect("finite group")
    }

    pub fn power(&self, i: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, i))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Order of the subgroup generated by the given elements.
    pub fn subgroup_order(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut n = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    n += 1;
                    stack.push(y);
                }
            }
        }
        n
    }

    /// Builds the representation sending the `s`-th generator to
    /// `images[s]`, checking that this defines a homomorphism.
    pub fn represent<G: Field>(&self, field: &G, images: &[ExactMatrix<G>]) -> Result<Representation<G>, GroupError> {
        if images.len() != self.generators.len() {
            return Err(GroupError::DimensionMismatch);
        }
        let dim = images[0].rows();
        let mut out: Vec<Option<ExactMatrix<G>>> = vec![None; self.order()];
        out[0] = Some(ExactMatrix::identity(field, dim));
        // Parents always precede children.
        for i in 1..self.order() {
            let (p, s) = self.parent[i].unwrap();
            out[i] = Some(out[p].as_ref().unwrap().mul(&images[s])?);
        }
        let out: Vec<ExactMatrix<G>> = out.into_iter().map(Option::unwrap).collect();
        for (i, row) in self.cayley.iter().enumerate() {
            for (s, &j) in row.iter().enumerate() {
                if out[j] != out[i].mul(&images[s])? {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(Representation { field: field.clone(), dim, images: out })
    }

    /// The identity representation.
    pub fn natural(&self) -> Representation<F> {
        Representation { field: self.field.clone(), dim: self.dim, images: self.elements.clone() }
    }
}

/// Images of every group element, indexed like [`MatrixGroup::elements`].
#[derive(Clone, Debug)]
pub struct Representation<F: Field> {
    field: F,
    dim: usize,
    images: Vec<ExactMatrix<F>>,
}

impl<F: Field> Representation<F> {
    /// Wraps precomputed images; no homomorphism check.
    pub fn from_images(field: &F, images: Vec<ExactMatrix<F>>) -> Self {
        let dim = images[0].rows();
        Representation { field: field.clone(), dim, images }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[ExactMatrix<F>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &ExactMatrix<F> {
        &self.images[i]
    }

    /// Applies `f` to every image (e.g. a Galois twist or block sum).
    pub fn map<G: Field>(
        &self,
        field: &G,
        f: impl Fn(&ExactMatrix<F>) -> Result<ExactMatrix<G>, GroupError>,
    ) -> Result<Representation<G>, GroupError> {
        let images = self.images.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        let dim = images[0].rows();
        Ok(Representation { field: field.clone(), dim, images })
    }

    /// Number of distinct images, i.e. the order of the image group.
    pub fn image_order(&self) -> usize {
        self.images.iter().collect::<std::collections::HashSet<_>>().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{int, RationalField};

    fn perm(p: &[usize]) -> ExactMatrix<RationalField> {
        ExactMatrix::from_fn(&RationalField, p.len(), p.len(), |i, j| int((p[j] == i) as i64))
    }

    #[test]
    fn symmetric_group_closure() {
        let g = generate_group(&RationalField, &[perm(&[1, 2, 0]), perm(&[1, 0, 2])], 10).unwrap();
        assert_eq!(g.order(), 6);
        for i in 0..6 {
            let w = g.word(i);
            assert_eq!(g.eval_word(&w).unwrap(), i);
            assert_eq!(g.mul(i, g.inverse(i)), 0);
        }
        assert_eq!(g.subgroup_order(&[1]), 3);
        assert!(matches!(
            generate_group(&RationalField, &[perm(&[1, 2, 0]), perm(&[1, 0, 2])], 5),
            Err(GroupError::ClosureBoundExceeded(5))
        ));
    }

    #[test]
    fn identity_and_singular() {
        let id = ExactMatrix::identity(&RationalField, 3);
        assert_eq!(generate_group(&RationalField, &[id], 10).unwrap().order(), 1);
        let z = ExactMatrix::zeros(&RationalField, 2, 2);
        assert!(matches!(generate_group(&RationalField, &[z], 10), Err(GroupError::SingularGenerator)));
    }

    #[test]
    fn sign_representation_and_non_homomorphism() {
        let g = generate_group(&RationalField, &[perm(&[1, 2, 0]), perm(&[1, 0, 2])], 10).unwrap();
        let one = ExactMatrix::identity(&RationalField, 1);
        let sign = g.represent(&RationalField, &[one.clone(), one.neg()]).unwrap();
        assert_eq!(sign.image_order(), 2);
        let bad = g.represent(&RationalField, &[one.neg(), one]);
        assert!(matches!(bad, Err(GroupError::NotAHomomorphism)));
    }
}
