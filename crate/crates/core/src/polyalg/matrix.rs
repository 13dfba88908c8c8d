use std::fmt;

use crate::numfield::Field;

use super::PolyError;

/// Dense row-major matrix over a field.
#[derive(Clone)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, o: &Self) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.data == o.data
    }
}

impl<F: Field> Eq for ExactMatrix<F> {}

impl<F: Field> std::hash::Hash for ExactMatrix<F> {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.rows.hash(h);
        self.cols.hash(h);
        self.data.hash(h);
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.fmt_elem(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        ExactMatrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(PolyError::ShapeMismatch);
        }
        Ok(ExactMatrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        ExactMatrix { field: field.clone(), rows, cols, data }
    }

    pub fn diagonal(field: &F, d: &[F::Elem]) -> Self {
        let n = d.len();
        Self::from_fn(field, n, n, |i, j| if i == j { d[i].clone() } else { field.zero() })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Self) -> Result<Self, PolyError> {
        if self.cols != o.rows {
            return Err(PolyError::ShapeMismatch);
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, o.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, PolyError> {
        if v.len() != self.cols {
            return Err(PolyError::ShapeMismatch);
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
            .collect())
    }

    pub fn add(&self, o: &Self) -> Result<Self, PolyError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(PolyError::ShapeMismatch);
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(ExactMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, k)).collect();
        ExactMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(&self.field, self.rows)
    }

    pub fn is_scalar(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(&self.field, self.rows).scale(self.get(0, 0))
    }

    pub fn map_field<G: Field>(
        &self,
        target: &G,
        f: impl Fn(&F::Elem) -> Result<G::Elem, crate::numfield::NumError>,
    ) -> Result<ExactMatrix<G>, PolyError> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            data.push(f(x)?);
        }
        Ok(ExactMatrix { field: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let f = &self.field;
        Self::from_fn(f, self.rows + o.rows, self.cols + o.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                o.get(i - self.rows, j - self.cols).clone()
            } else {
                f.zero()
            }
        })
    }

    /// Kronecker (tensor) product.
    pub fn kronecker(&self, o: &Self) -> Self {
        let f = &self.field;
        Self::from_fn(f, self.rows * o.rows, self.cols * o.cols, |i, j| {
            f.mul(self.get(i / o.rows, j / o.cols), o.get(i % o.rows, j % o.cols))
        })
    }

    /// Fraction-free Gaussian elimination (Bareiss). Returns the echelon
    /// form, the pivot columns and the sign of the row permutation.
    fn bareiss(&self) -> (Vec<F::Elem>, Vec<usize>, bool) {
        let f = &self.field;
        let (m, n) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut prev = f.one();
        let mut odd = false;
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !f.is_zero(&a[i * n + c])) else { continue };
            if p != r {
                for j in 0..n {
                    a.swap(p * n + j, r * n + j);
                }
                odd = !odd;
            }
            let piv = a[r * n + c].clone();
            for i in r + 1..m {
                let lead = a[i * n + c].clone();
                for j in c..n {
                    let v = f.sub(&f.mul(&piv, &a[i * n + j]), &f.mul(&lead, &a[r * n + j]));
                    a[i * n + j] = f.div(&v, &prev).expect("Bareiss pivot is nonzero");
                }
                for j in 0..c {
                    a[i * n + j] = f.zero();
                }
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (a, pivots, odd)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Determinant. Errors on a non-square matrix.
    pub fn det(&self) -> Result<F::Elem, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::ShapeMismatch);
        }
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Ok(f.one());
        }
        let (a, pivots, odd) = self.bareiss();
        if pivots.len() < n {
            return Ok(f.zero());
        }
        let d = a[n * n - 1].clone();
        Ok(if odd { f.neg(&d) } else { d })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(a.get(i, c))) else { continue };
            for j in 0..self.cols {
                a.data.swap(p * self.cols + j, r * self.cols + j);
            }
            let inv = f.inv(a.get(r, c)).unwrap();
            for j in 0..self.cols {
                let v = f.mul(a.get(r, j), &inv);
                a.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(a.get(i, c)) {
                    continue;
                }
                let k = a.get(i, c).clone();
                for j in 0..self.cols {
                    let v = f.sub(a.get(i, j), &f.mul(&k, a.get(r, j)));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (e, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(e.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::ShapeMismatch);
        }
        let n = self.rows;
        let f = &self.field;
        let aug = Self::from_fn(f, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let (e, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(PolyError::Singular);
        }
        Ok(Self::from_fn(f, n, n, |i, j| e.get(i, j + n).clone()))
    }

    pub fn pow(&self, mut e: u64) -> Result<Self, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::ShapeMismatch);
        }
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{int, Rational, RationalField};

    fn m(rows: &[&[i64]]) -> ExactMatrix<RationalField> {
        ExactMatrix::from_rows(&RationalField, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        assert_eq!(ExactMatrix::identity(&RationalField, 10).rank(), 10);
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).unwrap().iter().all(|x| *x == int(0)));
        assert_eq!(m(&[&[1, 1, 1, 1]]).rank(), 1);
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.det().unwrap(), int(-1));
        let b = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(b.det().unwrap(), int(18));
        let bi = b.inverse().unwrap();
        assert!(b.mul(&bi).unwrap().is_identity());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse().unwrap_err(), PolyError::Singular);
        assert_eq!(m(&[&[1, 2, 3]]).det().unwrap_err(), PolyError::ShapeMismatch);
        let z: Rational = m(&[&[1, 2], &[2, 4]]).det().unwrap();
        assert_eq!(z, int(0));
    }

    #[test]
    fn trace_pow_sum() {
        let a = m(&[&[0, -1], &[1, 0]]);
        assert!(a.pow(4).unwrap().is_identity());
        assert_eq!(a.trace(), int(0));
        assert_eq!(a.direct_sum(&m(&[&[5]])).trace(), int(5));
        assert!(m(&[&[3, 0], &[0, 3]]).is_scalar());
    }
}
