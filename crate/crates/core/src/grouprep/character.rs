use num_traits::Zero;

use crate::numfield::{Field, Rational};

use super::{GroupError, MatrixGroup, Representation};

/// A conjugacy class, by element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    /// `power_map[k]` is the class of `g^k`, for `k` below the element order.
    pub power_map: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn element_order(&self) -> usize {
        self.power_map.len()
    }

    /// Class of `g^k` for any `k`.
    pub fn power(&self, k: usize) -> usize {
        self.power_map[k % self.power_map.len()]
    }

    /// Class of `g^-1`.
    pub fn inverse(&self) -> usize {
        self.power(self.power_map.len() - 1)
    }
}

/// Partition into conjugacy classes, ordered by first element index (so
/// the identity class comes first), with power maps.
pub fn conjugacy_classes<F: Field>(g: &MatrixGroup<F>) -> Vec<ConjugacyClass> {
    let n = g.order();
    let inv: Vec<usize> = (0..n).map(|i| g.inverse(i)).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = members.len();
        let mut m: Vec<usize> = (0..n).map(|h| g.mul(g.mul(h, x), inv[h])).collect();
        m.sort_unstable();
        m.dedup();
        for &y in &m {
            class_of[y] = c;
        }
        members.push(m);
    }
    members
        .into_iter()
        .map(|m| {
            let rep = m[0];
            let ord = g.element_order(rep);
            let mut power_map = Vec::with_capacity(ord);
            let mut p = 0;
            for _ in 0..ord {
                power_map.push(class_of[p]);
                p = g.mul(p, rep);
            }
            ConjugacyClass { representative: rep, members: m, power_map }
        })
        .collect()
}

/// A class function, one value per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character<F: Field> {
    pub field: F,
    pub values: Vec<F::Elem>,
}

impl<F: Field> Character<F> {
    pub fn trivial(field: &F, classes: &[ConjugacyClass]) -> Self {
        Character { field: field.clone(), values: vec![field.one(); classes.len()] }
    }

    /// Traces of the representation on class representatives.
    pub fn of(rep: &Representation<F>, classes: &[ConjugacyClass]) -> Self {
        Character {
            field: rep.field().clone(),
            values: classes.iter().map(|c| rep.image(c.representative).trace()).collect(),
        }
    }

    /// The value at the identity class.
    pub fn degree(&self) -> F::Elem {
        self.values[0].clone()
    }

    pub fn add(&self, o: &Self) -> Self {
        let f = &self.field;
        Character { field: f.clone(), values: self.values.iter().zip(&o.values).map(|(a, b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let f = &self.field;
        Character { field: f.clone(), values: self.values.iter().zip(&o.values).map(|(a, b)| f.sub(a, b)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let f = &self.field;
        Character { field: f.clone(), values: self.values.iter().zip(&o.values).map(|(a, b)| f.mul(a, b)).collect() }
    }

    /// Applies a field automorphism to every value.
    pub fn map(&self, f: impl Fn(&F::Elem) -> F::Elem) -> Self {
        Character { field: self.field.clone(), values: self.values.iter().map(f).collect() }
    }

    /// `g ↦ χ(g^k)`.
    pub fn adams(&self, classes: &[ConjugacyClass], k: usize) -> Self {
        Character {
            field: self.field.clone(),
            values: classes.iter().map(|c| self.values[c.power(k)].clone()).collect(),
        }
    }
}

/// Character of `Sym^k` by the Newton formulas, `k` in `1..=4`.
pub fn sym_power_char<F: Field>(
    chi: &Character<F>,
    classes: &[ConjugacyClass],
    k: u32,
) -> Result<Character<F>, GroupError> {
    let f = &chi.field;
    let p = |j: usize| chi.adams(classes, j).values;
    let (p1, p2, p3, p4) = (p(1), p(2), p(3), p(4));
    let c = |n: i64| f.from_i64(n);
    let values = (0..classes.len())
        .map(|i| {
            let (a, b, d, e) = (&p1[i], &p2[i], &p3[i], &p4[i]);
            let terms: Vec<(i64, Vec<&F::Elem>)> = match k {
                1 => vec![(1, vec![a])],
                2 => vec![(1, vec![a, a]), (1, vec![b])],
                3 => vec![(1, vec![a, a, a]), (3, vec![a, b]), (2, vec![d])],
                4 => vec![(1, vec![a, a, a, a]), (6, vec![a, a, b]), (3, vec![b, b]), (8, vec![a, d]), (6, vec![e])],
                _ => return Err(GroupError::UnsupportedPower(k)),
            };
            let denom = [1, 1, 2, 6, 24][k as usize];
            let sum = terms.iter().fold(f.zero(), |acc, (m, fs)| {
                let prod = fs.iter().fold(c(*m), |x, y| f.mul(&x, y));
                f.add(&acc, &prod)
            });
            Ok(f.div(&sum, &c(denom))?)
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    Ok(Character { field: f.clone(), values })
}

/// `(1/|G|) Σ |C| χ₁(C) χ₂(C⁻¹)`, which must be rational.
pub fn inner_product<F: Field>(
    a: &Character<F>,
    b: &Character<F>,
    classes: &[ConjugacyClass],
) -> Result<Rational, GroupError> {
    let f = &a.field;
    if a.values.len() != classes.len() || b.values.len() != classes.len() {
        return Err(GroupError::DimensionMismatch);
    }
    let order: usize = classes.iter().map(|c| c.size()).sum();
    let sum = classes.iter().enumerate().fold(f.zero(), |acc, (i, c)| {
        let term = f.mul(&f.mul(&a.values[i], &b.values[c.inverse()]), &f.from_i64(c.size() as i64));
        f.add(&acc, &term)
    });
    let q = f.to_rational(&sum).ok_or(GroupError::NonIntegralMultiplicity)?;
    Ok(q / Rational::from_integer((order as i64).into()))
}

/// Multiplicities of each table entry in `chi`. Fails unless they are
/// non-negative integers and account for all of `chi`.
pub fn decompose<F: Field>(
    chi: &Character<F>,
    table: &[Character<F>],
    classes: &[ConjugacyClass],
) -> Result<Vec<u32>, GroupError> {
    let mut mult = Vec::with_capacity(table.len());
    let mut rest = chi.clone();
    for psi in table {
        let m = inner_product(chi, psi, classes)?;
        if !m.is_integer() || m < Rational::zero() {
            return Err(GroupError::NonIntegralMultiplicity);
        }
        let k: u32 = m.to_integer().try_into().map_err(|_| GroupError::NonIntegralMultiplicity)?;
        for _ in 0..k {
            rest = rest.sub(psi);
        }
        mult.push(k);
    }
    if rest.values.iter().any(|v| !chi.field.is_zero(v)) {
        return Err(GroupError::NonIntegralMultiplicity);
    }
    Ok(mult)
}

/// `dim (Sym^d V)^G` from the character of `V`, `d` in `0..=4`.
pub fn invariant_dim_from_char<F: Field>(
    chi: &Character<F>,
    classes: &[ConjugacyClass],
    d: u32,
) -> Result<usize, GroupError> {
    let triv = Character::trivial(&chi.field, classes);
    let sym = if d == 0 { triv.clone() } else { sym_power_char(chi, classes, d)? };
    let m = inner_product(&sym, &triv, classes)?;
    if !m.is_integer() || m < Rational::zero() {
        return Err(GroupError::NonIntegralMultiplicity);
    }
    m.to_integer().try_into().map_err(|_| GroupError::NonIntegralMultiplicity)
}
