use std::fmt;

use crate::numfield::{Field, NumError};

/// A point of projective space, scaled so that its first nonzero
/// coordinate is 1. Equal points therefore have equal coordinates.
#[derive(Clone)]
pub struct ProjPoint<F: Field> {
    coords: Vec<F::Elem>,
}

impl<F: Field> ProjPoint<F> {
    /// Errors with `ZeroDivision` on the zero vector.
    pub fn new(field: &F, coords: Vec<F::Elem>) -> Result<Self, NumError> {
        let lead = coords.iter().find(|c| !field.is_zero(c)).ok_or(NumError::ZeroDivision)?;
        let inv = field.inv(lead)?;
        Ok(ProjPoint { coords: coords.iter().map(|c| field.mul(c, &inv)).collect() })
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn fmt_with(&self, field: &F) -> String {
        let c: Vec<String> = self.coords.iter().map(|x| field.fmt_elem(x)).collect();
        format!("[{}]", c.join(" : "))
    }
}

impl<F: Field> PartialEq for ProjPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<F: Field> Eq for ProjPoint<F> {}

impl<F: Field> std::hash::Hash for ProjPoint<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl<F: Field> fmt::Debug for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}
