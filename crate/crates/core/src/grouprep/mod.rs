//! Matrix models of A₅ and the binary icosahedral group 2.A₅, conjugacy
//! classes, characters computed from traces, symmetric powers, Reynolds
//! averaging and common fixed points.

mod character;
mod eigen;
mod group;
pub mod models;
mod reynolds;
mod table;

use thiserror::Error;

use crate::numfield::NumError;
use crate::polyalg::PolyError;

pub use character::{
    conjugacy_classes, decompose, inner_product, invariant_dim_from_char, sym_power_char, Character, ConjugacyClass,
};
pub use eigen::common_eigenvectors;
pub use group::{generate_group, MatrixGroup, Representation};
pub use models::{u2_matrices, u4_matrices, w4_matrices};
pub use reynolds::{act, is_invariant, monomials_of_degree, reynolds_invariant_basis};
pub use table::{IcosahedralTable, IRREP_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    ClosureBoundExceeded(usize),
    #[error("generator is singular")]
    SingularGenerator,
    #[error("no generators given")]
    EmptyGenerators,
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("symmetric power {0} is not supported")]
    UnsupportedPower(u32),
    #[error("multiplicity is not a non-negative integer")]
    NonIntegralMultiplicity,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("an eigenvalue lies outside the coefficient field")]
    UnsupportedEigenvalue,
    #[error("common fixed locus has a component of dimension {0} (as a vector space)")]
    PositiveDimensional(usize),
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("bad word: {0}")]
    BadWord(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Num(#[from] NumError),
}

#[cfg(test)]
mod tests;
