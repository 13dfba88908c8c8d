//! The five faithful actions of A₅ on ℙ³: invariant counts, the
//! fixed-point census in `ℙ(U₄)`, the invariant quartic pencil there, and
//! the discriminant quartic of binary cubics.

mod census;
mod pencil;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::grouprep::{
    decompose, invariant_dim_from_char, reynolds_invariant_basis, sym_power_char, GroupError, IcosahedralTable,
    Representation, IRREP_NAMES,
};
use crate::hashimoto::HashError;
use crate::numfield::{ExtensionField, Field, NumError};
use crate::polyalg::{ExactMatrix, MultiPoly, PolyError, PolyRing, RingRef};

pub use census::{fixed_point_census, CensusReport, SubgroupSpec};
pub use pencil::{binary_cubic_discriminant, u4_pencil_nodal_members, DiscriminantReport, NodalMember, U4PencilReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum U4Error {
    #[error("{model} in degree {degree}: characters give {by_character}, Reynolds gives {by_reynolds}")]
    MethodMismatch { model: P3Model, degree: u32, by_character: usize, by_reynolds: usize },
    #[error("degree {0} is not supported (at most 4)")]
    UnsupportedDegree(u32),
    #[error("multiplicity is not a non-negative integer")]
    NonIntegralMultiplicity,
    #[error("an eigenvalue lies outside the coefficient field")]
    UnsupportedEigenvalue,
    #[error("subgroup {name} has order {got}, expected {expected}")]
    WrongSubgroupOrder { name: String, expected: usize, got: usize },
    #[error("the invariant basis cannot single out a member through the point")]
    BasisDegenerate,
    #[error("the discriminant is not fixed by the Reynolds projection")]
    NotInvariant,
    #[error("the gradient of the discriminant does not vanish along the twisted cubic")]
    GradientOnCubic,
    #[error("the chart Hessian at the base point has rank {0}, expected 1")]
    HessianRank(usize),
    #[error("the discriminant is not in the invariant pencil")]
    NotInPencil,
    #[error(transparent)]
    Group(GroupError),
    #[error(transparent)]
    Hash(#[from] HashError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Num(#[from] NumError),
}

impl From<GroupError> for U4Error {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::NonIntegralMultiplicity => U4Error::NonIntegralMultiplicity,
            GroupError::UnsupportedEigenvalue => U4Error::UnsupportedEigenvalue,
            e => U4Error::Group(e),
        }
    }
}

/// The binary icosahedral group with its character table, built once.
pub fn shared_table() -> &'static IcosahedralTable {
    static TABLE: OnceLock<IcosahedralTable> = OnceLock::new();
    TABLE.get_or_init(|| IcosahedralTable::new().expect("the shipped generators close to 120 elements"))
}

/// A four-dimensional representation of 2.A₅ whose projectivization is a
/// faithful A₅-action on ℙ³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P3Model {
    W4,
    U4,
    U2U2,
    U2U2Prime,
    IW3,
}

impl P3Model {
    pub const ALL: [P3Model; 5] = [P3Model::W4, P3Model::U4, P3Model::U2U2, P3Model::U2U2Prime, P3Model::IW3];

    pub fn name(self) -> &'static str {
        match self {
            P3Model::W4 => "W4",
            P3Model::U4 => "U4",
            P3Model::U2U2 => "U2+U2",
            P3Model::U2U2Prime => "U2+U2'",
            P3Model::IW3 => "I+W3",
        }
    }

    /// The matrix images of all 120 group elements.
    pub fn representation(self, table: &IcosahedralTable) -> Representation<ExtensionField> {
        let sum = |a: &str, b: &str| {
            let (ra, rb) = (table.model(a), table.model(b));
            Representation::from_images(
                table.field(),
                ra.images().iter().zip(rb.images()).map(|(x, y)| x.direct_sum(y)).collect(),
            )
        };
        match self {
            P3Model::W4 => table.model("W4").clone(),
            P3Model::U4 => table.model("U4").clone(),
            P3Model::U2U2 => sum("U2", "U2"),
            P3Model::U2U2Prime => sum("U2", "U2'"),
            P3Model::IW3 => sum("I", "W3"),
        }
    }
}

impl fmt::Display for P3Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for P3Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        P3Model::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown model {s}"))
    }
}

pub const MODEL_VARS: [&str; 4] = ["x1", "x2", "x3", "x4"];

pub fn model_ring(field: &ExtensionField) -> RingRef<ExtensionField> {
    PolyRing::new(field.clone(), &MODEL_VARS)
}

/// Reduced-echelon basis of the invariant forms of degree `d`.
pub fn invariant_basis(model: P3Model, d: u32) -> Result<Vec<MultiPoly<ExtensionField>>, U4Error> {
    if d > 4 {
        return Err(U4Error::UnsupportedDegree(d));
    }
    let table = shared_table();
    let rep = model.representation(table);
    Ok(reynolds_invariant_basis(rep.images(), &model_ring(table.field()), d)?)
}

/// `dim (Sym^d V)^{2.A₅}` by the character inner product and by the rank of
/// the Reynolds images; the two must agree.
pub fn invariant_dim(model: P3Model, d: u32) -> Result<usize, U4Error> {
    if d > 4 {
        return Err(U4Error::UnsupportedDegree(d));
    }
    let table = shared_table();
    let chi = table.character_of(&model.representation(table));
    let by_character = invariant_dim_from_char(&chi, &table.classes, d)?;
    let by_reynolds = invariant_basis(model, d)?.len();
    if by_character != by_reynolds {
        return Err(U4Error::MethodMismatch { model, degree: d, by_character, by_reynolds });
    }
    Ok(by_character)
}

/// Multiplicities of the irreducibles in `Sym²U₄`, keyed by name; zero
/// entries are kept.
pub fn sym2_u4_decompose() -> Result<BTreeMap<&'static str, u32>, U4Error> {
    let table = shared_table();
    let s = sym_power_char(table.character("U4"), &table.classes, 2)?;
    let m = decompose(&s, &table.characters, &table.classes)?;
    Ok(IRREP_NAMES.iter().copied().zip(m).collect())
}

/// `ζ₅ ↦ ζ₂₀⁴` on every coefficient.
pub(crate) fn poly_to_zeta20(p: &MultiPoly<ExtensionField>) -> MultiPoly<ExtensionField> {
    let z20 = ExtensionField::zeta20();
    let w = z20.pow(&z20.generator(), 4);
    let ring = PolyRing::from_names(z20.clone(), p.ring().vars().to_vec());
    p.map_field(&ring, |x| Ok(x.map_generator(&w))).expect("same arity")
}

pub(crate) fn images_in_zeta20(images: &[ExactMatrix<ExtensionField>]) -> Vec<ExactMatrix<ExtensionField>> {
    images.iter().map(crate::grouprep::models::zeta5_to_zeta20).collect()
}

#[cfg(test)]
mod tests;
