//! Sparse multivariate polynomials over an exact field, with calculus,
//! resultants, univariate gcds, exact linear algebra and a mod-p
//! irreducibility test.

mod matrix;
mod poly;
mod proj;
mod resultant;
mod text;
mod univariate;

use thiserror::Error;

use crate::numfield::NumError;

pub use matrix::ExactMatrix;
pub(crate) use poly::same_ring;
pub use poly::{Monomial, MultiPoly, PolyRing, RingRef};
pub use proj::ProjPoint;
pub use resultant::{resultant_wrt, sylvester_matrix};
pub use text::{parse_expr, parse_poly, parse_poly_infer};
pub use univariate::{
    gcd_uni, irreducible_mod_p, is_irreducible_fp, rational_uni, reduce_mod_p, squarefree_part, UniPoly,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("division leaves a remainder")]
    InexactDivision,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial has degree zero in the elimination variable")]
    DegreeZeroInVar,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("{0} is not prime")]
    CompositeModulus(u64),
    #[error("leading coefficient vanishes modulo p")]
    BadLeadingCoefficient,
    #[error("matrix shapes do not match")]
    ShapeMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Num(#[from] NumError),
}
