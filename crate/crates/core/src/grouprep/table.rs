use crate::numfield::{ExtensionField, Field};
use crate::polyalg::ExactMatrix;

use super::models::{binary_icosahedral_group, galois_matrix, sym_power_matrix};
use super::{conjugacy_classes, Character, ConjugacyClass, GroupError, MatrixGroup, Representation};

/// Names of the irreducible representations of the binary icosahedral
/// group, in table order.
pub const IRREP_NAMES: [&str; 9] = ["I", "U2", "U2'", "W3", "W3'", "U4", "W4", "W5", "U6"];

/// The binary icosahedral group with its classes and a character table
/// computed from explicit models: `U2` is the defining representation, a
/// prime denotes the Galois twist `ζ ↦ ζ²`, `W3 = Sym²U2`, `U4 = Sym³U2`,
/// `W4 = U2 ⊗ U2'`, `W5 = Sym⁴U2`, `U6 = Sym⁵U2`.
pub struct IcosahedralTable {
    pub group: MatrixGroup<ExtensionField>,
    pub classes: Vec<ConjugacyClass>,
    pub models: Vec<Representation<ExtensionField>>,
    pub characters: Vec<Character<ExtensionField>>,
}

impl IcosahedralTable {
    pub fn new() -> Result<Self, GroupError> {
        let group = binary_icosahedral_group()?;
        let f = group.field().clone();
        let classes = conjugacy_classes(&group);
        let u2 = group.natural();
        let twist = |r: &Representation<ExtensionField>| r.map(&f, |m| Ok(galois_matrix(m, 2)));
        let sym = |k| u2.map(&f, move |m| Ok(sym_power_matrix(m, k)));
        let triv = u2.map(&f, |_| Ok(ExactMatrix::identity(&f, 1)))?;
        let u2p = twist(&u2)?;
        let w3 = sym(2)?;
        let w3p = twist(&w3)?;
        let u4 = sym(3)?;
        let w4 = Representation::from_images(
            &f,
            u2.images().iter().zip(u2p.images()).map(|(a, b)| a.kronecker(b)).collect(),
        );
        let w5 = sym(4)?;
        let u6 = sym(5)?;
        let models = vec![triv, u2, u2p, w3, w3p, u4, w4, w5, u6];
        let characters = models.iter().map(|r| Character::of(r, &classes)).collect();
        Ok(IcosahedralTable { group, classes, models, characters })
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        IRREP_NAMES.iter().position(|n| *n == name)
    }

    pub fn character(&self, name: &str) -> &Character<ExtensionField> {
        &self.characters[self.index(name).expect("known irreducible")]
    }

    pub fn model(&self, name: &str) -> &Representation<ExtensionField> {
        &self.models[self.index(name).expect("known irreducible")]
    }

    pub fn field(&self) -> &ExtensionField {
        self.group.field()
    }

    /// Character of an arbitrary representation of this group.
    pub fn character_of(&self, rep: &Representation<ExtensionField>) -> Character<ExtensionField> {
        Character::of(rep, &self.classes)
    }

    /// Element index of a word in the generators `a`, `b`.
    pub fn word_element(&self, word: &str) -> Result<usize, GroupError> {
        self.group.eval_word(&super::models::parse_word(word)?)
    }

    /// Whether `-1` acts trivially, i.e. the character factors through A₅.
    pub fn is_a5_character(&self, chi: &Character<ExtensionField>) -> bool {
        let minus = self.group.index_of(&ExactMatrix::identity(self.field(), 2).neg()).unwrap();
        let c = self.classes.iter().position(|c| c.members.contains(&minus)).unwrap();
        chi.values[c] == chi.values[0]
    }

    pub fn dims(&self) -> Vec<i64> {
        let f = self.field();
        self.characters.iter().map(|c| f.to_rational(&c.degree()).unwrap().to_integer().try_into().unwrap()).collect()
    }
}
