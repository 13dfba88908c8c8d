use num_traits::{One, Zero};

use super::models::*;
use super::*;
use crate::numfield::{ExtensionField, Rational, RationalField};
use crate::polyalg::{ExactMatrix, PolyRing};

#[test]
fn a5_class_sizes() {
    let g = a5_w4_group().unwrap();
    let classes = conjugacy_classes(&g);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    let chi = Character::of(&g.natural(), &classes);
    assert_eq!(inner_product(&chi, &chi, &classes).unwrap(), Rational::one());
    let triv = Character::trivial(&RationalField, &classes);
    assert_eq!(inner_product(&triv, &triv, &classes).unwrap(), Rational::one());
}

#[test]
fn trivial_group_has_one_class() {
    let g = generate_group(&RationalField, &[ExactMatrix::identity(&RationalField, 2)], 4).unwrap();
    let c = conjugacy_classes(&g);
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].power_map, vec![0]);
}

#[test]
fn binary_icosahedral_table_is_orthonormal() {
    let t = IcosahedralTable::new().unwrap();
    assert_eq!(t.classes.len(), 9);
    assert_eq!(t.classes.iter().map(|c| c.size()).sum::<usize>(), 120);
    assert_eq!(t.dims().iter().map(|d| d * d).sum::<i64>(), 120);
    for (i, a) in t.characters.iter().enumerate() {
        for (j, b) in t.characters.iter().enumerate() {
            let expect = if i == j { Rational::one() } else { Rational::zero() };
            assert_eq!(inner_product(a, b, &t.classes).unwrap(), expect, "{} {}", IRREP_NAMES[i], IRREP_NAMES[j]);
        }
    }
    let a5: Vec<_> = IRREP_NAMES.iter().filter(|n| t.is_a5_character(t.character(n))).collect();
    assert_eq!(a5, vec![&"I", &"W3", &"W3'", &"W4", &"W5"]);
}

#[test]
fn newton_formulas_match_models() {
    let t = IcosahedralTable::new().unwrap();
    let u2 = t.character("U2");
    for (k, name) in [(2, "W3"), (3, "U4"), (4, "W5")] {
        assert_eq!(&sym_power_char(u2, &t.classes, k).unwrap(), t.character(name));
    }
    let triv = t.character("I");
    assert_eq!(&sym_power_char(triv, &t.classes, 2).unwrap(), triv);
    assert_eq!(sym_power_char(u2, &t.classes, 5).unwrap_err(), GroupError::UnsupportedPower(5));
}

#[test]
fn sym2_u4_decomposition() {
    let t = IcosahedralTable::new().unwrap();
    let s = sym_power_char(t.character("U4"), &t.classes, 2).unwrap();
    let m = decompose(&s, &t.characters, &t.classes).unwrap();
    let named: Vec<_> = IRREP_NAMES.iter().zip(&m).filter(|(_, &k)| k > 0).map(|(n, &k)| (*n, k)).collect();
    assert_eq!(named, vec![("W3", 1), ("W3'", 1), ("W4", 1)]);
    let w3 = t.character("W3");
    let w3p = t.character("W3'");
    assert_eq!(inner_product(w3, w3p, &t.classes).unwrap(), Rational::zero());
}

#[test]
fn subgroup_words_have_expected_orders() {
    let t = IcosahedralTable::new().unwrap();
    for (words, order) in [
        (&["b", "aabaaabaa"][..], 8),
        (&["b", "aaabaa"][..], 12),
        (&["a", "baaabaab"][..], 20),
        (&["b", "aabaaabaa", "aaaba"][..], 24),
    ] {
        let gens: Vec<usize> = words.iter().map(|w| t.word_element(w).unwrap()).collect();
        assert_eq!(t.group.subgroup_order(&gens), order, "{words:?}");
    }
}

#[test]
fn w4_five_cycle_fixed_points() {
    let z5 = ExtensionField::zeta5();
    let m = rational_into(&w4_matrices()[0], &z5);
    let pts = common_eigenvectors(&z5, &[m]).unwrap();
    assert_eq!(pts.len(), 4);
}

#[test]
fn w4_invariants_agree() {
    let g = a5_w4_group().unwrap();
    let classes = conjugacy_classes(&g);
    let chi = Character::of(&g.natural(), &classes);
    let ring = PolyRing::new(RationalField, &["x1", "x2", "x3", "x4"]);
    for (d, expect) in [(1, 0), (2, 1), (3, 1), (4, 2)] {
        let by_char = invariant_dim_from_char(&chi, &classes, d).unwrap();
        let basis = reynolds_invariant_basis(g.elements(), &ring, d).unwrap();
        assert_eq!((by_char, basis.len()), (expect, expect), "degree {d}");
        for b in &basis {
            for m in g.generators() {
                assert!(is_invariant(b, m).unwrap());
            }
        }
    }
}
