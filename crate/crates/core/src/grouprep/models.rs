//! Explicit matrix models of A₅ and of the binary icosahedral group.

use crate::numfield::{int, ExtElem, ExtensionField, Field, RationalField};
use crate::polyalg::{ExactMatrix, MultiPoly, PolyRing};

use super::{generate_group, GroupError, MatrixGroup};

/// Upper bound used for every closure in this crate.
pub const GROUP_BOUND: usize = 240;

/// Matrix on `(x1, x2, x3, x4)` induced by permuting `x0..x4` and
/// eliminating `x0 = -(x1 + x2 + x3 + x4)`. `perm[i]` is the image of
/// index `i`; the point `(x_i)` goes to the point with `x_{perm[i]}` equal to
/// the old `x_i`.
pub fn permutation_on_hyperplane(perm: &[usize; 5]) -> ExactMatrix<RationalField> {
    let mut inv = [0usize; 5];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    ExactMatrix::from_fn(&RationalField, 4, 4, |k, j| {
        // new x_{k+1} = old x_{inv[k+1]}, expressed in old x1..x4
        match inv[k + 1] {
            0 => int(-1),
            src if src == j + 1 => int(1),
            _ => int(0),
        }
    })
}

/// Generators of A₅ acting on the hyperplane `x0 + ... + x4 = 0`: the
/// 5-cycle `(0 1 2 3 4)` and the 3-cycle `(0 1 2)`.
pub fn w4_matrices() -> [ExactMatrix<RationalField>; 2] {
    [permutation_on_hyperplane(&[1, 2, 3, 4, 0]), permutation_on_hyperplane(&[1, 2, 0, 3, 4])]
}

fn zpow(z5: &ExtensionField, k: u64) -> ExtElem {
    z5.pow(&z5.generator(), k)
}

/// `√5 = 1 + 2ζ + 2ζ⁴` inside `Q(ζ₅)`.
pub fn sqrt5_in_zeta5(z5: &ExtensionField) -> ExtElem {
    z5.elem(&[int(1), int(2), int(0), int(0), int(2)])
}

/// Generators of the binary icosahedral group in `SL₂(Q(ζ₅))`:
/// `S = -diag(ζ³, ζ²)` of order 10 and
/// `T = (1/√5) [[-(ζ - ζ⁴), ζ² - ζ³], [ζ² - ζ³, ζ - ζ⁴]]` of order 4.
pub fn u2_matrices() -> [ExactMatrix<ExtensionField>; 2] {
    let f = ExtensionField::zeta5();
    let z = |k| zpow(&f, k);
    let s = ExactMatrix::diagonal(&f, &[f.neg(&z(3)), f.neg(&z(2))]);
    let inv_r5 = f.inv(&sqrt5_in_zeta5(&f)).unwrap();
    let a = f.mul(&f.sub(&z(1), &z(4)), &inv_r5);
    let b = f.mul(&f.sub(&z(2), &z(3)), &inv_r5);
    let t = ExactMatrix::from_rows(&f, vec![vec![f.neg(&a), b.clone()], vec![b, a]]).unwrap();
    [s, t]
}

/// Action of a 2×2 matrix on binary forms of degree `k`, in the basis
/// `e1^k, e1^(k-1) e2, ..., e2^k`: column `i` holds the expansion of
/// `(g e1)^(k-i) (g e2)^i`.
pub fn sym_power_matrix<F: Field>(g: &ExactMatrix<F>, k: u32) -> ExactMatrix<F> {
    let f = g.field();
    let ring = PolyRing::new(f.clone(), &["e1", "e2"]);
    let e = MultiPoly::vars(&ring);
    let ge1 = e[0].scale(g.get(0, 0)).add(&e[1].scale(g.get(1, 0)));
    let ge2 = e[0].scale(g.get(0, 1)).add(&e[1].scale(g.get(1, 1)));
    let n = k as usize + 1;
    let mut m = ExactMatrix::zeros(f, n, n);
    for i in 0..n {
        let img = ge1.pow(k - i as u32).mul(&ge2.pow(i as u32));
        for r in 0..n {
            m.set(r, i, img.coefficient(&[k - r as u32, r as u32]));
        }
    }
    m
}

/// Applies `ζ ↦ ζ^k` to every entry.
pub fn galois_matrix(m: &ExactMatrix<ExtensionField>, k: u32) -> ExactMatrix<ExtensionField> {
    m.map_field(m.field(), |x| Ok(x.substitute_power(k))).unwrap()
}

/// Moves a matrix over `Q(ζ₅)` into `Q(ζ₂₀)` via `ζ₅ ↦ ζ₂₀⁴`.
pub fn zeta5_to_zeta20(m: &ExactMatrix<ExtensionField>) -> ExactMatrix<ExtensionField> {
    let z20 = ExtensionField::zeta20();
    let w = z20.pow(&z20.generator(), 4);
    m.map_field(&z20, |x| Ok(x.map_generator(&w))).unwrap()
}

/// A rational matrix viewed over an extension field.
pub fn rational_into(m: &ExactMatrix<RationalField>, f: &ExtensionField) -> ExactMatrix<ExtensionField> {
    m.map_field(f, |q| f.from_rational(q)).unwrap()
}

/// `U₄ = Sym³U₂` generator images.
pub fn u4_matrices() -> [ExactMatrix<ExtensionField>; 2] {
    u2_matrices().map(|g| sym_power_matrix(&g, 3))
}

/// A₅ as the group generated by [`w4_matrices`].
pub fn a5_w4_group() -> Result<MatrixGroup<RationalField>, GroupError> {
    generate_group(&RationalField, &w4_matrices(), GROUP_BOUND)
}

/// The binary icosahedral group as generated by [`u2_matrices`].
pub fn binary_icosahedral_group() -> Result<MatrixGroup<ExtensionField>, GroupError> {
    generate_group(&ExtensionField::zeta5(), &u2_matrices(), GROUP_BOUND)
}

/// Parses a word over the letters `a`, `b` (the two generators).
pub fn parse_word(word: &str) -> Result<Vec<usize>, GroupError> {
    word.chars()
        .map(|c| match c {
            'a' => Ok(0),
            'b' => Ok(1),
            _ => Err(GroupError::BadWord(word.to_string())),
        })
        .collect()
}
