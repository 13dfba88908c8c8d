use crate::grouprep::{common_eigenvectors, u4_matrices, GroupError, IcosahedralTable};
use crate::hashimoto::{orbit_under, OrbitSet};
use crate::numfield::ExtensionField;
use crate::polyalg::{ExactMatrix, ProjPoint};

use super::{images_in_zeta20, shared_table, U4Error};

/// A subgroup of 2.A₅ given by words in the generators `a = S`, `b = T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub name: String,
    pub generator_words: Vec<String>,
    pub order: usize,
}

impl SubgroupSpec {
    fn new(name: &str, words: &[&str], order: usize) -> Self {
        SubgroupSpec { name: name.into(), generator_words: words.iter().map(|w| w.to_string()).collect(), order }
    }

    /// `2.A₄`; the quaternion generators come first, which already leave no
    /// common eigenvector.
    pub fn binary_tetrahedral() -> Self {
        Self::new("2.A4", &["b", "aabaaabaa", "aaaba"], 24)
    }

    pub fn binary_dihedral_10() -> Self {
        Self::new("2.D10", &["a", "baaabaab"], 20)
    }

    /// `2.S₃`, the dicyclic group of order 12.
    pub fn dicyclic_12() -> Self {
        Self::new("dicyclic-12", &["b", "aaabaa"], 12)
    }

    /// `2.D₄`.
    pub fn quaternion_8() -> Self {
        Self::new("quaternion-8", &["b", "aabaaabaa"], 8)
    }

    pub fn all() -> Vec<Self> {
        vec![Self::binary_tetrahedral(), Self::binary_dihedral_10(), Self::dicyclic_12(), Self::quaternion_8()]
    }

    /// Element indices of the generators, after checking the order of the
    /// subgroup they generate.
    pub fn elements(&self, table: &IcosahedralTable) -> Result<Vec<usize>, U4Error> {
        let gens =
            self.generator_words.iter().map(|w| table.word_element(w)).collect::<Result<Vec<_>, GroupError>>()?;
        let got = table.group.subgroup_order(&gens);
        if got != self.order {
            return Err(U4Error::WrongSubgroupOrder { name: self.name.clone(), expected: self.order, got });
        }
        Ok(gens)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub subgroup: SubgroupSpec,
    /// Common fixed points in `ℙ(U₄)`, over `Q(ζ₂₀)`.
    pub fixed_points: Vec<ProjPoint<ExtensionField>>,
    /// A₅-orbit length of each fixed point.
    pub orbit_lengths: Vec<usize>,
    /// Order of the stabilizer in A₅ of each fixed point.
    pub stabilizer_orders: Vec<usize>,
    /// Number of distinct orbits among the fixed points.
    pub distinct_orbits: usize,
}

impl CensusReport {
    /// Orbit length times stabilizer order is 60 for every fixed point.
    pub fn bookkeeping_holds(&self) -> bool {
        self.orbit_lengths.iter().zip(&self.stabilizer_orders).all(|(l, s)| l * s == 60)
    }
}

fn fixes(m: &ExactMatrix<ExtensionField>, p: &ProjPoint<ExtensionField>) -> Result<bool, U4Error> {
    let f = m.field();
    Ok(ProjPoint::new(f, m.mul_vec(p.coords())?)? == *p)
}

/// Fixed points of the subgroup in `ℙ(U₄)` and their A₅-orbits.
pub fn fixed_point_census(s: &SubgroupSpec) -> Result<CensusReport, U4Error> {
    let table = shared_table();
    let z20 = ExtensionField::zeta20();
    let u4 = table.model("U4");
    let gens: Vec<_> = s.elements(table)?.into_iter().map(|i| u4.image(i).clone()).collect();
    let gens = images_in_zeta20(&gens);
    let fixed_points = common_eigenvectors(&z20, &gens)?;
    for p in &fixed_points {
        for g in &gens {
            if !fixes(g, p)? {
                return Err(U4Error::Group(GroupError::InvalidInput("eigenvector is not fixed".into())));
            }
        }
    }

    let a5_gens = images_in_zeta20(&u4_matrices());
    let all = images_in_zeta20(u4.images());
    let mut orbits: Vec<OrbitSet<ExtensionField>> = Vec::new();
    let mut orbit_lengths = Vec::new();
    let mut stabilizer_orders = Vec::new();
    for p in &fixed_points {
        let orbit = orbit_under(&z20, &a5_gens, p)?;
        orbit_lengths.push(orbit.len());
        let mut fixing = 0;
        for g in &all {
            fixing += fixes(g, p)? as usize;
        }
        // -1 acts trivially on ℙ(U₄).
        stabilizer_orders.push(fixing / 2);
        if !orbits.iter().any(|o| o.contains(p)) {
            orbits.push(orbit);
        }
    }
    Ok(CensusReport {
        subgroup: s.clone(),
        fixed_points,
        orbit_lengths,
        stabilizer_orders,
        distinct_orbits: orbits.len(),
    })
}
