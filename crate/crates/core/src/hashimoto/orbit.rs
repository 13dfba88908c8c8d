use std::collections::HashSet;

use crate::grouprep::{common_eigenvectors, w4_matrices};
use crate::numfield::{ExtensionField, Field};
use crate::polyalg::{ExactMatrix, ProjPoint};

use super::{lift, power_sum_form, HashError};

/// A finite set of points closed under a group, in discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet<F: Field> {
    pub points: Vec<ProjPoint<F>>,
}

impl<F: Field> OrbitSet<F> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        self.points.contains(p)
    }

    /// Same points regardless of order.
    pub fn same_set(&self, other: &Self) -> bool {
        self.len() == other.len() && self.points.iter().all(|p| other.contains(p))
    }
}

/// The W₄ generators with entries in `field`.
pub fn w4_generators_in<F: Field>(field: &F) -> Vec<ExactMatrix<F>> {
    w4_matrices().iter().map(|m| m.map_field(field, |q| field.from_rational(q)).expect("characteristic 0")).collect()
}

/// Closure of `{p}` under the given matrices acting on coordinates.
pub fn orbit_under<F: Field>(field: &F, gens: &[ExactMatrix<F>], p: &ProjPoint<F>) -> Result<OrbitSet<F>, HashError> {
    let mut seen: HashSet<ProjPoint<F>> = HashSet::from([p.clone()]);
    let mut points = vec![p.clone()];
    let mut i = 0;
    while i < points.len() {
        for g in gens {
            let img = ProjPoint::new(field, g.mul_vec(points[i].coords())?)?;
            if seen.insert(img.clone()) {
                points.push(img);
            }
        }
        i += 1;
    }
    Ok(OrbitSet { points })
}

/// The A₅-orbit of `p` in `P(W₄)`.
pub fn a5_orbit<F: Field>(field: &F, p: &ProjPoint<F>) -> Result<OrbitSet<F>, HashError> {
    if p.coords().len() != 4 {
        return Err(HashError::DimensionMismatch { expected: 4, got: p.coords().len() });
    }
    orbit_under(field, &w4_generators_in(field), p)
}

/// The 24 common zeros of `F₂, F₃, F₄` and their checks.
#[derive(Debug, Clone)]
pub struct ZetaPointsReport {
    pub field: ExtensionField,
    pub orbits: Vec<OrbitSet<ExtensionField>>,
    pub power_sums_vanish: bool,
    pub f5_nonzero: bool,
    /// The Jacobian of `(F₂, F₃, F₄)` has rank 3 at every point.
    pub jacobian_full_rank: bool,
}

impl ZetaPointsReport {
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len()).collect()
    }

    pub fn total_points(&self) -> usize {
        self.orbits.iter().map(|o| o.len()).sum()
    }
}

/// Starts from the eigenlines of the 5-cycle over `ℚ(ζ₅)`, the points
/// `x_i = ζ^{ki}`, and sweeps them into A₅-orbits.
pub fn special_zeta_points() -> Result<ZetaPointsReport, HashError> {
    let z5 = ExtensionField::zeta5();
    let gens = w4_generators_in(&z5);
    let seeds = common_eigenvectors(&z5, &gens[..1])?;
    let mut orbits: Vec<OrbitSet<ExtensionField>> = Vec::new();
    for s in &seeds {
        if orbits.iter().any(|o| o.contains(s)) {
            continue;
        }
        orbits.push(orbit_under(&z5, &gens, s)?);
    }
    let forms: Vec<_> = (2..=5).map(|i| power_sum_form(i).map(|f| lift(&f, &z5))).collect::<Result<_, _>>()?;
    let grads: Vec<Vec<_>> = forms[..3].iter().map(|f| f.gradient()).collect();
    let mut power_sums_vanish = true;
    let mut f5_nonzero = true;
    let mut jacobian_full_rank = true;
    for p in orbits.iter().flat_map(|o| &o.points) {
        let c = p.coords();
        for f in &forms[..3] {
            power_sums_vanish &= z5.is_zero(&f.eval(c)?);
        }
        f5_nonzero &= !z5.is_zero(&forms[3].eval(c)?);
        let rows = grads
            .iter()
            .map(|g| g.iter().map(|d| d.eval(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        jacobian_full_rank &= ExactMatrix::from_rows(&z5, rows)?.rank() == 3;
    }
    Ok(ZetaPointsReport { field: z5, orbits, power_sums_vanish, f5_nonzero, jacobian_full_rank })
}
