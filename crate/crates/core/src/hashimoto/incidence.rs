use std::collections::BTreeSet;

use crate::numfield::Field;
use crate::polyalg::{ExactMatrix, ProjPoint};

use super::orbit::w4_generators_in;

/// Lines through at least three of the points and planes through at least
/// four, each given by the sorted indices of the points it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceReport {
    pub lines: Vec<Vec<usize>>,
    pub planes: Vec<Vec<usize>>,
    /// A plane and four of its points, no three of them collinear.
    pub witness_plane: Option<(Vec<usize>, [usize; 4])>,
    /// Orbits of the lines and of the planes under A₅, as indices into
    /// `lines` and `planes`. Empty when the points are not an A₅-set.
    pub line_orbits: Vec<Vec<usize>>,
    pub plane_orbits: Vec<Vec<usize>>,
}

impl IncidenceReport {
    pub fn lines_with_3plus(&self) -> usize {
        self.lines.len()
    }

    pub fn planes_with_4plus(&self) -> usize {
        self.planes.len()
    }

    /// An orbit of `count` planes, each through exactly `per_plane` points,
    /// such that every point lies on `per_point` of them.
    pub fn has_plane_orbit(&self, n_points: usize, count: usize, per_plane: usize, per_point: usize) -> bool {
        has_orbit(&self.planes, &self.plane_orbits, n_points, count, per_plane, per_point)
    }

    pub fn has_line_orbit(&self, n_points: usize, count: usize, per_line: usize, per_point: usize) -> bool {
        has_orbit(&self.lines, &self.line_orbits, n_points, count, per_line, per_point)
    }
}

fn has_orbit(
    sets: &[Vec<usize>],
    orbits: &[Vec<usize>],
    n_points: usize,
    count: usize,
    per_set: usize,
    per_point: usize,
) -> bool {
    orbits.iter().any(|o| {
        let mut hits = vec![0; n_points];
        for &i in o {
            for &p in &sets[i] {
                hits[p] += 1;
            }
        }
        o.len() == count && o.iter().all(|&i| sets[i].len() == per_set) && hits.iter().all(|&h| h == per_point)
    })
}

/// The permutation of `points` induced by each W₄ generator, if the set is
/// closed under it.
fn generator_permutations<F: Field>(field: &F, points: &[ProjPoint<F>]) -> Option<Vec<Vec<usize>>> {
    w4_generators_in(field)
        .iter()
        .map(|g| {
            points
                .iter()
                .map(|p| {
                    let img = ProjPoint::new(field, g.mul_vec(p.coords()).ok()?).ok()?;
                    points.iter().position(|q| *q == img)
                })
                .collect()
        })
        .collect()
}

fn set_orbits(sets: &[Vec<usize>], perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![usize::MAX; sets.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..sets.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            for perm in perms {
                let mut img: Vec<usize> = sets[members[k]].iter().map(|&p| perm[p]).collect();
                img.sort_unstable();
                let j = sets.iter().position(|s| *s == img).expect("incidences are preserved");
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

fn span_rank<F: Field>(field: &F, pts: &[&ProjPoint<F>]) -> usize {
    let rows = pts.iter().map(|p| p.coords().to_vec()).collect();
    ExactMatrix::from_rows(field, rows).unwrap().rank()
}

pub fn incidence_census<F: Field>(field: &F, points: &[ProjPoint<F>]) -> IncidenceReport {
    let n = points.len();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let on: Vec<usize> = (0..n)
                .filter(|&k| k == i || k == j || span_rank(field, &[&points[i], &points[j], &points[k]]) == 2)
                .collect();
            if on.len() >= 3 {
                lines.insert(on);
            }
        }
    }
    let mut planes: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let base = [&points[i], &points[j], &points[k]];
                if span_rank(field, &base) < 3 {
                    continue;
                }
                let on: Vec<usize> = (0..n)
                    .filter(|&m| {
                        [i, j, k].contains(&m) || span_rank(field, &[base[0], base[1], base[2], &points[m]]) == 3
                    })
                    .collect();
                if on.len() >= 4 {
                    planes.insert(on);
                }
            }
        }
    }
    let collinear =
        |a: usize, b: usize, c: usize| lines.iter().any(|l| l.contains(&a) && l.contains(&b) && l.contains(&c));
    let witness_plane = planes.iter().find_map(|pl| {
        let k = pl.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for d in c + 1..k {
                        let q = [pl[a], pl[b], pl[c], pl[d]];
                        let bad = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
                            .iter()
                            .any(|&(i, j, l)| collinear(q[i], q[j], q[l]));
                        if !bad {
                            return Some((pl.clone(), q));
                        }
                    }
                }
            }
        }
        None
    });
    let lines: Vec<Vec<usize>> = lines.into_iter().collect();
    let planes: Vec<Vec<usize>> = planes.into_iter().collect();
    let (line_orbits, plane_orbits) = match generator_permutations(field, points) {
        Some(perms) if points.first().is_some_and(|p| p.coords().len() == 4) => {
            (set_orbits(&lines, &perms), set_orbits(&planes, &perms))
        }
        _ => (Vec::new(), Vec::new()),
    };
    IncidenceReport { lines, planes, witness_plane, line_orbits, plane_orbits }
}
