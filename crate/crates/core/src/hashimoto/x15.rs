//! Local analysis of the double quartic `w² = R` branched in `S₁₅` at the
//! node `O = [0:-1:-1:1:1]`.

use crate::grouprep::act;
use crate::grouprep::models::permutation_on_hyperplane;
use crate::numfield::{int, rat, RationalField};
use crate::polyalg::{parse_poly, ExactMatrix, MultiPoly, PolyRing, ProjPoint};

use super::{hashimoto_quartic, rational_point, HashError};

/// The individual checks, each with its own failure code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum X15Check {
    /// `O` becomes `[0:0:0:1]` in the `y` coordinates.
    ImageOfO,
    /// The involution acts by `diag(1, 1, -1, -1)` on `y` and fixes `R`.
    SigmaAction,
    /// The `y₄²` coefficient of `R` is `4y₃² - 16y₁y₂`.
    QuadraticCoefficient,
    /// `w² - R` has no terms below degree 2 at the origin of the chart
    /// `y₄ = 1`, and its quadratic part is `w² - 4y₃² + 16y₁y₂`.
    TangentCone,
    /// Both lines `y₁ = w ∓ 2y₃ = 0` lie on the cone, meet, and are
    /// swapped by the involution.
    LinesSwapped,
}

impl X15Check {
    pub const ALL: [X15Check; 5] = [
        X15Check::ImageOfO,
        X15Check::SigmaAction,
        X15Check::QuadraticCoefficient,
        X15Check::TangentCone,
        X15Check::LinesSwapped,
    ];

    pub fn code(self) -> char {
        match self {
            X15Check::ImageOfO => 'a',
            X15Check::SigmaAction => 'b',
            X15Check::QuadraticCoefficient => 'c',
            X15Check::TangentCone => 'd',
            X15Check::LinesSwapped => 'e',
        }
    }
}

#[derive(Debug, Clone)]
pub struct X15Report {
    pub results: Vec<(X15Check, bool)>,
    /// `R` in `y₁..y₄`.
    pub r_in_y: MultiPoly<RationalField>,
    /// The `y₄²` coefficient of `R`.
    pub r2: MultiPoly<RationalField>,
    /// Quadratic part of `w² - R` in the chart `y₄ = 1`, in `y₁, y₂, y₃, w`.
    pub cone: MultiPoly<RationalField>,
}

impl X15Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<X15Check> {
        self.results.iter().find(|(_, ok)| !ok).map(|(c, _)| *c)
    }
}

/// `x = A y` for `x1 = y1-y3-y4, x2 = y2-y4, x3 = y1+y3+y4, x4 = y2+y4`.
fn change_of_coordinates() -> ExactMatrix<RationalField> {
    let rows = [[1, 0, -1, -1], [0, 1, 0, -1], [1, 0, 1, 1], [0, 1, 0, 1]];
    ExactMatrix::from_rows(&RationalField, rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
}

pub fn x15_tangent_cone() -> Result<X15Report, HashError> {
    let q = RationalField;
    let r = hashimoto_quartic(&rat(1, 4)).equation;
    let a = change_of_coordinates();
    let b = a.inverse()?;

    let o = rational_point([0, -1, -1, 1, 1]);
    let image_ok = ProjPoint::new(&q, b.mul_vec(o.coords())?)?.coords() == [int(0), int(0), int(0), int(1)];

    // σ fixes x0 and swaps x1 ↔ x3, x2 ↔ x4.
    let sigma_x = permutation_on_hyperplane(&[0, 3, 4, 1, 2]);
    let sigma_y = b.mul(&sigma_x)?.mul(&a)?;
    let sigma_ok = sigma_y == ExactMatrix::diagonal(&q, &[int(1), int(1), int(-1), int(-1)]) && act(&r, &sigma_x)? == r;

    let yring = PolyRing::new(q, &["y1", "y2", "y3", "y4"]);
    let r_in_y = act(&rename(&r, &yring)?, &a)?;
    let parts = r_in_y.coeffs_in(3);
    let r2 = parts.get(2).cloned().unwrap_or_else(|| MultiPoly::zero(&yring));
    let r2_ok = parts.len() == 3 && r2 == parse_poly("4*y3^2 - 16*y1*y2", &yring)?;

    let zring = PolyRing::new(q, &["y1", "y2", "y3", "w"]);
    let zv = MultiPoly::vars(&zring);
    let chart = r_in_y.compose(&[zv[0].clone(), zv[1].clone(), zv[2].clone(), MultiPoly::one(&zring)])?;
    let g = zv[3].pow(2).sub(&chart);
    let cone = g.homogeneous_part(2);
    let cone_ok = g.homogeneous_part(0).is_zero()
        && g.homogeneous_part(1).is_zero()
        && cone == parse_poly("w^2 - 4*y3^2 + 16*y1*y2", &zring)?;

    let lines_ok = lines_check(&cone)?;

    Ok(X15Report {
        results: vec![
            (X15Check::ImageOfO, image_ok),
            (X15Check::SigmaAction, sigma_ok),
            (X15Check::QuadraticCoefficient, r2_ok),
            (X15Check::TangentCone, cone_ok),
            (X15Check::LinesSwapped, lines_ok),
        ],
        r_in_y,
        r2,
        cone,
    })
}

fn rename(
    p: &MultiPoly<RationalField>,
    target: &crate::polyalg::RingRef<RationalField>,
) -> Result<MultiPoly<RationalField>, HashError> {
    Ok(p.compose(&MultiPoly::vars(target))?)
}

/// The lines `y₁ = 0, w = ±2y₃` parametrized by `(s, t) ↦ (0, s, t, ±2t)`,
/// with the involution acting on `(y₁, y₂, y₃, w)` by `y₃ ↦ -y₃`.
fn lines_check(cone: &MultiPoly<RationalField>) -> Result<bool, HashError> {
    let q = RationalField;
    let pring = PolyRing::new(q, &["s", "t"]);
    let s = MultiPoly::var_at(&pring, 0);
    let t = MultiPoly::var_at(&pring, 1);
    let zero = MultiPoly::zero(&pring);
    let line = |sign: i64| vec![zero.clone(), s.clone(), t.clone(), t.scale(&int(2 * sign))];
    let plus = line(1);
    let minus = line(-1);
    let on_cone = cone.compose(&plus)?.is_zero() && cone.compose(&minus)?.is_zero();

    let zring = cone.ring();
    let lin = |name: &str| parse_poly(name, zring);
    let eq_plus = lin("w - 2*y3")?;
    let eq_minus = lin("w + 2*y3")?;
    let sigma = ExactMatrix::diagonal(&q, &[int(1), int(1), int(-1), int(1)]);
    let image: Vec<MultiPoly<RationalField>> =
        (0..4).map(|i| (0..4).fold(zero.clone(), |acc, j| acc.add(&plus[j].scale(sigma.get(i, j))))).collect();
    let swapped = image[0].is_zero() && eq_minus.compose(&image)?.is_zero() && !eq_minus.compose(&plus)?.is_zero();
    let distinct = !eq_plus.compose(&minus)?.is_zero();
    let invariant = act(cone, &sigma)? == *cone;
    // The common point (0:1:0:0) puts the lines in opposite rulings.
    let meet = [int(0), int(1), int(0), int(0)];
    let meets = eq_plus.eval(&meet)? == int(0) && eq_minus.eval(&meet)? == int(0);
    Ok(on_cone && swapped && distinct && invariant && meets)
}
