//! Python bindings. Exact rationals cross the boundary as
//! `fractions.Fraction` (plain `int` is accepted on input).

use std::fmt::Display;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::pyclass::CompareOp;
use pyo3::types::{PyDict, PyList};

use icosa_core::conicbundle::{irreducibility_search, singular_points, PlaneCurve};
use icosa_core::hashimoto::{self, point_from_x0x4, power_sum_form};
use icosa_core::numfield::{Rational, RationalField};
use icosa_core::polyalg::{parse_expr, resultant_wrt, MultiPoly, PolyRing, ProjPoint};
use icosa_core::u4w3::{self, P3Model};
use icosa_core::verifier;

type QPoly = MultiPoly<RationalField>;

fn err<E: Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A polynomial with rational coefficients in named variables.
#[pyclass(module = "icosa", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Poly {
    inner: QPoly,
}

impl Poly {
    fn same_ring(&self, other: &Poly) -> PyResult<()> {
        if self.inner.ring().vars() == other.inner.ring().vars() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "variables differ: {:?} vs {:?}",
                self.inner.ring().vars(),
                other.inner.ring().vars()
            )))
        }
    }

    /// Re-home `other` in this ring so that structural equality applies.
    fn rehome(&self, other: &Poly) -> PyResult<QPoly> {
        self.same_ring(other)?;
        other.inner.embed(self.inner.ring()).map_err(err)
    }

    fn wrap(inner: QPoly) -> Poly {
        Poly { inner }
    }
}

#[pymethods]
impl Poly {
    #[new]
    fn new(expr: &str, vars: Vec<String>) -> PyResult<Self> {
        let ring = PolyRing::from_names(RationalField, vars);
        parse_expr(expr, &ring).map(Poly::wrap).map_err(err)
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.ring().vars().to_vec()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    /// `[(exponents, coefficient), ...]` in the canonical term order.
    fn terms(&self) -> Vec<(Vec<u32>, Rational)> {
        self.inner.terms().iter().map(|(m, c)| (m.0.clone(), c.clone())).collect()
    }

    fn diff(&self, var: &str) -> PyResult<Poly> {
        self.inner.diff_var(var).map(Poly::wrap).map_err(err)
    }

    fn eval(&self, point: Vec<Rational>) -> PyResult<Rational> {
        self.inner.eval(&point).map_err(err)
    }

    /// Resultant with `other` with respect to `var`.
    fn resultant(&self, other: &Poly, var: &str) -> PyResult<Poly> {
        let g = self.rehome(other)?;
        let i = self.inner.ring().var_index(var).map_err(err)?;
        resultant_wrt(&self.inner, &g, i).map(Poly::wrap).map_err(err)
    }

    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly::wrap(self.inner.add(&self.rehome(other)?)))
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly::wrap(self.inner.sub(&self.rehome(other)?)))
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly::wrap(self.inner.mul(&self.rehome(other)?)))
    }

    fn __neg__(&self) -> Poly {
        Poly::wrap(self.inner.neg())
    }

    fn __pow__(&self, e: u32, modulo: Option<Py<PyAny>>) -> PyResult<Poly> {
        if modulo.is_some() {
            return Err(PyValueError::new_err("modular powers are not supported"));
        }
        Ok(Poly::wrap(self.inner.pow(e)))
    }

    fn scale(&self, c: Rational) -> Poly {
        Poly::wrap(self.inner.scale(&c))
    }

    fn __richcmp__(&self, other: &Poly, op: CompareOp) -> PyResult<bool> {
        let eq = self.same_ring(other).is_ok() && self.rehome(other)? == self.inner;
        match op {
            CompareOp::Eq => Ok(eq),
            CompareOp::Ne => Ok(!eq),
            _ => Err(PyValueError::new_err("polynomials are not ordered")),
        }
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?}, {:?})", self.inner.render(), self.inner.ring().vars())
    }
}

fn point5(coords: Vec<Rational>) -> PyResult<ProjPoint<RationalField>> {
    point_from_x0x4(&RationalField, &coords).map_err(err)
}

/// Coordinates `[x0, ..., x4]` with `x0 = -(x1 + ... + x4)` restored.
fn coords5(p: &ProjPoint<RationalField>) -> Vec<Rational> {
    let rest = p.coords();
    let x0 = -rest.iter().sum::<Rational>();
    std::iter::once(x0).chain(rest.iter().cloned()).collect()
}

/// `F_i = Σ x_j^i` on the hyperplane, in `x1..x4`.
#[pyfunction]
fn power_sum(i: u32) -> PyResult<Poly> {
    power_sum_form(i).map(Poly::wrap).map_err(err)
}

/// `F4 - λ F2²`.
#[pyfunction]
fn pencil_member(lam: Rational) -> PyResult<Poly> {
    let (f2, f4) = (power_sum_form(2).map_err(err)?, power_sum_form(4).map_err(err)?);
    Ok(Poly::wrap(f4.sub(&f2.mul(&f2).scale(&lam))))
}

/// The pencil parameter of the unique member through `[x0 : ... : x4]`.
#[pyfunction]
fn lambda_through(coords: Vec<Rational>) -> PyResult<Rational> {
    hashimoto::lambda_through(&RationalField, &point5(coords)?).map_err(err)
}

#[pyfunction]
fn node_certificate<'py>(py: Python<'py>, lam: Rational, coords: Vec<Rational>) -> PyResult<Bound<'py, PyDict>> {
    let r = hashimoto::node_certificate(&lam, &point5(coords)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("on_surface", r.on_surface)?;
    d.set_item("gradient_zero", r.gradient_zero)?;
    d.set_item("hessian_rank", r.hessian_rank)?;
    d.set_item("is_node", r.is_node())?;
    Ok(d)
}

/// The A5 orbit of `[x0 : ... : x4]`, each point normalized.
#[pyfunction]
fn a5_orbit(coords: Vec<Rational>) -> PyResult<Vec<Vec<Rational>>> {
    let o = hashimoto::a5_orbit(&RationalField, &point5(coords)?).map_err(err)?;
    Ok(o.points.iter().map(coords5).collect())
}

#[pyfunction]
fn orbit_representatives() -> Vec<(&'static str, Vec<Rational>)> {
    hashimoto::orbit_representatives().iter().map(|(n, p)| (*n, coords5(p))).collect()
}

/// Rank of the evaluation map from quadrics to the given points.
#[pyfunction]
fn quadrics_through_rank(points: Vec<Vec<Rational>>) -> PyResult<usize> {
    let pts: Vec<_> = points.into_iter().map(point5).collect::<PyResult<_>>()?;
    Ok(hashimoto::quadrics_through_rank(&RationalField, &pts))
}

#[pyfunction]
fn ci_genus(d1: i64, d2: i64) -> PyResult<i64> {
    hashimoto::ci_genus(d1, d2).map_err(err)
}

/// Dimension of degree-`d` invariants; `model` is one of
/// `W4`, `U4`, `U2+U2`, `U2+U2'`, `I+W3`.
#[pyfunction]
fn invariant_dim(model: &str, d: u32) -> PyResult<usize> {
    let m: P3Model = model.parse().map_err(err)?;
    u4w3::invariant_dim(m, d).map_err(err)
}

#[pyfunction]
fn sym2_u4_decompose() -> PyResult<Vec<(&'static str, u32)>> {
    Ok(u4w3::sym2_u4_decompose().map_err(err)?.into_iter().filter(|(_, k)| *k > 0).collect())
}

fn plane_curve(p: &Poly) -> PyResult<PlaneCurve> {
    PlaneCurve::new(p.inner.clone()).map_err(err)
}

/// Singular points of a plane curve given by a form in three variables.
#[pyfunction]
fn singular_points_of<'py>(py: Python<'py>, curve: &Poly) -> PyResult<Bound<'py, PyDict>> {
    let r = singular_points(&plane_curve(curve)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("points", r.total_points)?;
    d.set_item("nodes", r.total_nodes)?;
    d.set_item("all_nodes", r.all_nodes)?;
    Ok(d)
}

/// `(p, value)` such that the curve restricted to a line is irreducible
/// mod `p`, or `None` if the search finds nothing.
#[pyfunction]
fn irreducibility_certificate(curve: &Poly) -> PyResult<Option<(u64, i64)>> {
    irreducibility_search(&plane_curve(curve)?).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (filter=None))]
fn list_claims<'py>(py: Python<'py>, filter: Option<&str>) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for c in verifier::list_claims(filter) {
        let d = PyDict::new(py);
        d.set_item("id", c.id)?;
        d.set_item("description", c.description)?;
        d.set_item("anchor", c.anchor.render())?;
        d.set_item("expected", c.expected)?;
        out.append(d)?;
    }
    Ok(out)
}

/// Runs the claims and returns the report in its JSON shape.
#[pyfunction]
#[pyo3(signature = (filter=None, jobs=1))]
fn run_claims<'py>(py: Python<'py>, filter: Option<String>, jobs: usize) -> PyResult<Bound<'py, PyAny>> {
    let report = py.detach(|| verifier::run(filter.as_deref(), jobs)).map_err(err)?;
    let text = verifier::render(&report, verifier::Format::Json);
    py.import("json")?.call_method1("loads", (text,))
}

#[pymodule]
pub fn icosa(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(pencil_member, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_through, m)?)?;
    m.add_function(wrap_pyfunction!(node_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(a5_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_representatives, m)?)?;
    m.add_function(wrap_pyfunction!(quadrics_through_rank, m)?)?;
    m.add_function(wrap_pyfunction!(ci_genus, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_dim, m)?)?;
    m.add_function(wrap_pyfunction!(sym2_u4_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(singular_points_of, m)?)?;
    m.add_function(wrap_pyfunction!(irreducibility_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(list_claims, m)?)?;
    m.add_function(wrap_pyfunction!(run_claims, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
