//! Python bindings for the exact relative Gromov-Witten invariant library.
//!
//! Exact rationals cross the boundary as `"p/q"` strings (wrap them in
//! `fractions.Fraction` on the Python side); polynomials are exposed as
//! [`Poly`] objects with expanded monomial terms.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use relgw::chambers::{self, MultiPoly, PointLocation};
use relgw::invariants::{self, LatticePoint, MarkSet};
use relgw::series;
use relgw::Error;

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point(x: Vec<u32>, y: u32) -> PyResult<LatticePoint> {
    LatticePoint::new(x, y).map_err(value_error)
}

fn mark_set(indices: &[usize], m: usize) -> PyResult<MarkSet> {
    MarkSet::from_one_based(indices, m).map_err(value_error)
}

/// Sparse polynomial in `x_1, ..., x_m, y` with exact rational
/// coefficients.
#[pyclass]
struct Poly {
    inner: MultiPoly,
}

#[pymethods]
impl Poly {
    /// Number of `x` variables.
    fn marks(&self) -> usize {
        self.inner.marks()
    }

    fn degree(&self) -> u32 {
        self.inner.total_degree()
    }

    /// Terms as `(exponents, coefficient)` pairs, highest degree first.
    /// Exponent vectors list the powers of `x_1..x_m` and then `y`.
    fn terms(&self) -> Vec<(Vec<u32>, String)> {
        let mut out: Vec<(Vec<u32>, String)> = self
            .inner
            .terms()
            .map(|(exps, coeff)| (exps.to_vec(), coeff.to_string()))
            .collect();
        out.reverse();
        out
    }

    /// Exact evaluation at integer coordinates; returns a rational string.
    fn eval(&self, x: Vec<u32>, y: u32) -> PyResult<String> {
        if x.len() != self.inner.marks() {
            return Err(PyValueError::new_err(format!(
                "expected {} coordinates, got {}",
                self.inner.marks(),
                x.len()
            )));
        }
        Ok(self.inner.eval(&x, y).to_string())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.inner)
    }

    fn __eq__(&self, other: &Poly) -> bool {
        self.inner == other.inner
    }
}

/// The invariant `F(x_1,...,x_m,y)` as an exact rational string.
#[pyfunction]
fn f_value(x: Vec<u32>, y: u32) -> PyResult<String> {
    let p = point(x, y)?;
    Ok(invariants::f_value(&p).map_err(value_error)?.to_string())
}

/// Independent evaluation of `F` through the localization-graph sum.
#[pyfunction]
fn f_graph_oracle(x: Vec<u32>, y: u32) -> PyResult<String> {
    let p = point(x, y)?;
    Ok(invariants::f_graph_oracle(&p)
        .map_err(value_error)?
        .to_string())
}

/// The coefficient extraction `R_I` for the 1-based subset `marks`.
#[pyfunction]
fn r_i_series_value(x: Vec<u32>, y: u32, marks: Vec<usize>) -> PyResult<String> {
    let p = point(x, y)?;
    let subset = mark_set(&marks, p.m())?;
    Ok(invariants::r_i_series_value(&p, subset)
        .map_err(value_error)?
        .to_string())
}

/// Exponent of the equivariant parameter: `1 + sum(x) - y`.
#[pyfunction]
fn t_exponent(x: Vec<u32>, y: u32) -> PyResult<i64> {
    Ok(point(x, y)?.t_exponent())
}

/// Descendant value `d^{m-2} / (l_1! ... l_m!)` with `d = 1 + sum(l)`.
#[pyfunction]
fn descendant_value(l: Vec<u32>) -> PyResult<String> {
    if l.is_empty() {
        return Err(PyValueError::new_err("need at least one insertion"));
    }
    Ok(invariants::descendant_value(&l).to_string())
}

/// Coefficients of the tree function `W(q)` through `q^order`.
#[pyfunction]
fn tree_series(order: usize) -> Vec<String> {
    series::tree_series(order)
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect()
}

/// Closed form `[q^mu] W^a e^{-mu W} / (1-W)^b` as a rational string.
#[pyfunction]
fn comb_coeff(a: u64, mu: u64, b: u64) -> PyResult<String> {
    if b == 0 {
        return Err(PyValueError::new_err("comb_coeff needs b >= 1"));
    }
    Ok(series::comb_coeff(a, mu, b).to_string())
}

/// Classifies a point against the resonance walls. Returns a dict with
/// `kind` (`"interior"` or `"wall"`), `below` (1-based subsets) and, on a
/// wall, the touched `walls`.
#[pyfunction]
fn chamber_of<'py>(py: Python<'py>, x: Vec<u32>, y: u32) -> PyResult<Bound<'py, PyDict>> {
    let p = point(x, y)?;
    let location = chambers::chamber_of(&p).map_err(value_error)?;
    let dict = PyDict::new(py);
    match location {
        PointLocation::Interior(sig) => {
            dict.set_item("kind", "interior")?;
            let below: Vec<Vec<usize>> = sig.below().iter().map(|s| s.one_based()).collect();
            dict.set_item("below", below)?;
        }
        PointLocation::OnWall { below, walls } => {
            dict.set_item("kind", "wall")?;
            let below: Vec<Vec<usize>> = below.iter().map(|s| s.one_based()).collect();
            let walls: Vec<Vec<usize>> = walls.iter().map(|s| s.one_based()).collect();
            dict.set_item("below", below)?;
            dict.set_item("walls", walls)?;
        }
    }
    Ok(dict)
}

/// Polynomial form of `R_I` for the 1-based subset `marks`
/// (`|I| <= m - 2`).
#[pyfunction]
fn r_i_poly(m: usize, marks: Vec<usize>) -> PyResult<Poly> {
    let subset = mark_set(&marks, m)?;
    Ok(Poly {
        inner: chambers::r_i_poly(m, subset).map_err(value_error)?,
    })
}

/// Wall-crossing polynomial across `sum_{i in I} x_i = y`.
#[pyfunction]
fn wall_crossing_poly(m: usize, marks: Vec<usize>) -> PyResult<Poly> {
    let subset = mark_set(&marks, m)?;
    Ok(Poly {
        inner: chambers::wall_crossing_poly(m, subset).map_err(value_error)?,
    })
}

/// Closed form on the totally negative chamber.
#[pyfunction]
fn totally_negative_poly(m: usize) -> PyResult<Poly> {
    Ok(Poly {
        inner: chambers::totally_negative_poly(m).map_err(value_error)?,
    })
}

/// Chamber polynomial for the signature whose below-resonances are the
/// given 1-based subsets.
#[pyfunction]
fn chamber_poly(m: usize, below: Vec<Vec<usize>>) -> PyResult<Poly> {
    let mut set = std::collections::BTreeSet::new();
    for marks in &below {
        set.insert(mark_set(marks, m)?);
    }
    let sig = chambers::ChamberSig::new(m, set).map_err(value_error)?;
    Ok(Poly {
        inner: chambers::chamber_poly(&sig),
    })
}

/// Chamber signatures realized by lattice points with coordinates at most
/// `bound`, as dicts with `below` and a `witness`.
#[pyfunction]
fn enumerate_chambers<'py>(
    py: Python<'py>,
    m: usize,
    bound: u32,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let chambers = chambers::enumerate_chambers(m, bound).map_err(value_error)?;
    let mut out = Vec::with_capacity(chambers.len());
    for (sig, witness) in chambers {
        let dict = PyDict::new(py);
        let below: Vec<Vec<usize>> = sig.below().iter().map(|s| s.one_based()).collect();
        dict.set_item("below", below)?;
        dict.set_item("witness_x", witness.x().to_vec())?;
        dict.set_item("witness_y", witness.y())?;
        out.push(dict);
    }
    Ok(out)
}

#[pymodule]
fn relgw_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(f_value, m)?)?;
    m.add_function(wrap_pyfunction!(f_graph_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(r_i_series_value, m)?)?;
    m.add_function(wrap_pyfunction!(t_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(descendant_value, m)?)?;
    m.add_function(wrap_pyfunction!(tree_series, m)?)?;
    m.add_function(wrap_pyfunction!(comb_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(chamber_of, m)?)?;
    m.add_function(wrap_pyfunction!(r_i_poly, m)?)?;
    m.add_function(wrap_pyfunction!(wall_crossing_poly, m)?)?;
    m.add_function(wrap_pyfunction!(totally_negative_poly, m)?)?;
    m.add_function(wrap_pyfunction!(chamber_poly, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_chambers, m)?)?;
    Ok(())
}
