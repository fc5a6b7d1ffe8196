//! Python bindings. Structured results cross the boundary as JSON strings,
//! which callers decode with `json.loads`.

use hamsym::actions::{self, build_graph, toric_extensions};
use hamsym::algebra::{self, Characteristic, HomotopyType};
use hamsym::arith::Rational;
use hamsym::karshon::{canonical_form, to_dot, to_tikz};
use hamsym::report::build_report;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// A circle action S1(a,b;m) on the Hirzebruch surface with parameter lambda.
#[pyclass(name = "CircleAction", frozen)]
struct PyCircleAction {
    inner: actions::CircleAction,
}

#[pymethods]
impl PyCircleAction {
    #[new]
    fn new(a: i64, b: i64, m: u32, lambda: &str) -> PyResult<Self> {
        let lambda: Rational = lambda.parse().map_err(value_err)?;
        let inner = actions::CircleAction::new(a, b, m, lambda).map_err(value_err)?;
        Ok(PyCircleAction { inner })
    }

    #[getter]
    fn a(&self) -> i64 {
        self.inner.a()
    }

    #[getter]
    fn b(&self) -> i64 {
        self.inner.b()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn lambda(&self) -> String {
        self.inner.lambda().to_string()
    }

    #[getter]
    fn manifold(&self) -> &'static str {
        self.inner.manifold().name()
    }

    fn homotopy_type(&self) -> &'static str {
        algebra::classify_homotopy_type(&self.inner).name()
    }

    fn strata(&self) -> Vec<u32> {
        actions::strata_intersections(&self.inner)
    }

    fn codim(&self, s: u32) -> PyResult<u32> {
        actions::stratum_codimension(&self.inner, s).map_err(value_err)
    }

    fn weyl_orbit(&self) -> Vec<(i64, i64)> {
        actions::weyl_orbit(&self.inner)
    }

    /// Full report as JSON.
    fn classify(&self) -> PyResult<String> {
        build_report(&self.inner)
            .map(|r| to_json(&r))
            .map_err(|b| PyRuntimeError::new_err(b.0))
    }

    #[pyo3(signature = (format = "json", canonical = false))]
    fn graph(&self, format: &str, canonical: bool) -> PyResult<String> {
        let mut g = build_graph(&self.inner);
        if canonical {
            g = canonical_form(&g);
        }
        match format {
            "json" => Ok(to_json(&g)),
            "dot" => Ok(to_dot(&g)),
            "tikz" => Ok(to_tikz(&g)),
            other => Err(PyValueError::new_err(format!(
                "unknown format {other:?}, expected json, dot or tikz"
            ))),
        }
    }

    fn extensions(&self) -> String {
        to_json(&toric_extensions(&self.inner))
    }

    fn equivalent(&self, other: &PyCircleAction) -> PyResult<bool> {
        actions::are_equivalent(&self.inner, &other.inner).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "CircleAction({}, {}, {}, '{}')",
            self.inner.a(),
            self.inner.b(),
            self.inner.m(),
            self.inner.lambda()
        )
    }
}

fn characteristic(p: u64) -> PyResult<Characteristic> {
    Characteristic::new(p).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (homotopy_type, max_degree = 8, char = 0))]
fn homology_ranks(homotopy_type: &str, max_degree: usize, char: u64) -> PyResult<Vec<u64>> {
    let t: HomotopyType = homotopy_type.parse().map_err(value_err)?;
    Ok(algebra::homology_ranks(
        t,
        max_degree,
        characteristic(char)?,
    ))
}

#[pyfunction]
#[pyo3(signature = (char = 0))]
fn presentation(char: u64) -> PyResult<String> {
    Ok(to_json(&algebra::cohomology_presentation(characteristic(
        char,
    )?)))
}

/// Product of two algebra elements given as JSON maps from words to coefficients.
#[pyfunction]
fn pontryagin_multiply(u: &str, v: &str) -> PyResult<String> {
    let u: algebra::AlgebraElement = serde_json::from_str(u).map_err(value_err)?;
    let v: algebra::AlgebraElement = serde_json::from_str(v).map_err(value_err)?;
    Ok(to_json(&algebra::pontryagin_multiply(&u, &v)))
}

#[pymodule]
fn pyhamsym(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCircleAction>()?;
    m.add_function(wrap_pyfunction!(homology_ranks, m)?)?;
    m.add_function(wrap_pyfunction!(presentation, m)?)?;
    m.add_function(wrap_pyfunction!(pontryagin_multiply, m)?)?;
    Ok(())
}
