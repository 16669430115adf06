//! Python bindings. Structured results come back as plain dicts and lists;
//! exact rationals stay strings of the form `"n/d"`.

use std::sync::Arc;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyOSError, PyValueError};
use pyo3::prelude::*;

use circle_orbit::cli::{cmd_analyze, cmd_case_polys, cmd_orbit, cmd_scan, parse_precision, parse_triple};
use circle_orbit::exact::{parse_rational, IntPolynomial};
use circle_orbit::geometry::{self, GroupSpec};
use circle_orbit::polyclass::default_width;
use circle_orbit::quartic_ring::{self, RingElement, RingModulus};
use circle_orbit::rank3::{self, egyptian_parametrize, rank3_report, InnerProductTriple};
use circle_orbit::{Error, Limits};

create_exception!(circle_orbit_py, ResourceCapError, PyException);
create_exception!(circle_orbit_py, InvariantError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::ResourceCap { .. } => ResourceCapError::new_err(e.to_string()),
        Error::Invariant(_) => InvariantError::new_err(e.to_string()),
        Error::Io { .. } => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<PyObject> {
    let s = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

fn limits(cap: Option<u128>, workers: Option<usize>) -> PyResult<Limits> {
    let cap = match cap {
        Some(c) => c,
        None => circle_orbit::limits::cap_from_env().map_err(err)?,
    };
    Ok(Limits { cap, workers })
}

fn modulus(coeffs: Vec<BigInt>) -> PyResult<Arc<RingModulus>> {
    RingModulus::new(IntPolynomial::new(coeffs)).map_err(err)
}

fn ring_spec(coeffs: Vec<BigInt>, root: usize) -> PyResult<GroupSpec> {
    GroupSpec::ring(modulus(coeffs)?, root).map_err(err)
}

/// `Z[z]/(q)` for a monic `q` with unit constant term, coefficients lowest degree first.
#[pyclass(name = "RingModulus", frozen)]
struct PyRingModulus {
    inner: Arc<RingModulus>,
}

#[pymethods]
impl PyRingModulus {
    #[new]
    fn new(coeffs: Vec<BigInt>) -> PyResult<Self> {
        Ok(Self { inner: modulus(coeffs)? })
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.q().coeffs().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn element(&self, coeffs: Vec<BigInt>) -> PyResult<PyRingElement> {
        Ok(PyRingElement { inner: RingElement::new(&self.inner, coeffs).map_err(err)? })
    }

    fn alpha(&self) -> PyRingElement {
        PyRingElement { inner: RingElement::alpha(&self.inner) }
    }

    /// `α^m`, negative `m` allowed.
    fn power(&self, m: i64) -> PyResult<PyRingElement> {
        Ok(PyRingElement { inner: quartic_ring::power(&self.inner, m).map_err(err)? })
    }

    fn orbit(&self, m_min: i64, m_max: i64) -> PyResult<Vec<PyRingElement>> {
        let o = quartic_ring::orbit(&self.inner, m_min, m_max).map_err(err)?;
        Ok(o.elements.into_iter().map(|inner| PyRingElement { inner }).collect())
    }

    fn __repr__(&self) -> String {
        format!("RingModulus({})", self.inner.q())
    }
}

#[pyclass(name = "RingElement", frozen)]
struct PyRingElement {
    inner: RingElement,
}

#[pymethods]
impl PyRingElement {
    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.checked_add(&o.inner).map_err(err)? })
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.checked_sub(&o.inner).map_err(err)? })
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.ring_mul(&o.inner).map_err(err)? })
    }

    fn __neg__(&self) -> Self {
        Self { inner: -&self.inner }
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.inner == o.inner
    }

    /// The image under `α ↦ α⁻¹`.
    fn conjugate(&self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.conjugation().map_err(err)? })
    }

    /// `u·σ(u)`.
    fn circle_norm(&self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.circle_norm().map_err(err)? })
    }

    fn on_unit_circle(&self) -> PyResult<bool> {
        self.inner.on_unit_circle().map_err(err)
    }

    fn inverse(&self) -> Option<Self> {
        self.inner.ring_inverse().map(|inner| Self { inner })
    }

    fn __repr__(&self) -> String {
        format!("RingElement{:?}", self.inner)
    }
}

/// Inner products `α = (v₂,v₃)`, `β = (v₃,v₁)`, `γ = (v₁,v₂)` and radius `n`.
#[pyclass(name = "InnerProductTriple", frozen)]
struct PyTriple {
    inner: InnerProductTriple,
}

#[pymethods]
impl PyTriple {
    /// From the JSON object form, e.g. `{"d": 2, "alpha": [0, "7/10"], ...}`.
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        Ok(Self { inner: parse_triple(json).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn gram_residual(&self) -> PyResult<String> {
        let t = &self.inner;
        Ok(rank3::gram_residual(t.alpha(), t.beta(), t.gamma()).map_err(err)?.to_string())
    }

    #[pyo3(signature = (bound, cap=None, workers=None))]
    fn solutions(&self, bound: u64, cap: Option<u128>, workers: Option<usize>) -> PyResult<Vec<[i64; 3]>> {
        let s = rank3::enumerate_solutions(&self.inner, bound, &limits(cap, workers)?).map_err(err)?;
        Ok(s.all)
    }

    #[pyo3(signature = (schedule, cap=None, workers=None))]
    fn report(&self, py: Python<'_>, schedule: Vec<u64>, cap: Option<u128>, workers: Option<usize>) -> PyResult<PyObject> {
        let r = rank3_report(&self.inner, &schedule, &limits(cap, workers)?).map_err(err)?;
        to_py(py, &serde_json::to_value(&r).map_err(|e| PyValueError::new_err(e.to_string()))?)
    }

    fn __repr__(&self) -> String {
        format!("InnerProductTriple({})", self.inner.to_json())
    }
}

/// Signs, reciprocity, irreducibility, class and isolated roots of a polynomial.
#[pyfunction]
#[pyo3(signature = (coeffs, precision=None))]
fn classify(py: Python<'_>, coeffs: Vec<BigInt>, precision: Option<&str>) -> PyResult<PyObject> {
    let width = match precision {
        Some(p) => parse_precision(p).map_err(err)?,
        None => default_width(),
    };
    to_py(py, &cmd_analyze(&IntPolynomial::new(coeffs), &width).map_err(err)?)
}

#[pyfunction]
fn orbit(py: Python<'_>, coeffs: Vec<BigInt>, m_min: i64, m_max: i64) -> PyResult<PyObject> {
    to_py(py, &cmd_orbit(&IntPolynomial::new(coeffs), m_min, m_max).map_err(err)?)
}

/// Coefficient vectors in `[-B, B]^k` on the unit circle, in lexicographic order.
#[pyfunction]
#[pyo3(signature = (coeffs, bound, root=0, cap=None, workers=None))]
fn circle_points(
    coeffs: Vec<BigInt>,
    bound: u64,
    root: usize,
    cap: Option<u128>,
    workers: Option<usize>,
) -> PyResult<Vec<Vec<i64>>> {
    geometry::enumerate_circle_points(&ring_spec(coeffs, root)?, bound, &limits(cap, workers)?).map_err(err)
}

/// Unit-distance graph on the coefficient box, as the JSON export.
#[pyfunction]
#[pyo3(signature = (coeffs, bound, root=0, cap=None, workers=None))]
fn graph(
    py: Python<'_>,
    coeffs: Vec<BigInt>,
    bound: u64,
    root: usize,
    cap: Option<u128>,
    workers: Option<usize>,
) -> PyResult<PyObject> {
    let g = geometry::build_graph(&ring_spec(coeffs, root)?, bound, &limits(cap, workers)?).map_err(err)?;
    let v: serde_json::Value =
        serde_json::from_str(&geometry::graph_json(&g)).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// `(d, r, s, t)` with `x = dst, y = drt, z = drs`, `r + s + t = 0`.
#[pyfunction]
fn egyptian(x: i64, y: i64, z: i64) -> PyResult<(BigInt, BigInt, BigInt, BigInt)> {
    let p = egyptian_parametrize(x, y, z).map_err(err)?;
    Ok((p.d, p.r, p.s, p.t))
}

/// `p₁`, `p₂` and the repeated root for `(α,β,γ) = λ(a,b,c) + offset`.
#[pyfunction]
#[pyo3(signature = (abc, offset=None))]
fn case_polys(py: Python<'_>, abc: [BigInt; 3], offset: Option<[String; 3]>) -> PyResult<PyObject> {
    let offset = offset.unwrap_or_else(|| ["0".into(), "0".into(), "0".into()]);
    let [a, b, c] = offset.map(|s| parse_rational(&s));
    let offset = [a.map_err(err)?, b.map_err(err)?, c.map_err(err)?];
    to_py(py, &cmd_case_polys(&abc, &offset).map_err(err)?)
}

/// CSV classification of `z⁴+az³+bz²+az+1` for `|a|, |b| ≤ bound`.
#[pyfunction]
#[pyo3(signature = (bound, cap=None, workers=None))]
fn scan(bound: u64, cap: Option<u128>, workers: Option<usize>) -> PyResult<String> {
    cmd_scan(bound, &limits(cap, workers)?).map_err(err)
}

#[pymodule]
pub fn circle_orbit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRingModulus>()?;
    m.add_class::<PyRingElement>()?;
    m.add_class::<PyTriple>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(orbit, m)?)?;
    m.add_function(wrap_pyfunction!(circle_points, m)?)?;
    m.add_function(wrap_pyfunction!(graph, m)?)?;
    m.add_function(wrap_pyfunction!(egyptian, m)?)?;
    m.add_function(wrap_pyfunction!(case_polys, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add("ResourceCapError", m.py().get_type::<ResourceCapError>())?;
    m.add("InvariantError", m.py().get_type::<InvariantError>())?;
    Ok(())
}
