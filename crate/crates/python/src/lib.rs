//! Python bindings: the main types (partitions, tableaux, permutations,
//! q-polynomials) and the class-level maj range operations, exposed as the
//! `invmaj_py` extension module.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use invmaj::majrange::{self, EnumerationMethod, GapAnnotation, TraceEntry};
use invmaj::partition::Partition;
use invmaj::permutation::{self, Permutation};
use invmaj::qpoly;
use invmaj::tableau::{self, StandardTableau};

fn value_err(e: invmaj::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An integer partition / Young diagram.
#[pyclass(name = "Partition", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPartition {
    inner: Partition,
}

#[pymethods]
impl PyPartition {
    /// Accepts a list of parts or the bracket text form "[4,3,1,1]".
    #[new]
    fn new(parts: Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(text) = parts.extract::<String>() {
            text.parse().map_err(value_err)?
        } else {
            let parts: Vec<usize> = parts.extract()?;
            Partition::new(parts).map_err(value_err)?
        };
        Ok(PyPartition { inner })
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn conjugate(&self) -> PyPartition {
        PyPartition {
            inner: self.inner.conjugate(),
        }
    }

    fn b_stat(&self) -> u64 {
        self.inner.b_stat()
    }

    fn odd_column_count(&self) -> usize {
        self.inner.odd_column_count()
    }

    fn hook_length(&self, row: usize, col: usize) -> PyResult<usize> {
        self.inner
            .hook_length(invmaj::partition::Cell::new(row, col))
            .map_err(value_err)
    }

    /// "not_hook", "odd_hook", or "even_hook".
    fn hook_classification(&self) -> PyResult<&'static str> {
        if self.inner.is_empty() {
            return Err(PyValueError::new_err("empty shape"));
        }
        Ok(match self.inner.hook_classification() {
            invmaj::partition::HookClass::NotHook => "not_hook",
            invmaj::partition::HookClass::OddHook => "odd_hook",
            invmaj::partition::HookClass::EvenHook => "even_hook",
        })
    }

    fn is_rectangle(&self) -> bool {
        self.inner.is_rectangle()
    }

    fn dominance_leq(&self, other: &PyPartition) -> PyResult<bool> {
        self.inner.dominance_leq(&other.inner).map_err(value_err)
    }

    fn count_syt(&self) -> BigUint {
        tableau::count_syt(&self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyPartition) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }
}

/// A standard Young tableau.
#[pyclass(name = "StandardTableau", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyStandardTableau {
    inner: StandardTableau,
}

#[pymethods]
impl PyStandardTableau {
    /// Accepts a list of rows or the text form "1,4,5,6/2,7,9/3/8".
    #[new]
    fn new(rows: Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(text) = rows.extract::<String>() {
            text.parse().map_err(value_err)?
        } else {
            let rows: Vec<Vec<usize>> = rows.extract()?;
            StandardTableau::new(rows).map_err(value_err)?
        };
        Ok(PyStandardTableau { inner })
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.rows().to_vec()
    }

    #[getter]
    fn shape(&self) -> PyPartition {
        PyPartition {
            inner: self.inner.shape().clone(),
        }
    }

    fn descent_set(&self) -> Vec<usize> {
        self.inner.descent_set()
    }

    fn maj(&self) -> u64 {
        self.inner.maj()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("StandardTableau('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyStandardTableau) -> bool {
        self.inner == other.inner
    }
}

/// A permutation in one-line notation.
#[pyclass(name = "Permutation", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPermutation {
    inner: Permutation,
}

#[pymethods]
impl PyPermutation {
    /// Accepts a list of images or text: "5,3,2,1,4,7,6", "53214",
    /// or cycles "(1 2)(3 4)".
    #[new]
    fn new(word: Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(text) = word.extract::<String>() {
            text.parse().map_err(value_err)?
        } else {
            let word: Vec<usize> = word.extract()?;
            Permutation::new(word).map_err(value_err)?
        };
        Ok(PyPermutation { inner })
    }

    #[staticmethod]
    fn identity(n: usize) -> PyPermutation {
        PyPermutation {
            inner: Permutation::identity(n),
        }
    }

    #[getter]
    fn word(&self) -> Vec<usize> {
        self.inner.word().to_vec()
    }

    fn descent_set(&self) -> Vec<usize> {
        self.inner.descent_set()
    }

    fn maj(&self) -> u64 {
        self.inner.maj()
    }

    fn inverse(&self) -> PyPermutation {
        PyPermutation {
            inner: self.inner.inverse(),
        }
    }

    fn fixed_point_count(&self) -> usize {
        self.inner.fixed_point_count()
    }

    fn is_involution(&self) -> bool {
        self.inner.is_involution()
    }

    /// The RSK image as a pair (P, Q) of standard tableaux.
    fn rsk(&self) -> (PyStandardTableau, PyStandardTableau) {
        let pair = self.inner.rsk();
        (
            PyStandardTableau {
                inner: pair.p().clone(),
            },
            PyStandardTableau {
                inner: pair.q().clone(),
            },
        )
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyPermutation) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// An integer polynomial in q.
#[pyclass(name = "QPolynomial", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyQPolynomial {
    inner: qpoly::QPolynomial,
}

#[pymethods]
impl PyQPolynomial {
    #[new]
    fn new(coefficients: Vec<BigInt>) -> PyQPolynomial {
        PyQPolynomial {
            inner: qpoly::QPolynomial::from_coeffs(coefficients),
        }
    }

    /// Dense coefficient list, index = exponent.
    #[getter]
    fn coefficients(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn min_degree(&self) -> Option<usize> {
        self.inner.min_degree()
    }

    fn evaluate_at_one(&self) -> BigInt {
        self.inner.evaluate_at_one()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QPolynomial('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyQPolynomial) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyQPolynomial) -> PyQPolynomial {
        PyQPolynomial {
            inner: &self.inner + &other.inner,
        }
    }

    fn __mul__(&self, other: &PyQPolynomial) -> PyQPolynomial {
        PyQPolynomial {
            inner: &self.inner * &other.inner,
        }
    }
}

/// All partitions of n, largest-first.
#[pyfunction]
fn partitions(n: usize) -> Vec<PyPartition> {
    invmaj::partition::enumerate_partitions(n)
        .map(|p| PyPartition { inner: p })
        .collect()
}

/// The partitions of n with exactly r odd columns.
#[pyfunction]
fn shapes_with_odd_columns(n: usize, r: usize) -> Vec<PyPartition> {
    invmaj::partition::enumerate_shapes_with_odd_columns(n, r)
        .map(|p| PyPartition { inner: p })
        .collect()
}

/// Every standard tableau of the shape (small shapes only; the list is
/// materialized).
#[pyfunction]
fn standard_tableaux(shape: &PyPartition) -> Vec<PyStandardTableau> {
    tableau::enumerate_syt(&shape.inner)
        .map(|t| PyStandardTableau { inner: t })
        .collect()
}

/// maj value -> number of standard tableaux of the shape attaining it.
#[pyfunction]
fn maj_histogram(shape: &PyPartition) -> BTreeMap<u64, BigUint> {
    tableau::maj_histogram(&shape.inner)
}

/// `q^{b(shape)} [n]_q! / prod [hook]_q`: the maj generating polynomial.
#[pyfunction]
fn stanley_maj_poly(shape: &PyPartition) -> PyQPolynomial {
    PyQPolynomial {
        inner: qpoly::stanley_maj_poly(&shape.inner),
    }
}

#[pyfunction]
fn q_int(n: usize) -> PyQPolynomial {
    PyQPolynomial {
        inner: qpoly::q_int(n),
    }
}

#[pyfunction]
fn q_factorial(n: usize) -> PyQPolynomial {
    PyQPolynomial {
        inner: qpoly::q_factorial(n),
    }
}

/// The involutions of S_n, optionally restricted to r fixed points.
#[pyfunction]
#[pyo3(signature = (n, r=None))]
fn involutions(n: usize, r: Option<usize>) -> Vec<PyPermutation> {
    permutation::enumerate_involutions(n, r)
        .map(|p| PyPermutation { inner: p })
        .collect()
}

/// Inverse of the RSK map on a pair of same-shape standard tableaux.
#[pyfunction]
fn rsk_inverse(p: &PyStandardTableau, q: &PyStandardTableau) -> PyResult<PyPermutation> {
    let pair =
        permutation::TableauPair::new(p.inner.clone(), q.inner.clone()).map_err(value_err)?;
    Ok(PyPermutation {
        inner: permutation::rsk_inverse(&pair),
    })
}

/// (min, max) of maj over the standard tableaux of the shape.
#[pyfunction]
fn shape_bounds(shape: &PyPartition) -> (u64, u64) {
    let bounds = majrange::shape_bounds(&shape.inner);
    (bounds.m, bounds.big_m)
}

/// Class-level extrema with their attaining shapes, as a dict.
#[pyfunction]
fn class_bounds<'py>(py: Python<'py>, n: usize, r: usize) -> PyResult<Bound<'py, PyDict>> {
    let class = majrange::class_bounds(n, r).map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item("n", n)?;
    dict.set_item("r", r)?;
    dict.set_item("min", class.bounds.m)?;
    dict.set_item("max", class.bounds.big_m)?;
    dict.set_item(
        "min_shape",
        PyPartition {
            inner: class.min_shape,
        },
    )?;
    dict.set_item(
        "max_shape",
        PyPartition {
            inner: class.max_shape,
        },
    )?;
    Ok(dict)
}

/// The values strictly inside the class range that are never attained.
#[pyfunction]
fn missing_values(n: usize, r: usize) -> PyResult<Vec<u64>> {
    Ok(majrange::missing_values(n, r)
        .map_err(value_err)?
        .into_iter()
        .collect())
}

fn annotation_code(a: &GapAnnotation) -> String {
    match a {
        GapAnnotation::BenignBoundary => "benign_boundary".into(),
        GapAnnotation::ExpectedGap { missing } => format!("expected_gap:{missing}"),
        GapAnnotation::RectangleStart { missing } => format!("rectangle_start:{missing}"),
    }
}

fn entry_dict<'py>(py: Python<'py>, entry: &TraceEntry) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("index", entry.index)?;
    dict.set_item(
        "shape",
        PyPartition {
            inner: entry.shape.clone(),
        },
    )?;
    dict.set_item("min", entry.bounds.m)?;
    dict.set_item("max", entry.bounds.big_m)?;
    dict.set_item("step", entry.step_used.code())?;
    dict.set_item(
        "annotations",
        entry
            .annotations
            .iter()
            .map(annotation_code)
            .collect::<Vec<_>>(),
    )?;
    Ok(dict)
}

/// The traversal from the minimum shape to the terminal hook, one dict
/// per visited shape.
#[pyfunction]
fn algorithm_trace<'py>(py: Python<'py>, n: usize, r: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    majrange::algorithm_trace(n, r)
        .map_err(value_err)?
        .map(|entry| entry_dict(py, &entry))
        .collect()
}

/// Exhaustively checks the predicted maj range of the class (n, r).
/// `method` is "syt" or "involutions".
#[pyfunction]
#[pyo3(signature = (n, r, method="syt"))]
fn verify_theorem<'py>(
    py: Python<'py>,
    n: usize,
    r: usize,
    method: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let method = match method {
        "syt" => EnumerationMethod::Syt,
        "involutions" => EnumerationMethod::Involutions,
        other => {
            return Err(PyValueError::new_err(format!(
                "method must be 'syt' or 'involutions', got '{other}'"
            )))
        }
    };
    let report = majrange::verify_theorem(n, r, method);
    let dict = PyDict::new(py);
    dict.set_item("n", report.n)?;
    dict.set_item("k", report.k)?;
    dict.set_item("r", report.r)?;
    dict.set_item("predicted_min", report.predicted_min)?;
    dict.set_item("predicted_max", report.predicted_max)?;
    dict.set_item(
        "predicted_missing",
        report.predicted_missing.iter().copied().collect::<Vec<_>>(),
    )?;
    dict.set_item(
        "observed_values",
        report.observed_values.iter().copied().collect::<Vec<_>>(),
    )?;
    dict.set_item("verdict", report.verdict)?;
    dict.set_item(
        "method",
        match report.method {
            EnumerationMethod::Syt => "syt",
            EnumerationMethod::Involutions => "involutions",
        },
    )?;
    dict.set_item("empty_class", report.empty_class)?;
    Ok(dict)
}

#[pymodule]
fn invmaj_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyStandardTableau>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyQPolynomial>()?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(shapes_with_odd_columns, m)?)?;
    m.add_function(wrap_pyfunction!(standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(maj_histogram, m)?)?;
    m.add_function(wrap_pyfunction!(stanley_maj_poly, m)?)?;
    m.add_function(wrap_pyfunction!(q_int, m)?)?;
    m.add_function(wrap_pyfunction!(q_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(involutions, m)?)?;
    m.add_function(wrap_pyfunction!(rsk_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(shape_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(class_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(missing_values, m)?)?;
    m.add_function(wrap_pyfunction!(algorithm_trace, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    Ok(())
}
