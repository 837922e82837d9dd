//! Python bindings. Exact rationals cross the boundary as `"p/q"` strings,
//! which `fractions.Fraction` parses directly.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::ellipse_cf as ecf;
use ::ellipse_cf::harness;
use ::ellipse_cf::{Approximant, EllipseAxes, PerturbationSpec, Rational};

fn err(e: ecf::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn parse_rational(s: &str) -> PyResult<Rational> {
    s.parse().map_err(err)
}

/// An approximation to the normalized perimeter E(x).
#[pyclass(name = "Approximant", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyApproximant {
    inner: Approximant,
}

#[pymethods]
impl PyApproximant {
    /// Parse a method name: `r1`, `r2`, `a1`, `a2`, `cantrell`,
    /// `cantrell:p,k`, `series:N`, `cf:depth` or `cf:depth,tail`.
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(Self { inner: name.parse().map_err(err)? })
    }

    /// The benchmark set r1, r2, cantrell, a1, a2.
    #[staticmethod]
    fn benchmark_set() -> Vec<Self> {
        Approximant::benchmark_set().into_iter().map(|inner| Self { inner }).collect()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    fn eval(&self, x: f64) -> PyResult<f64> {
        self.inner.eval(x).map_err(err)
    }

    /// Perimeter of the ellipse with semi-axes `a`, `b`.
    fn perimeter(&self, a: f64, b: f64) -> PyResult<f64> {
        let axes = EllipseAxes::new(a, b).map_err(err)?;
        ecf::perimeter(&axes, &self.inner).map_err(err)
    }

    /// First `order` exact Maclaurin coefficients.
    fn series(&self, order: usize) -> PyResult<Vec<String>> {
        let s = ecf::series_of(&self.inner, order).map_err(err)?;
        Ok(strings(s.coefficients()))
    }

    /// Leading coefficients shared with E(x), checked below x^max_order.
    #[pyo3(signature = (max_order = harness::DEFAULT_MATCH_ORDER))]
    fn match_depth(&self, max_order: usize) -> PyResult<usize> {
        harness::match_depth(&self.inner, max_order).map_err(err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Approximant('{}')", self.inner)
    }
}

/// Exact coefficients c_0..c_{terms-1} of E(x).
#[pyfunction]
fn e_coefficients(terms: usize) -> PyResult<Vec<String>> {
    Ok(strings(ecf::e_coefficients(terms).map_err(err)?.coefficients()))
}

/// Partial numerators a_1..a_depth of the continued fraction of E(x).
#[pyfunction]
fn cf_numerators(depth: usize) -> PyResult<Vec<String>> {
    let s = ecf::e_coefficients(depth + 1).map_err(err)?;
    Ok(strings(ecf::viscovatov(&s, depth).map_err(err)?.partial_numerators()))
}

/// Continued fraction of an arbitrary series given as rational strings.
#[pyfunction]
fn viscovatov(coefficients: Vec<String>, depth: usize) -> PyResult<Vec<String>> {
    let c = coefficients.iter().map(|s| parse_rational(s)).collect::<PyResult<Vec<_>>>()?;
    let s = ecf::PowerSeries::new(c).map_err(err)?;
    Ok(strings(ecf::viscovatov(&s, depth).map_err(err)?.partial_numerators()))
}

/// Continued-fraction display of E(x): `normalized` or `integer4`.
#[pyfunction]
#[pyo3(signature = (depth, display = "normalized"))]
fn cf_display(depth: usize, display: &str) -> PyResult<String> {
    let cf = ecf::viscovatov(&ecf::e_coefficients(depth + 1).map_err(err)?, depth).map_err(err)?;
    match display {
        "normalized" => Ok(cf.display_normalized()),
        "integer4" => Ok(cf.display_integer4()),
        other => Err(PyValueError::new_err(format!("unknown display '{other}'"))),
    }
}

/// Value of the periodic tail T = c x / (1 + T).
#[pyfunction]
fn periodic_tail(c: &str, x: f64) -> PyResult<f64> {
    ecf::periodic_tail(&parse_rational(c)?, x).map_err(err)
}

/// `((a - b)/(a + b))^2`.
#[pyfunction]
fn x_param(a: f64, b: f64) -> PyResult<f64> {
    Ok(EllipseAxes::new(a, b).map_err(err)?.x())
}

/// E(x) summed over `terms` terms.
#[pyfunction]
#[pyo3(signature = (x, terms = ecf::series::DEFAULT_ORDER))]
fn ground_truth(x: f64, terms: usize) -> PyResult<f64> {
    harness::ground_truth(x, terms).map_err(err)
}

/// Adaptive quadrature perimeter: `(value, estimated_error, evaluations)`.
#[pyfunction]
#[pyo3(signature = (a, b, tol = harness::DEFAULT_TOL))]
fn quadrature_perimeter(a: f64, b: f64, tol: f64) -> PyResult<(f64, f64, usize)> {
    let r = harness::quadrature_perimeter(a, b, tol).map_err(err)?;
    Ok((r.value, r.estimated_error, r.evaluations))
}

/// Solve for k in the radicand 4 - 3x + k x^m so the x^n coefficient of the
/// corrected R2 matches E(x). Returns a dict of exact strings.
#[pyfunction]
#[pyo3(signature = (m = 4, n = None))]
fn solve_k(py: Python<'_>, m: usize, n: Option<usize>) -> PyResult<Py<pyo3::types::PyDict>> {
    use pyo3::types::PyDict;
    let spec = PerturbationSpec::new(Approximant::R2, m, n.unwrap_or(m + 1)).map_err(err)?;
    let target = ecf::e_coefficients(spec.target_order() + 2).map_err(err)?;
    let sol = ecf::solve_radicand_correction(&spec, &target).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("k", sol.k.to_string())?;
    d.set_item("slope", sol.slope.to_string())?;
    d.set_item("baseline", sol.baseline.to_string())?;
    d.set_item("matched_terms", sol.matched_terms())?;
    Ok(d.unbind())
}

/// `(label, max_relative_error, argmax_x)`.
type Summary = (String, f64, f64);

/// Relative-error sweep. Returns `(csv_text, [(label, max_relerr, argmax_x)])`.
#[pyfunction]
#[pyo3(signature = (grid, methods, terms = ecf::series::DEFAULT_ORDER))]
fn sweep(
    grid: Vec<f64>,
    methods: Vec<PyApproximant>,
    terms: usize,
) -> PyResult<(String, Vec<Summary>)> {
    let methods: Vec<Approximant> = methods.into_iter().map(|m| m.inner).collect();
    let report = harness::sweep(&grid, &methods, terms).map_err(err)?;
    let csv = harness::to_csv_string(&report).map_err(err)?;
    let summary = report
        .summaries()
        .into_iter()
        .map(|(m, s)| (m.label(), s.max_relative_error, s.argmax_x))
        .collect();
    Ok((csv, summary))
}

#[pymodule]
fn ellipse_cf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyApproximant>()?;
    m.add_function(wrap_pyfunction!(e_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(cf_numerators, m)?)?;
    m.add_function(wrap_pyfunction!(viscovatov, m)?)?;
    m.add_function(wrap_pyfunction!(cf_display, m)?)?;
    m.add_function(wrap_pyfunction!(periodic_tail, m)?)?;
    m.add_function(wrap_pyfunction!(x_param, m)?)?;
    m.add_function(wrap_pyfunction!(ground_truth, m)?)?;
    m.add_function(wrap_pyfunction!(quadrature_perimeter, m)?)?;
    m.add_function(wrap_pyfunction!(solve_k, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
