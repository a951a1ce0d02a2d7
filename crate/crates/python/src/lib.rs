//! Python bindings. Coefficients cross the boundary as `fractions.Fraction`;
//! inputs may be `int`, `Fraction` or `"n/d"` strings. Floats are rejected.

use chebknot_core::alexander::{self, TorusParams};
use chebknot_core::bridge::{self, SubstitutionContext};
use chebknot_core::chebgen::{self, ChebParams, Family};
use chebknot_core::format::{self, LaurentVar};
use chebknot_core::verify::{self, Ranges, Suite, DEFAULT_TRIG_SAMPLES};
use chebknot_core::{Degree, Error, LaurentPoly, Polynomial, Rational, VerificationReport};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyFloat, PyList};

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err("floats are not accepted; use int, Fraction or str"));
    }
    obj.str()?.to_string().parse().map_err(value_error)
}

fn to_fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = rs.iter().map(|r| to_fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(r).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.getattr("loads")?.call1((text,))
}

fn params(k: u32, h: u32, n: u32) -> PyResult<ChebParams> {
    ChebParams::new(k, h, n).map_err(value_error)
}

/// Dense polynomial in `x` with exact rational coefficients, lowest degree first.
#[pyclass(name = "Polynomial", module = "chebknot", frozen, eq)]
#[derive(PartialEq)]
struct PyPolynomial(Polynomial);

#[pymethods]
impl PyPolynomial {
    #[new]
    #[pyo3(signature = (coeffs = Vec::new()))]
    fn new(coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let cs = coeffs.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
        Ok(PyPolynomial(Polynomial::new(cs)))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        format::parse_json(s).map(PyPolynomial).map_err(value_error)
    }

    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.0.coeffs())
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        match self.0.degree() {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __call__<'py>(&self, py: Python<'py>, x: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.0.eval(&to_rational(x)?))
    }

    fn eval_float(&self, x: f64) -> f64 {
        self.0.eval_f64(x)
    }

    fn to_json(&self) -> String {
        format::render_json(&self.0)
    }

    fn to_latex(&self) -> String {
        format::render_latex(&self.0, "x")
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        PyPolynomial(&self.0 + &other.0)
    }

    fn __sub__(&self, other: PyRef<'_, Self>) -> Self {
        PyPolynomial(&self.0 - &other.0)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        PyPolynomial(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyPolynomial(-&self.0)
    }

    fn __str__(&self) -> String {
        format::render_text(&self.0, "x")
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", format::render_text(&self.0, "x"))
    }
}

/// Laurent polynomial in `u = q^{1/2}`: coefficient `i` multiplies `u^(min_exp + i)`.
#[pyclass(name = "LaurentPoly", module = "chebknot", frozen, eq)]
#[derive(PartialEq)]
struct PyLaurentPoly(LaurentPoly);

#[pymethods]
impl PyLaurentPoly {
    #[new]
    #[pyo3(signature = (min_exp = 0, coeffs = Vec::new()))]
    fn new(min_exp: i64, coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        let cs = coeffs.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
        Ok(PyLaurentPoly(LaurentPoly::new(min_exp, cs)))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        format::parse_laurent_json(s).map(PyLaurentPoly).map_err(value_error)
    }

    #[getter]
    fn min_exp(&self) -> i64 {
        self.0.min_exp()
    }

    #[getter]
    fn max_exp(&self) -> Option<i64> {
        self.0.max_exp()
    }

    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.0.coeffs())
    }

    /// Image under `u -> 1/u`.
    fn bar(&self) -> Self {
        PyLaurentPoly(self.0.bar())
    }

    /// Value at `u`; `None` when `u` is zero and negative powers occur.
    fn __call__<'py>(
        &self,
        py: Python<'py>,
        u: &Bound<'py, PyAny>,
    ) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.0.eval(&to_rational(u)?).map(|v| to_fraction(py, &v)).transpose()
    }

    fn to_json(&self) -> String {
        format::render_laurent_json(&self.0)
    }

    fn to_latex(&self) -> String {
        format::render_laurent_latex(&self.0)
    }

    /// Rendering in `u` rather than the default half-integer powers of `q`.
    fn to_u_string(&self) -> String {
        format::render_laurent_text(&self.0, LaurentVar::U)
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        PyLaurentPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: PyRef<'_, Self>) -> Self {
        PyLaurentPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        PyLaurentPoly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyLaurentPoly(-&self.0)
    }

    fn __truediv__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.div_exact(&other.0).map(PyLaurentPoly).map_err(value_error)
    }

    fn __str__(&self) -> String {
        format::render_laurent_text(&self.0, LaurentVar::Q)
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly({})", format::render_laurent_text(&self.0, LaurentVar::Q))
    }
}

#[pyfunction]
fn cheb_recurrence(k: u32, h: u32, n: u32) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial(chebgen::cheb_recurrence(params(k, h, n)?)))
}

#[pyfunction]
fn cheb_closed_form(k: u32, h: u32, n: u32) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial(chebgen::cheb_closed_form(params(k, h, n)?)))
}

#[pyfunction]
fn linear_combination_form(k: u32, h: u32, n: u32) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial(chebgen::linear_combination_form(params(k, h, n)?)))
}

/// `(A, B)` with `T_0 = A` and `T_1 = B x`.
#[pyfunction]
fn seeds<'py>(py: Python<'py>, k: u32, h: u32) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let s = chebgen::seeds(Family::new(k, h).map_err(value_error)?);
    Ok((to_fraction(py, &s.a)?, to_fraction(py, &s.b)?))
}

/// `(alpha, beta)` of the sine-ratio closed form.
#[pyfunction]
fn equidistant_coefficients<'py>(
    py: Python<'py>,
    k: u32,
    h: u32,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let c = chebgen::equidistant_coefficients(Family::new(k, h).map_err(value_error)?);
    Ok((to_fraction(py, &c.alpha)?, to_fraction(py, &c.beta)?))
}

#[pyfunction]
fn second_kind_basis(h: u32, n: i64) -> PyResult<PyPolynomial> {
    chebgen::second_kind_basis(h, n).map(PyPolynomial).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (k, h, n, samples = DEFAULT_TRIG_SAMPLES))]
fn trig_crosscheck(k: u32, h: u32, n: u32, samples: u32) -> PyResult<f64> {
    Ok(chebgen::trig_crosscheck(params(k, h, n)?, samples))
}

#[pyfunction]
fn torus_alexander(n: u64, l: u64) -> PyResult<PyLaurentPoly> {
    let t = TorusParams::new(n, l).map_err(value_error)?;
    alexander::torus_alexander(t).map(PyLaurentPoly).map_err(value_error)
}

#[pyfunction]
fn torus_knot_n2(n: u64) -> PyResult<PyLaurentPoly> {
    alexander::torus_knot_n2(n).map(PyLaurentPoly).map_err(value_error)
}

#[pyfunction]
fn torus_link_n2(n: u64) -> PyResult<PyLaurentPoly> {
    alexander::torus_link_n2(n).map(PyLaurentPoly).map_err(value_error)
}

#[pyfunction]
fn torus_n2(n: u64) -> PyResult<PyLaurentPoly> {
    alexander::torus_n2(n).map(PyLaurentPoly).map_err(value_error)
}

fn context(h: u32) -> PyResult<SubstitutionContext> {
    SubstitutionContext::new(h).map_err(value_error)
}

/// Substitutes `x = (h/2)(u + 1/u)`.
#[pyfunction]
fn substitute_x(p: PyRef<'_, PyPolynomial>, h: u32) -> PyResult<PyLaurentPoly> {
    Ok(PyLaurentPoly(bridge::substitute_x(&p.0, context(h)?)))
}

#[pyfunction]
fn inverse_substitute(p: PyRef<'_, PyLaurentPoly>, h: u32) -> PyResult<PyPolynomial> {
    bridge::inverse_substitute(&p.0, context(h)?).map(PyPolynomial).map_err(value_error)
}

#[pyfunction]
fn chebyshev_from_alexander(n: u64, h: u32) -> PyResult<PyPolynomial> {
    bridge::chebyshev_from_alexander(n, h).map(PyPolynomial).map_err(value_error)
}

#[pyfunction]
fn verify_t1h<'py>(py: Python<'py>, n: u64, h: u32) -> PyResult<Bound<'py, PyAny>> {
    report_dict(py, &bridge::verify_t1h(n, h).map_err(value_error)?)
}

#[pyfunction]
fn verify_t2h<'py>(py: Python<'py>, n: u64, h: u32) -> PyResult<Bound<'py, PyAny>> {
    report_dict(py, &bridge::verify_t2h(n, h).map_err(value_error)?)
}

#[pyfunction]
fn skein_family_check<'py>(py: Python<'py>, n: u64) -> PyResult<Bound<'py, PyAny>> {
    report_dict(py, &alexander::skein_family_check(n).map_err(value_error)?)
}

/// Runs a named suite (`"all"`, `"skein"`, `"bridge-t1h"`, ...) and returns
/// one report dict per identity.
#[pyfunction]
#[pyo3(signature = (suite = "all", k_max = 10, h_max = 10, n_max = 50, samples = DEFAULT_TRIG_SAMPLES))]
fn run_verify<'py>(
    py: Python<'py>,
    suite: &str,
    k_max: u32,
    h_max: u32,
    n_max: u32,
    samples: u32,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let ranges = Ranges { k_max, h_max, n_max, samples };
    let reports = py
        .detach(|| verify::run(suite, &ranges))
        .map_err(value_error)?;
    reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pymodule]
fn chebknot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyLaurentPoly>()?;
    m.add_function(wrap_pyfunction!(cheb_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(cheb_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(linear_combination_form, m)?)?;
    m.add_function(wrap_pyfunction!(seeds, m)?)?;
    m.add_function(wrap_pyfunction!(equidistant_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(second_kind_basis, m)?)?;
    m.add_function(wrap_pyfunction!(trig_crosscheck, m)?)?;
    m.add_function(wrap_pyfunction!(torus_alexander, m)?)?;
    m.add_function(wrap_pyfunction!(torus_knot_n2, m)?)?;
    m.add_function(wrap_pyfunction!(torus_link_n2, m)?)?;
    m.add_function(wrap_pyfunction!(torus_n2, m)?)?;
    m.add_function(wrap_pyfunction!(substitute_x, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_substitute, m)?)?;
    m.add_function(wrap_pyfunction!(chebyshev_from_alexander, m)?)?;
    m.add_function(wrap_pyfunction!(verify_t1h, m)?)?;
    m.add_function(wrap_pyfunction!(verify_t2h, m)?)?;
    m.add_function(wrap_pyfunction!(skein_family_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
