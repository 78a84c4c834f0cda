//! Python bindings: `import reciprocity`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyString;

use reciprocity_core as core;
use reciprocity_core::{IntPoly, OddPrime, ResultantMethod, SuiteConfig};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn odd_prime(p: u64) -> PyResult<OddPrime> {
    OddPrime::new(p).map_err(value_err)
}

fn to_json<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (s,))
}

/// Polynomial with integer coefficients.
///
/// `Poly("x^2 + 1")` or `Poly([1, 0, 1])` (coefficients in ascending order).
#[pyclass(name = "Poly", module = "reciprocity", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Poly(IntPoly);

#[pymethods]
impl Poly {
    #[new]
    fn new(source: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = source.cast::<PyString>() {
            return core::parse_poly(s.to_str()?).map(Poly).map_err(value_err);
        }
        let coeffs: Vec<BigInt> = source.extract()?;
        Ok(Poly(IntPoly::new(coeffs)))
    }

    /// Coefficients, constant term first.
    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn is_monic(&self) -> bool {
        self.0.is_monic()
    }

    fn is_reciprocal(&self) -> PyResult<bool> {
        core::is_reciprocal(&self.0).map_err(value_err)
    }

    fn eval(&self, a: BigInt) -> BigInt {
        self.0.eval(&a)
    }

    fn __call__(&self, a: BigInt) -> BigInt {
        self.0.eval(&a)
    }

    /// Quotient and remainder on division by a monic polynomial.
    fn divrem(&self, divisor: &Poly) -> PyResult<(Poly, Poly)> {
        let (q, r) = self.0.divrem_monic(&divisor.0).map_err(value_err)?;
        Ok((Poly(q), Poly(r)))
    }

    fn reduce_mod(&self, n: u64) -> PyResult<Poly> {
        let m = core::Modulus::new(n).map_err(value_err)?;
        Ok(Poly(self.0.reduce_mod(m)))
    }

    fn __add__(&self, rhs: &Poly) -> Poly {
        Poly(&self.0 + &rhs.0)
    }

    fn __sub__(&self, rhs: &Poly) -> Poly {
        Poly(&self.0 - &rhs.0)
    }

    fn __mul__(&self, rhs: &Poly) -> Poly {
        Poly(&self.0 * &rhs.0)
    }

    fn __neg__(&self) -> Poly {
        Poly(-&self.0)
    }

    fn __pow__(&self, e: u32, modulo: Option<u64>) -> PyResult<Poly> {
        match modulo {
            None => Ok(Poly(self.0.pow(e))),
            Some(_) => Err(PyValueError::new_err("modular pow is not supported")),
        }
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }
}

#[pyfunction]
#[pyo3(signature = (f, g, method = "barnett"))]
fn resultant(f: &Poly, g: &Poly, method: &str) -> PyResult<BigInt> {
    let method: ResultantMethod = method.parse().map_err(value_err)?;
    core::resultant(&f.0, &g.0, method).map_err(value_err)
}

#[pyfunction]
fn reciprocant(f: &Poly, g: &Poly) -> PyResult<BigInt> {
    core::reciprocant(&f.0, &g.0).map_err(value_err)
}

#[pyfunction]
fn trace_poly(g: &Poly) -> PyResult<Poly> {
    core::trace_poly(&g.0).map(Poly).map_err(value_err)
}

#[pyfunction]
fn expand_trace(h: &Poly, m: usize) -> PyResult<Poly> {
    core::expand_trace(&h.0, m).map(Poly).map_err(value_err)
}

#[pyfunction]
fn gn(n: u64) -> PyResult<Poly> {
    core::gn(n).map(Poly).map_err(value_err)
}

#[pyfunction]
fn gn_sharp(n: u64) -> PyResult<Poly> {
    core::gn_sharp(n).map(Poly).map_err(value_err)
}

#[pyfunction]
fn hn(n: usize) -> Poly {
    Poly(core::hn_poly(n))
}

#[pyfunction]
fn lucas(n: usize) -> Poly {
    Poly(core::lucas_poly(n))
}

/// `Res(g_m, g_n)` and the Euclid chain of index pairs.
#[pyfunction]
fn gchain(m: u64, n: u64) -> PyResult<(BigInt, Vec<(u64, u64)>)> {
    let (r, chain) = core::gchain_resultant(m, n).map_err(value_err)?;
    Ok((r, chain.as_tuples()))
}

#[pyfunction]
fn legendre(a: i64, p: u64) -> PyResult<i64> {
    core::legendre_euler(a, odd_prime(p)?)
        .map(|s| s.value())
        .map_err(value_err)
}

#[pyfunction]
fn is_prime(n: u64) -> bool {
    core::is_prime(n)
}

#[pyfunction]
fn verify_qr_pair(py: Python<'_>, p: u64, q: u64) -> PyResult<Bound<'_, PyAny>> {
    let r = core::verify_qr_pair(odd_prime(p)?, odd_prime(q)?).map_err(value_err)?;
    to_json(py, &r)
}

#[pyfunction]
#[pyo3(signature = (max, jobs = 1))]
fn verify_qr_range(py: Python<'_>, max: u64, jobs: usize) -> PyResult<Bound<'_, PyAny>> {
    let r = py
        .detach(|| core::verify_qr_range(max, jobs))
        .map_err(value_err)?;
    to_json(py, &r)
}

#[pyfunction]
fn verify_supplement(py: Python<'_>, p: u64) -> PyResult<Bound<'_, PyAny>> {
    let r = core::verify_supplement(odd_prime(p)?).map_err(value_err)?;
    to_json(py, &r)
}

/// Runs the identity suite; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (seed = 42, trials = 200, max = 97, jobs = 1))]
fn run_suite(
    py: Python<'_>,
    seed: u64,
    trials: usize,
    max: u64,
    jobs: usize,
) -> PyResult<Bound<'_, PyAny>> {
    let config = SuiteConfig {
        seed,
        trials,
        prime_cap: max,
        jobs,
        ..SuiteConfig::default()
    };
    let report = py
        .detach(|| core::verify::run_suite(&config))
        .map_err(value_err)?;
    to_json(py, &report)
}

#[pymodule]
fn reciprocity(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(resultant, m)?)?;
    m.add_function(wrap_pyfunction!(reciprocant, m)?)?;
    m.add_function(wrap_pyfunction!(trace_poly, m)?)?;
    m.add_function(wrap_pyfunction!(expand_trace, m)?)?;
    m.add_function(wrap_pyfunction!(gn, m)?)?;
    m.add_function(wrap_pyfunction!(gn_sharp, m)?)?;
    m.add_function(wrap_pyfunction!(hn, m)?)?;
    m.add_function(wrap_pyfunction!(lucas, m)?)?;
    m.add_function(wrap_pyfunction!(gchain, m)?)?;
    m.add_function(wrap_pyfunction!(legendre, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(verify_qr_pair, m)?)?;
    m.add_function(wrap_pyfunction!(verify_qr_range, m)?)?;
    m.add_function(wrap_pyfunction!(verify_supplement, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
