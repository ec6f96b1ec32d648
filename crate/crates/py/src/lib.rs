//! Python bindings for `balancing-core`.
//!
//! Integers cross the boundary as Python `int`, rationals as `fractions.Fraction`.
//! Negative indices raise `ValueError`.

use balancing_core as core;
use num_bigint::BigInt;
use pyo3::exceptions::{PyArithmeticError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn to_py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        core::Error::Inconsistent(_) => PyArithmeticError::new_err(e.to_string()),
        core::Error::InvalidArgument { .. } | core::Error::Parse { .. } => {
            PyValueError::new_err(e.to_string())
        }
    }
}

fn index(name: &str, v: i64) -> PyResult<u64> {
    u64::try_from(v).map_err(|_| PyValueError::new_err(format!("{name} must be non-negative, got {v}")))
}

fn fraction<'py>(py: Python<'py>, q: &core::Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((q.numer().clone(), q.denom().clone()))
}

/// `B_n ** l` as a combination of `B(j*(n+s))` terms plus a constant.
#[pyclass(name = "LinearForm", module = "balancing", frozen)]
struct PyLinearForm {
    inner: core::LinearForm,
}

#[pymethods]
impl PyLinearForm {
    #[getter]
    fn power(&self) -> u64 {
        self.inner.power()
    }

    #[getter]
    fn constant<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.constant())
    }

    /// List of `(multiplier, shift, coeff)` in canonical order.
    #[getter]
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(u64, u8, Bound<'py, PyAny>)>> {
        self.inner
            .terms()
            .map(|(k, c)| Ok((k.multiplier, k.shift, fraction(py, c)?)))
            .collect()
    }

    fn evaluate(&self, n: i64) -> PyResult<BigInt> {
        self.inner.evaluate(index("n", n)?).map_err(to_py_err)
    }

    /// Symbolic check that this form equals `B_n ** power` for every n.
    fn verify(&self) -> bool {
        core::verify_linear_form(&self.inner)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("plain data serializes")
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s)
            .map(|inner| PyLinearForm { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!("LinearForm(power={}, '{}')", self.inner.power(), self.inner.render())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Closed form of `sum(B(k*m)**l for k in range(n + 1))` as a function of n.
#[pyclass(name = "ClosedSumExpr", module = "balancing", frozen)]
struct PyClosedSumExpr {
    inner: core::ClosedSumExpr,
}

#[pymethods]
impl PyClosedSumExpr {
    #[getter]
    fn m(&self) -> u64 {
        self.inner.m
    }

    #[getter]
    fn power(&self) -> u64 {
        self.inner.power
    }

    /// List of `(coeff, stride, offset)` standing for `coeff * B(stride*n + offset)`.
    #[getter]
    fn bterms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Bound<'py, PyAny>, u64, i64)>> {
        self.inner
            .bterms
            .iter()
            .map(|t| Ok((fraction(py, &t.coeff)?, t.stride, t.offset)))
            .collect()
    }

    #[getter]
    fn linear_coeff<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.linear_coeff)
    }

    #[getter]
    fn constant<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.constant)
    }

    fn evaluate(&self, n: i64) -> PyResult<BigInt> {
        self.inner.evaluate(index("n", n)?).map_err(to_py_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("plain data serializes")
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s)
            .map(|inner| PyClosedSumExpr { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!(
            "ClosedSumExpr(m={}, power={}, '{}')",
            self.inner.m,
            self.inner.power,
            self.inner.render()
        )
    }
}

#[pyfunction]
fn balancing(n: i64) -> PyResult<BigInt> {
    Ok(core::balancing(index("n", n)?))
}

#[pyfunction]
fn balancing_fast(n: i64) -> PyResult<BigInt> {
    Ok(core::balancing_fast(index("n", n)?))
}

#[pyfunction]
fn balancing_binet(n: i64) -> PyResult<BigInt> {
    Ok(core::balancing_binet(index("n", n)?))
}

#[pyfunction]
fn lucas_balancing(n: i64) -> PyResult<BigInt> {
    Ok(core::lucas_balancing(index("n", n)?))
}

#[pyfunction]
fn gf_coefficients(count: usize) -> Vec<BigInt> {
    core::gf_coefficients(count)
}

#[pyfunction]
fn linearize(l: i64) -> PyResult<PyLinearForm> {
    core::linearize(index("l", l)?)
        .map(|inner| PyLinearForm { inner })
        .map_err(to_py_err)
}

#[pyfunction]
fn linearize_odd(l: i64) -> PyResult<PyLinearForm> {
    Ok(PyLinearForm {
        inner: core::linearize_odd(index("l", l)?),
    })
}

#[pyfunction]
fn linearize_even(l: i64) -> PyResult<PyLinearForm> {
    core::linearize_even(index("l", l)?)
        .map(|inner| PyLinearForm { inner })
        .map_err(to_py_err)
}

#[pyfunction]
fn evaluate_linear_form(form: &PyLinearForm, n: i64) -> PyResult<BigInt> {
    form.evaluate(n)
}

/// `(B_m, 6*B_m - 2*B_(m-1))`
#[pyfunction]
fn gf_params(m: i64) -> PyResult<(BigInt, BigInt)> {
    let p = core::gf_params(index("m", m)?).map_err(to_py_err)?;
    Ok((p.numer, p.middle))
}

#[pyfunction]
#[pyo3(signature = (m, n_terms))]
fn subsequence_gf_check(m: i64, n_terms: usize) -> PyResult<bool> {
    core::subsequence_gf_check(index("m", m)?, n_terms).map_err(to_py_err)
}

#[pyfunction]
fn closed_sum(m: i64, n: i64) -> PyResult<BigInt> {
    core::closed_sum(index("m", m)?, index("n", n)?).map_err(to_py_err)
}

#[pyfunction]
fn shifted_closed_sum(m: i64, r: i64, n: i64) -> PyResult<BigInt> {
    core::shifted_closed_sum(index("m", m)?, index("r", r)?, index("n", n)?).map_err(to_py_err)
}

#[pyfunction]
fn power_sum(m: i64, l: i64, n: i64) -> PyResult<BigInt> {
    core::power_sum(index("m", m)?, index("l", l)?, index("n", n)?).map_err(to_py_err)
}

#[pyfunction]
fn brute_force_power_sum(m: i64, l: i64, n: i64) -> PyResult<BigInt> {
    core::brute_force_power_sum(index("m", m)?, index("l", l)?, index("n", n)?).map_err(to_py_err)
}

#[pyfunction]
fn power_sum_formula(m: i64, l: i64) -> PyResult<PyClosedSumExpr> {
    core::power_sum_formula(index("m", m)?, index("l", l)?)
        .map(|inner| PyClosedSumExpr { inner })
        .map_err(to_py_err)
}

#[pyfunction]
fn verify_odd_theorem(l: i64) -> PyResult<bool> {
    Ok(core::verify_odd_theorem(index("l", l)?))
}

#[pyfunction]
fn verify_even_theorem(l: i64) -> PyResult<bool> {
    core::verify_even_theorem(index("l", l)?).map_err(to_py_err)
}

#[pyfunction]
fn verify_lemma_identity(m: i64) -> PyResult<bool> {
    core::verify_lemma_identity(index("m", m)?).map_err(to_py_err)
}

#[pymodule]
#[pyo3(name = "balancing")]
fn balancing_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLinearForm>()?;
    m.add_class::<PyClosedSumExpr>()?;
    m.add_function(wrap_pyfunction!(balancing, m)?)?;
    m.add_function(wrap_pyfunction!(balancing_fast, m)?)?;
    m.add_function(wrap_pyfunction!(balancing_binet, m)?)?;
    m.add_function(wrap_pyfunction!(lucas_balancing, m)?)?;
    m.add_function(wrap_pyfunction!(gf_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(linearize, m)?)?;
    m.add_function(wrap_pyfunction!(linearize_odd, m)?)?;
    m.add_function(wrap_pyfunction!(linearize_even, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_linear_form, m)?)?;
    m.add_function(wrap_pyfunction!(gf_params, m)?)?;
    m.add_function(wrap_pyfunction!(subsequence_gf_check, m)?)?;
    m.add_function(wrap_pyfunction!(closed_sum, m)?)?;
    m.add_function(wrap_pyfunction!(shifted_closed_sum, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_formula, m)?)?;
    m.add_function(wrap_pyfunction!(verify_odd_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_even_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma_identity, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::types::PyDict;

    fn with_module<F: FnOnce(Python<'_>, &Bound<'_, PyDict>)>(f: F) {
        Python::initialize();
        Python::attach(|py| {
            let module = PyModule::new(py, "balancing").unwrap();
            balancing_py(&module).unwrap();
            let globals = PyDict::new(py);
            globals.set_item("balancing", module).unwrap();
            f(py, &globals);
        });
    }

    fn run(py: Python<'_>, globals: &Bound<'_, PyDict>, code: &str) {
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    }

    #[test]
    fn values_and_sums() {
        with_module(|py, g| {
            run(
                py,
                g,
                r#"
b = balancing
assert [b.balancing(n) for n in range(6)] == [0, 1, 6, 35, 204, 1189]
assert b.balancing_fast(64) == b.balancing(64) == b.balancing_binet(64)
assert b.lucas_balancing(2) == 17
assert b.closed_sum(1, 4) == 246
assert b.power_sum(2, 2, 2) == 41652
assert b.gf_params(2) == (6, 34)
"#,
            );
        });
    }

    #[test]
    fn forms_and_errors() {
        with_module(|py, g| {
            run(
                py,
                g,
                r#"
from fractions import Fraction
b = balancing
f = b.linearize(2)
assert f.constant == Fraction(-1, 16)
assert f.terms == [(2, 0, Fraction(-17, 96)), (2, 1, Fraction(1, 96))]
assert f.evaluate(2) == 36 and f.verify()
assert b.LinearForm.from_json(f.to_json()) == f
assert str(b.power_sum_formula(1, 1)) == "(1/4)*B(n+1) - (1/4)*B(n) - 1/4"
for bad in (lambda: b.balancing(-1), lambda: b.linearize(0), lambda: b.closed_sum(0, 1)):
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
"#,
            );
        });
    }
}
