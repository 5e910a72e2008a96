//! Python bindings for the stacklab crate: exact counts and series
//! coefficients, stack enumeration, identity verification, the
//! partition bijections, and the asymptotic toolkit.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use stacklab::asym::{self, LogReal};
use stacklab::combinat::{self, Partition, StackVariant};
use stacklab::genfun::{self, IdentityTag, Variant};

fn to_py_err(e: stacklab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_variant(s: &str) -> PyResult<Variant> {
    Variant::from_str(s).map_err(to_py_err)
}

/// Base stack variant for the enumeration-backed functions; the
/// summit-weighted names share their base variant's enumeration.
fn stack_variant(v: Variant) -> PyResult<(StackVariant, bool)> {
    let pair = match v {
        Variant::S => (StackVariant::Stack, false),
        Variant::Ss => (StackVariant::Stack, true),
        Variant::G => (StackVariant::Receding, false),
        Variant::Gs => (StackVariant::Receding, true),
        Variant::H => (StackVariant::Shifted, false),
        Variant::Hs => (StackVariant::Shifted, true),
        Variant::D => (StackVariant::Strict, false),
        Variant::Dm => (StackVariant::SemiStrict, false),
        _ => {
            return Err(PyValueError::new_err(format!(
                "variant {v} is not enumeration-backed"
            )))
        }
    };
    Ok(pair)
}

/// Names of all series variants.
#[pyfunction]
fn variants() -> Vec<&'static str> {
    Variant::ALL.iter().map(|v| v.name()).collect()
}

/// Names of all verifiable identities.
#[pyfunction]
fn identity_tags() -> Vec<&'static str> {
    IdentityTag::ALL.iter().map(|t| t.name()).collect()
}

/// Exact count (series coefficient) for one variant and size.
#[pyfunction]
fn count(variant: &str, n: usize) -> PyResult<BigInt> {
    Ok(genfun::count(parse_variant(variant)?, n))
}

/// All series coefficients 0..=order for one variant.
#[pyfunction]
fn series(variant: &str, order: usize) -> PyResult<Vec<BigInt>> {
    Ok(genfun::series(parse_variant(variant)?, order).coeffs().to_vec())
}

/// Brute-force count by exhaustive enumeration, including the
/// summit-weighted variants.
#[pyfunction]
#[pyo3(signature = (variant, n, force = false))]
fn oracle_count(variant: &str, n: usize, force: bool) -> PyResult<u64> {
    let (sv, summits) = stack_variant(parse_variant(variant)?)?;
    let count = if summits {
        combinat::count_with_summits(sv, n, force)
    } else {
        combinat::count_by_enumeration(sv, n, force)
    };
    count.map_err(to_py_err)
}

/// Renders every stack of the given variant and size.
#[pyfunction]
#[pyo3(signature = (variant, n, force = false))]
fn enumerate_stacks(variant: &str, n: usize, force: bool) -> PyResult<Vec<String>> {
    let (sv, summits) = stack_variant(parse_variant(variant)?)?;
    if summits {
        return Err(PyValueError::new_err(
            "enumerate_stacks lists unmarked stacks; use the base variant",
        ));
    }
    let seqs = combinat::enumerate(sv, n, force).map_err(to_py_err)?;
    Ok(seqs.iter().map(|s| s.to_string()).collect())
}

/// Checks one identity at the given order; returns (passed, report).
#[pyfunction]
fn verify_identity(tag: &str, order: usize) -> PyResult<(bool, String)> {
    let t = IdentityTag::from_str(tag).map_err(to_py_err)?;
    let report = genfun::verify_identity(t, order);
    Ok((report.pass, report.to_string()))
}

/// Frobenius symbol of a partition as (top row, bottom row).
#[pyfunction]
fn frobenius(parts: Vec<usize>) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let p = Partition::new(parts).map_err(to_py_err)?;
    let fs = p.to_frobenius().map_err(to_py_err)?;
    Ok((fs.top_row().to_vec(), fs.bottom_row().to_vec()))
}

/// Image of a partition under the receding-stack-with-summit bijection,
/// as (parts, marked occurrence index, rendering).
#[pyfunction]
fn receding_summit(parts: Vec<usize>) -> PyResult<(Vec<usize>, usize, String)> {
    let p = Partition::new(parts).map_err(to_py_err)?;
    let ms = combinat::receding_summit_from_partition(&p).map_err(to_py_err)?;
    Ok((ms.seq.parts(), ms.mark, ms.to_string()))
}

fn main_term_dict(py: Python<'_>, mt: &asym::MainTerm) -> PyResult<Py<PyDict>> {
    let d = PyDict::new(py);
    d.set_item("c", mt.c)?;
    d.set_item("alpha", mt.alpha)?;
    d.set_item("beta", mt.beta)?;
    Ok(d.unbind())
}

/// Coefficient main term `c * n^-alpha * e^(pi sqrt(beta n))`.
#[pyfunction]
fn main_term(py: Python<'_>, variant: &str) -> PyResult<Py<PyDict>> {
    let mt = asym::main_term(parse_variant(variant)?).map_err(to_py_err)?;
    main_term_dict(py, &mt)
}

/// Series asymptotic `lambda * eps^alpha * e^(a / eps)` near q = 1.
#[pyfunction]
fn eps_asym(py: Python<'_>, variant: &str) -> PyResult<Py<PyDict>> {
    let e = asym::eps_asym(parse_variant(variant)?).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("lambda", e.lambda)?;
    d.set_item("alpha", e.alpha)?;
    d.set_item("a", e.a)?;
    Ok(d.unbind())
}

/// Ingham transfer from a series asymptotic to a coefficient main term.
#[pyfunction]
fn ingham_transfer(py: Python<'_>, lambda: f64, alpha: f64, a: f64) -> PyResult<Py<PyDict>> {
    let e = asym::EpsAsym { lambda, alpha, a };
    let mt = asym::ingham_transfer(&e).map_err(to_py_err)?;
    main_term_dict(py, &mt)
}

/// Ratio of the exact coefficient to its main-term value at size n.
#[pyfunction]
fn coeff_ratio(variant: &str, n: u64) -> PyResult<f64> {
    let v = parse_variant(variant)?;
    let s = genfun::series(v, n as usize);
    asym::coeff_ratio(v, n, &s).map_err(to_py_err)
}

fn logreal_dict(py: Python<'_>, x: &LogReal) -> PyResult<Py<PyDict>> {
    let d = PyDict::new(py);
    d.set_item("sign", x.sign())?;
    d.set_item("ln", x.ln_magnitude())?;
    d.set_item("display", x.to_string())?;
    Ok(d.unbind())
}

/// Numeric series value at q = e^-eps, in log form.
#[pyfunction]
fn eval_genfun(py: Python<'_>, variant: &str, eps: f64) -> PyResult<Py<PyDict>> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(PyValueError::new_err("eps must lie in (0, 1]"));
    }
    logreal_dict(py, &asym::eval_genfun(parse_variant(variant)?, eps))
}

/// The dilogarithm on [-1, 1).
#[pyfunction]
fn dilog(x: f64) -> PyResult<f64> {
    asym::dilog(x).map_err(to_py_err)
}

/// Saddle-point package for the shifted-stack phase function.
#[pyfunction]
fn saddle_data(py: Python<'_>) -> PyResult<Py<PyDict>> {
    let sd = asym::saddle_data();
    let d = PyDict::new(py);
    d.set_item("v", sd.v)?;
    d.set_item("f_v", sd.f_v)?;
    d.set_item("fpp_v", sd.fpp_v)?;
    d.set_item("contour_height", sd.contour_height)?;
    Ok(d.unbind())
}

/// Phase function of the shifted-stack contour integral.
#[pyfunction]
fn phase(u: Complex64) -> Complex64 {
    asym::f(u)
}

/// Contour quadrature of the shifted-stack integral.
#[pyfunction]
fn contour_a(eps: f64) -> PyResult<f64> {
    if !(eps > 0.0 && eps <= 0.2) {
        return Err(PyValueError::new_err("eps must lie in (0, 0.2]"));
    }
    asym::contour_a(eps).map_err(to_py_err)
}

/// The same contour value recovered from the series side.
#[pyfunction]
fn a_from_h(eps: f64) -> PyResult<f64> {
    if !(eps > 0.0 && eps <= 0.2) {
        return Err(PyValueError::new_err("eps must lie in (0, 0.2]"));
    }
    Ok(asym::a_from_h(eps))
}

/// Ratio of the summit and summit-free shifted-stack series at q = e^-eps.
#[pyfunction]
fn hs_over_h(eps: f64) -> PyResult<f64> {
    if !(eps > 0.0 && eps <= 0.2) {
        return Err(PyValueError::new_err("eps must lie in (0, 0.2]"));
    }
    Ok(asym::hs_over_h(eps))
}

/// The golden ratio.
#[pyfunction]
fn golden_ratio() -> f64 {
    asym::golden_ratio()
}

#[pymodule]
fn stacklab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(variants, m)?)?;
    m.add_function(wrap_pyfunction!(identity_tags, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_stacks, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(receding_summit, m)?)?;
    m.add_function(wrap_pyfunction!(main_term, m)?)?;
    m.add_function(wrap_pyfunction!(eps_asym, m)?)?;
    m.add_function(wrap_pyfunction!(ingham_transfer, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(eval_genfun, m)?)?;
    m.add_function(wrap_pyfunction!(dilog, m)?)?;
    m.add_function(wrap_pyfunction!(saddle_data, m)?)?;
    m.add_function(wrap_pyfunction!(phase, m)?)?;
    m.add_function(wrap_pyfunction!(contour_a, m)?)?;
    m.add_function(wrap_pyfunction!(a_from_h, m)?)?;
    m.add_function(wrap_pyfunction!(hs_over_h, m)?)?;
    m.add_function(wrap_pyfunction!(golden_ratio, m)?)?;
    Ok(())
}
