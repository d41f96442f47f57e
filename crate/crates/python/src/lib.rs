//! Python bindings for the `frselect` selection library.
//!
//! All selection entry points take a Python list of integers and a 0-based
//! rank `k`, run the algorithm on a copy, and return a dict with the
//! selected value, the equal range `[k_minus, k_plus]` holding it, and the
//! exact number of element comparisons spent.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use frselect::generators::{generate as gen_sequence, Family, SequenceSpec};
use frselect::riselect::{riselect, RiselectConfig};
use frselect::select::{select, SelectConfig, SelectMode};
use frselect::stats::RunStats;
use frselect::verify::{hyper_tail, TailQuery};
use frselect::Rng;

fn to_py_err(e: frselect::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn run_select(
    py: Python<'_>,
    mut data: Vec<i64>,
    k: usize,
    seed: u64,
    n_cut: usize,
    mode: SelectMode,
) -> PyResult<Bound<'_, PyDict>> {
    if data.is_empty() {
        return Err(PyValueError::new_err("data must be non-empty"));
    }
    if k >= data.len() {
        return Err(PyValueError::new_err(format!(
            "rank {k} out of range for length {}",
            data.len()
        )));
    }
    let config = SelectConfig {
        n_cut,
        mode,
        ..SelectConfig::default()
    };
    let mut rng = Rng::new(seed);
    let mut stats = RunStats::new();
    let n = data.len();
    let res = select(&mut data, 0, n - 1, k, &config, &mut rng, &mut stats).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("value", res.value)?;
    d.set_item("k_minus", res.k_minus)?;
    d.set_item("k_plus", res.k_plus)?;
    d.set_item("comparisons", stats.comparisons)?;
    Ok(d)
}

/// Select the `k`-th smallest (0-based) element with the sampling-based
/// two-pivot algorithm.
#[pyfunction]
#[pyo3(signature = (data, k, seed = 1, n_cut = 600))]
fn select_kth(
    py: Python<'_>,
    data: Vec<i64>,
    k: usize,
    seed: u64,
    n_cut: usize,
) -> PyResult<Bound<'_, PyDict>> {
    run_select(py, data, k, seed, n_cut, SelectMode::Recursive)
}

/// Same as `select_kth` but with the nonrecursive variant that sorts the
/// sample instead of recursing into it.
#[pyfunction]
#[pyo3(signature = (data, k, seed = 1, n_cut = 600))]
fn select_nonrec_sort_kth(
    py: Python<'_>,
    data: Vec<i64>,
    k: usize,
    seed: u64,
    n_cut: usize,
) -> PyResult<Bound<'_, PyDict>> {
    run_select(py, data, k, seed, n_cut, SelectMode::NonrecursiveSort)
}

/// Select the `k`-th smallest (0-based) element with the baseline
/// median-of-3 quickselect.
#[pyfunction]
#[pyo3(signature = (data, k, seed = 1))]
fn riselect_kth(py: Python<'_>, mut data: Vec<i64>, k: usize, seed: u64) -> PyResult<Bound<'_, PyDict>> {
    if data.is_empty() {
        return Err(PyValueError::new_err("data must be non-empty"));
    }
    if k >= data.len() {
        return Err(PyValueError::new_err(format!(
            "rank {k} out of range for length {}",
            data.len()
        )));
    }
    let mut rng = Rng::new(seed);
    let mut stats = RunStats::new();
    let n = data.len();
    riselect(
        &mut data,
        0,
        n - 1,
        k,
        &RiselectConfig::default(),
        &mut rng,
        &mut stats,
    )
    .map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("value", data[k])?;
    d.set_item("comparisons", stats.comparisons)?;
    d.set_item("randomizations", stats.randomizations)?;
    Ok(d)
}

/// Generate a benchmark input sequence. `family` is one of `random`,
/// `onezero`, `sorted`, `rotated`, `organpipe`, `m3killer`, `twofaced`.
#[pyfunction]
#[pyo3(signature = (family, n, seed = 1))]
fn generate(family: &str, n: usize, seed: u64) -> PyResult<Vec<i64>> {
    let family: Family = family.parse().map_err(to_py_err)?;
    gen_sequence(&SequenceSpec { family, n, seed }).map_err(to_py_err)
}

/// The lower-order comparison scale `f(n) = n^(2/3) (ln n)^(1/3)`.
#[pyfunction]
fn f_of_n(n: u64) -> PyResult<f64> {
    frselect::f_of_n(n).map_err(to_py_err)
}

/// The ratio `phi_eps(n) = (n^eps / ln n)^(1/3)` between the power-law
/// sample scale `n^((2+eps)/3)` and `f(n)`.
#[pyfunction]
fn phi_eps(n: u64, eps: f64) -> PyResult<f64> {
    frselect::phi_eps(n, eps).map_err(to_py_err)
}

/// Exact hypergeometric upper-tail probability: drawing `s` items from a
/// population of `n` with `r` marked, the probability that the sample holds
/// at least `r s / n + g` marked items.
#[pyfunction]
fn hyper_tail_prob(n: u64, r: u64, s: u64, g: f64) -> PyResult<f64> {
    hyper_tail(&TailQuery { n, r, s, g }).map_err(to_py_err)
}

#[pymodule]
fn frselect_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(select_kth, m)?)?;
    m.add_function(wrap_pyfunction!(select_nonrec_sort_kth, m)?)?;
    m.add_function(wrap_pyfunction!(riselect_kth, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(f_of_n, m)?)?;
    m.add_function(wrap_pyfunction!(phi_eps, m)?)?;
    m.add_function(wrap_pyfunction!(hyper_tail_prob, m)?)?;
    Ok(())
}
