//! Python bindings for the tsaudit toolkit.
//!
//! Exposes the sequence type plus the audit, counterexample, and Barker
//! search entry points. Build with
//! `cargo build --release -p tsaudit-python`, then import the produced
//! `cdylib` as the module `tsaudit_py` (see `python/smoke_test.py` at the
//! workspace root for a loader that does this without installing).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tsaudit_core as core;

fn value_err(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// A ±1 sequence. Construct from a literal like "+++--" or a list of
/// ±1 integers. Elements are addressed 1-based, matching the subscript
/// convention x_1..x_n.
#[pyclass(frozen, eq, name = "Sequence", module = "tsaudit_py")]
#[derive(PartialEq)]
struct PySequence {
    inner: core::BinarySequence,
}

#[pymethods]
impl PySequence {
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(text) = value.extract::<String>() {
            let inner = text.parse().map_err(value_err)?;
            return Ok(PySequence { inner });
        }
        if let Ok(values) = value.extract::<Vec<i64>>() {
            let inner = core::BinarySequence::from_values(&values).map_err(value_err)?;
            return Ok(PySequence { inner });
        }
        Err(PyValueError::new_err(
            "expected a '+'/'-' literal string or a list of +1/-1 integers",
        ))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequence(\"{}\")", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// The elements as a list of +1/-1 integers.
    fn values(&self) -> Vec<i64> {
        self.inner.values()
    }

    /// Element x_i (1-based).
    fn at(&self, i: usize) -> PyResult<i64> {
        self.inner
            .get(i)
            .map(|s| s.value())
            .ok_or_else(|| {
                PyValueError::new_err(format!("index {i} out of range 1..={}", self.inner.len()))
            })
    }

    /// Aperiodic autocorrelation c_k, 0 <= k <= n-1.
    fn autocorrelation(&self, k: usize) -> PyResult<i64> {
        core::autocorrelation(&self.inner, k).map_err(value_err)
    }

    /// True when |c_k| <= 1 for every 1 <= k <= n-1.
    fn is_barker(&self) -> bool {
        core::is_barker(&self.inner)
    }

    /// True when the sequence satisfies equation (k); needs 2k+1 <= n.
    fn satisfies_eq_k(&self, k: usize) -> PyResult<bool> {
        core::satisfies_eq_k(&self.inner, k).map_err(value_err)
    }

    /// The equation (k) right-hand side sum.
    fn eq_k_rhs(&self, k: usize) -> PyResult<i64> {
        core::eq_k_rhs(&self.inner, k).map_err(value_err)
    }

    /// Largest t with equations (1)..(t) all satisfied, capped at k_max.
    fn max_t(&self) -> usize {
        core::max_t(&self.inner)
    }

    /// Every k in the strict domain 1..=k_max(n) whose equation holds.
    fn eq_k_profile(&self) -> Vec<usize> {
        core::eq_k_profile(&self.inner)
    }

    /// Length of the leading +1 run.
    fn leading_run(&self) -> PyResult<usize> {
        core::leading_run(&self.inner).map_err(value_err)
    }

    /// The subsampled sequence z_j = x_{p(j-1)+1}.
    fn derived(&self, p: usize) -> PyResult<PySequence> {
        core::derived_sequence(&self.inner, p)
            .map(|inner| PySequence { inner })
            .map_err(value_err)
    }

    /// Run-length text of this sequence.
    fn rle(&self) -> String {
        core::rle_encode(&self.inner).to_string()
    }

    fn negated(&self) -> PySequence {
        PySequence {
            inner: self.inner.negated(),
        }
    }

    fn reversed(&self) -> PySequence {
        PySequence {
            inner: self.inner.reversed(),
        }
    }

    fn alternated(&self) -> PySequence {
        PySequence {
            inner: self.inner.alternated(),
        }
    }

    /// Extends to `target` elements with +1 (or -1 when `fill` is -1).
    #[pyo3(signature = (target, fill = 1))]
    fn padded_to(&self, target: usize, fill: i64) -> PyResult<PySequence> {
        let sign = core::Sign::from_value(fill)
            .ok_or_else(|| PyValueError::new_err("fill must be +1 or -1"))?;
        self.inner
            .padded_to(target, sign)
            .map(|inner| PySequence { inner })
            .map_err(value_err)
    }
}

/// Verdicts for the Theorem 1 premise and claims (i)-(iv).
#[pyclass(frozen, eq, name = "Theorem1Report", module = "tsaudit_py")]
#[derive(PartialEq)]
struct PyTheorem1Report {
    inner: core::Theorem1Report,
}

#[pymethods]
impl PyTheorem1Report {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn t(&self) -> usize {
        self.inner.t
    }

    #[getter]
    fn premise_ok(&self) -> bool {
        self.inner.premise_ok
    }

    /// Human-readable premise failure, or None when the premise holds.
    #[getter]
    fn premise_failure(&self) -> Option<String> {
        self.inner.premise_failure.as_ref().map(|f| f.to_string())
    }

    #[getter]
    fn p(&self) -> Option<usize> {
        self.inner.p
    }

    #[getter]
    fn claim_i_ok(&self) -> Option<bool> {
        self.inner.claim_i_ok
    }

    #[getter]
    fn claim_ii_ok(&self) -> Option<bool> {
        self.inner.claim_ii_ok
    }

    #[getter]
    fn claim_iii_ok(&self) -> Option<bool> {
        self.inner.claim_iii_ok
    }

    #[getter]
    fn claim_iv_ok(&self) -> Option<bool> {
        self.inner.claim_iv_ok
    }

    #[getter]
    fn failing_i(&self) -> Vec<usize> {
        self.inner.failing_i.clone()
    }

    #[getter]
    fn failing_iii(&self) -> Vec<(usize, usize)> {
        self.inner.failing_iii.clone()
    }

    #[getter]
    fn failing_iv_k(&self) -> Vec<usize> {
        self.inner.failing_iv_k.clone()
    }

    /// Premise holds and every claim is true.
    fn all_claims_hold(&self) -> bool {
        self.inner.all_claims_hold()
    }

    /// Premise holds and some claim fails: a counterexample.
    fn falsified(&self) -> bool {
        self.inner.falsified()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("report serializes")
    }

    fn __repr__(&self) -> String {
        format!(
            "Theorem1Report(n={}, t={}, premise_ok={}, falsified={})",
            self.inner.n,
            self.inner.t,
            self.inner.premise_ok,
            self.inner.falsified()
        )
    }
}

/// One counterexample to Theorem 1 (iv).
#[pyclass(frozen, eq, name = "CounterexampleRecord", module = "tsaudit_py")]
#[derive(PartialEq)]
struct PyRecord {
    inner: core::CounterexampleRecord,
}

#[pymethods]
impl PyRecord {
    #[getter]
    fn rle(&self) -> String {
        self.inner.rle.to_string()
    }

    #[getter]
    fn t(&self) -> usize {
        self.inner.t
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.p
    }

    #[getter]
    fn z_prefix(&self) -> PySequence {
        PySequence {
            inner: self.inner.z_prefix.clone(),
        }
    }

    #[getter]
    fn failing_k(&self) -> Vec<usize> {
        self.inner.failing_k.clone()
    }

    #[getter]
    fn claim_i_ok(&self) -> bool {
        self.inner.claim_i_ok
    }

    #[getter]
    fn claim_ii_ok(&self) -> bool {
        self.inner.claim_ii_ok
    }

    #[getter]
    fn claim_iii_ok(&self) -> bool {
        self.inner.claim_iii_ok
    }

    #[getter]
    fn source(&self) -> String {
        self.inner.source.to_string()
    }

    /// The decoded prefix as a sequence.
    fn prefix(&self) -> PySequence {
        PySequence {
            inner: self.inner.rle.decode(),
        }
    }

    /// Tab-separated line: rle, t, p, failing_k.
    fn tabular_line(&self) -> String {
        self.inner.tabular_line()
    }

    fn __repr__(&self) -> String {
        format!(
            "CounterexampleRecord(rle=\"{}\", t={}, p={}, failing_k={:?})",
            self.inner.rle, self.inner.t, self.inner.p, self.inner.failing_k
        )
    }
}

/// Output of one exhaustive Barker search.
#[pyclass(frozen, name = "BarkerSearchResult", module = "tsaudit_py")]
struct PyBarkerResult {
    inner: core::BarkerSearchResult,
}

#[pymethods]
impl PyBarkerResult {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn count(&self) -> usize {
        self.inner.count
    }

    #[getter]
    fn sequences(&self) -> Vec<PySequence> {
        self.inner
            .sequences
            .iter()
            .map(|s| PySequence { inner: s.clone() })
            .collect()
    }

    #[getter]
    fn elapsed_seconds(&self) -> f64 {
        self.inner.elapsed.as_secs_f64()
    }

    fn __repr__(&self) -> String {
        format!(
            "BarkerSearchResult(n={}, count={})",
            self.inner.n, self.inner.count
        )
    }
}

/// Decodes run-length text (sign defaults to +) into a sequence.
#[pyfunction]
fn rle_decode(text: &str) -> PyResult<PySequence> {
    core::parse_with_default_sign(text, core::Sign::Plus)
        .map(|rle| PySequence {
            inner: rle.decode(),
        })
        .map_err(value_err)
}

/// Encodes a sequence into run-length text.
#[pyfunction]
fn rle_encode(sequence: &PySequence) -> String {
    core::rle_encode(&sequence.inner).to_string()
}

/// Left-hand side of equation (k): 1 for odd k, 0 for even.
#[pyfunction]
fn eq_k_lhs(k: usize) -> i64 {
    core::eq_k_lhs(k)
}

/// Largest k in the strict equation domain for length n.
#[pyfunction]
fn k_max(n: usize) -> usize {
    core::k_max(n)
}

/// Audits the Theorem 1 premise and claims on (sequence, t).
#[pyfunction]
fn theorem1_audit(sequence: &PySequence, t: usize) -> PyTheorem1Report {
    PyTheorem1Report {
        inner: core::theorem1_audit(&sequence.inner, t),
    }
}

/// The four known counterexample records.
#[pyfunction]
fn catalog() -> Vec<PyRecord> {
    core::catalog()
        .into_iter()
        .map(|inner| PyRecord { inner })
        .collect()
}

/// The (p,p,2p,p,p-1,p-1) family member for an odd p >= 3.
#[pyfunction]
fn family_counterexample(p: usize) -> PyResult<PyRecord> {
    core::family_counterexample(p)
        .map(|inner| PyRecord { inner })
        .map_err(value_err)
}

/// Exhaustive search for all counterexamples at (p, t).
#[pyfunction]
#[pyo3(signature = (p, t, threads = None, max_results = None))]
fn search(
    p: usize,
    t: usize,
    threads: Option<usize>,
    max_results: Option<usize>,
) -> PyResult<Vec<PyRecord>> {
    let mut config = core::SearchConfig::new(p, t).map_err(value_err)?;
    if let Some(threads) = threads {
        config = config.with_threads(threads);
    }
    if let Some(max) = max_results {
        config = config.with_max_results(max);
    }
    Ok(core::search(&config)
        .into_iter()
        .map(|inner| PyRecord { inner })
        .collect())
}

/// Re-audits a record; raises ValueError on any mismatch.
#[pyfunction]
fn verify_record(record: &PyRecord) -> PyResult<PyTheorem1Report> {
    core::verify_record(&record.inner)
        .map(|inner| PyTheorem1Report { inner })
        .map_err(value_err)
}

/// Finds every Barker sequence of length n (2 <= n <= 32).
#[pyfunction]
#[pyo3(signature = (n, threads = None))]
fn barker_search(n: usize, threads: Option<usize>) -> PyResult<PyBarkerResult> {
    core::barker_search_threaded(n, threads.unwrap_or(1))
        .map(|inner| PyBarkerResult { inner })
        .map_err(value_err)
}

/// Counts Barker sequences for every odd 13 < n <= n_max.
#[pyfunction]
fn odd_nonexistence_scan(n_max: usize) -> PyResult<Vec<(usize, usize)>> {
    core::odd_nonexistence_scan(n_max).map_err(value_err)
}

#[pymodule]
fn tsaudit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("MAX_BARKER_N", core::MAX_BARKER_N)?;
    m.add_class::<PySequence>()?;
    m.add_class::<PyTheorem1Report>()?;
    m.add_class::<PyRecord>()?;
    m.add_class::<PyBarkerResult>()?;
    m.add_function(wrap_pyfunction!(rle_decode, m)?)?;
    m.add_function(wrap_pyfunction!(rle_encode, m)?)?;
    m.add_function(wrap_pyfunction!(eq_k_lhs, m)?)?;
    m.add_function(wrap_pyfunction!(k_max, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_audit, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(family_counterexample, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(verify_record, m)?)?;
    m.add_function(wrap_pyfunction!(barker_search, m)?)?;
    m.add_function(wrap_pyfunction!(odd_nonexistence_scan, m)?)?;
    Ok(())
}
