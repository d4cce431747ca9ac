//! Python bindings for the ballot toolkit.
//!
//! The module mirrors the core crate's operation set: exact enumeration,
//! series evaluation, sandwich bounds, rotation analysis, and sampling.
//! Every rational value crosses the boundary exactly, never as a float.

use ballot_core::bounds::InequalityCheck;
use ballot_core::enumeration::{ExactCounts, WeightedBallotSpec, DEFAULT_ENUM_BUDGET};
use ballot_core::montecarlo::SampleEstimate;
use ballot_core::{BallotSpec, Error, Ratio, VoteSequence};
use num::bigint::BigInt;
use num::{Signed, Zero};
use pyo3::basic::CompareOp;
use pyo3::exceptions::{PyRuntimeError, PyTypeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat};
use pyo3::IntoPyObjectExt;

/// Input-shaped failures become `ValueError`; only an enumeration budget
/// overrun, which says nothing about the input's validity, becomes
/// `RuntimeError`. The stable variant name prefixes the message.
fn to_py_err(err: Error) -> PyErr {
    let msg = format!("{}: {err}", err.name());
    match err {
        Error::BudgetExceeded { .. } => PyRuntimeError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

/// Convert anything ratio-shaped into an exact [`Ratio`].
///
/// Accepted forms: a `Ratio`, any integer, a string such as `"3/2"` or
/// `"1.5"`, and any object with integer `numerator`/`denominator`
/// attributes (`fractions.Fraction` in particular). Floats are refused
/// outright: they carry binary rounding the toolkit promises to avoid.
fn ratio_from_any(obj: &Bound<'_, PyAny>) -> PyResult<Ratio> {
    if let Ok(cell) = obj.cast::<PyRatio>() {
        return Ok(cell.get().inner.clone());
    }
    if obj.cast::<PyFloat>().is_ok() {
        return Err(PyTypeError::new_err(
            "floats are inexact; pass a str, int, Fraction, or Ratio",
        ));
    }
    if let Ok(n) = obj.extract::<BigInt>() {
        return Ok(Ratio::from(n));
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse::<Ratio>().map_err(to_py_err);
    }
    if let (Ok(n), Ok(d)) = (obj.getattr("numerator"), obj.getattr("denominator")) {
        if let (Ok(n), Ok(d)) = (n.extract::<BigInt>(), d.extract::<BigInt>()) {
            return Ratio::new(n, d).map_err(to_py_err);
        }
    }
    Err(PyTypeError::new_err(format!(
        "cannot interpret {} as an exact ratio",
        obj.get_type().name()?
    )))
}

fn spec_for(a: u64, b: u64, mu: &Bound<'_, PyAny>) -> PyResult<BallotSpec> {
    BallotSpec::new(a, b, ratio_from_any(mu)?).map_err(to_py_err)
}

fn seq_for(sequence: &str) -> PyResult<VoteSequence> {
    sequence.parse::<VoteSequence>().map_err(to_py_err)
}

fn weights_from(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Ratio>> {
    objs.iter().map(ratio_from_any).collect()
}

fn wspec_for(
    a: u64,
    weights: &[Bound<'_, PyAny>],
    mu: &Bound<'_, PyAny>,
) -> PyResult<WeightedBallotSpec> {
    WeightedBallotSpec::new(a, weights_from(weights)?, ratio_from_any(mu)?).map_err(to_py_err)
}

// CPython's numeric hash parameters for 64-bit builds. Matching them makes
// a Ratio hash like the equal int or fractions.Fraction, which the
// comparison methods already treat as equal.
const PY_HASH_MODULUS: u64 = (1 << 61) - 1;
const PY_HASH_INF: i64 = 314_159;

fn numeric_hash(r: &Ratio) -> isize {
    let m = BigInt::from(PY_HASH_MODULUS);
    let q_mod = r.denom() % &m;
    let h = if q_mod.is_zero() {
        BigInt::from(PY_HASH_INF)
    } else {
        let inv = q_mod.modpow(&BigInt::from(PY_HASH_MODULUS - 2), &m);
        r.numer().abs() % &m * inv % &m
    };
    let mut out = i64::try_from(h).expect("reduced hash fits i64");
    if r.is_negative() {
        out = -out;
    }
    if out == -1 {
        out = -2;
    }
    out as isize
}

/// Exact rational number with arbitrary-precision numerator and denominator.
#[pyclass(frozen, name = "Ratio")]
struct PyRatio {
    inner: Ratio,
}

impl PyRatio {
    fn wrap(inner: Ratio) -> Self {
        PyRatio { inner }
    }
}

#[pymethods]
impl PyRatio {
    /// `Ratio(value)` converts a ratio-shaped object; `Ratio(num, den)`
    /// builds the reduced fraction from two integers.
    #[new]
    #[pyo3(signature = (value, den = None))]
    fn new(value: &Bound<'_, PyAny>, den: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let Some(den) = den else {
            return Ok(PyRatio::wrap(ratio_from_any(value)?));
        };
        let msg = "Ratio(num, den) takes two integers";
        let num = value
            .extract::<BigInt>()
            .map_err(|_| PyTypeError::new_err(msg))?;
        let den = den
            .extract::<BigInt>()
            .map_err(|_| PyTypeError::new_err(msg))?;
        Ratio::new(num, den).map(PyRatio::wrap).map_err(to_py_err)
    }

    /// Numerator of the reduced fraction; the sign lives here.
    #[getter]
    fn numerator(&self) -> BigInt {
        self.inner.numer().clone()
    }

    /// Denominator of the reduced fraction, always positive.
    #[getter]
    fn denominator(&self) -> BigInt {
        self.inner.denom().clone()
    }

    /// The pair `(numerator, denominator)`.
    fn as_integer_ratio(&self) -> (BigInt, BigInt) {
        (self.inner.numer().clone(), self.inner.denom().clone())
    }

    fn is_integer(&self) -> bool {
        self.inner.is_integer()
    }

    fn floor(&self) -> BigInt {
        self.inner.floor()
    }

    fn ceil(&self) -> BigInt {
        self.inner.ceil()
    }

    fn __floor__(&self) -> BigInt {
        self.inner.floor()
    }

    fn __ceil__(&self) -> BigInt {
        self.inner.ceil()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ratio('{}')", self.inner)
    }

    /// Nearest double; the only deliberately lossy exit.
    fn __float__(&self) -> f64 {
        self.inner.to_f64()
    }

    fn __bool__(&self) -> bool {
        !self.inner.is_zero()
    }

    fn __hash__(&self) -> isize {
        numeric_hash(&self.inner)
    }

    fn __richcmp__(
        &self,
        py: Python<'_>,
        other: &Bound<'_, PyAny>,
        op: CompareOp,
    ) -> PyResult<Py<PyAny>> {
        let Ok(other) = ratio_from_any(other) else {
            return Ok(py.NotImplemented());
        };
        let res = match op {
            CompareOp::Eq => self.inner == other,
            CompareOp::Ne => self.inner != other,
            CompareOp::Lt => self.inner < other,
            CompareOp::Le => self.inner <= other,
            CompareOp::Gt => self.inner > other,
            CompareOp::Ge => self.inner >= other,
        };
        res.into_py_any(py)
    }

    fn __neg__(&self) -> PyRatio {
        PyRatio::wrap(-&self.inner)
    }

    fn __add__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        match ratio_from_any(other) {
            Ok(o) => PyRatio::wrap(&self.inner + &o).into_py_any(py),
            Err(_) => Ok(py.NotImplemented()),
        }
    }

    fn __radd__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        self.__add__(py, other)
    }

    fn __sub__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        match ratio_from_any(other) {
            Ok(o) => PyRatio::wrap(&self.inner - &o).into_py_any(py),
            Err(_) => Ok(py.NotImplemented()),
        }
    }

    fn __rsub__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        match ratio_from_any(other) {
            Ok(o) => PyRatio::wrap(&o - &self.inner).into_py_any(py),
            Err(_) => Ok(py.NotImplemented()),
        }
    }

    fn __mul__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        match ratio_from_any(other) {
            Ok(o) => PyRatio::wrap(&self.inner * &o).into_py_any(py),
            Err(_) => Ok(py.NotImplemented()),
        }
    }

    fn __rmul__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        self.__mul__(py, other)
    }

    fn __truediv__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        match ratio_from_any(other) {
            Ok(o) if o.is_zero() => Err(PyZeroDivisionError::new_err("division by zero")),
            Ok(o) => PyRatio::wrap(&self.inner / &o).into_py_any(py),
            Err(_) => Ok(py.NotImplemented()),
        }
    }

    fn __rtruediv__(&self, py: Python<'_>, other: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        if self.inner.is_zero() {
            return Err(PyZeroDivisionError::new_err("division by zero"));
        }
        match ratio_from_any(other) {
            Ok(o) => PyRatio::wrap(&o / &self.inner).into_py_any(py),
            Err(_) => Ok(py.NotImplemented()),
        }
    }
}

/// Result of an exhaustive enumeration over all arrangements.
#[pyclass(frozen, name = "ExactCounts")]
struct PyExactCounts {
    inner: ExactCounts,
}

#[pymethods]
impl PyExactCounts {
    /// Number of distinct arrangements considered.
    #[getter]
    fn total(&self) -> u64 {
        self.inner.total
    }

    /// Arrangements whose running sum stays strictly positive.
    #[getter]
    fn desirable(&self) -> u64 {
        self.inner.desirable
    }

    /// Arrangements whose running sum never goes negative.
    #[getter]
    fn cute(&self) -> u64 {
        self.inner.cute
    }

    /// Probability of a desirable arrangement.
    #[getter]
    fn p(&self) -> PyRatio {
        PyRatio::wrap(self.inner.p.clone())
    }

    /// Probability of a cute arrangement.
    #[getter]
    fn p_star(&self) -> PyRatio {
        PyRatio::wrap(self.inner.p_star.clone())
    }

    fn __repr__(&self) -> String {
        format!(
            "ExactCounts(total={}, desirable={}, cute={}, p={}, p_star={})",
            self.inner.total, self.inner.desirable, self.inner.cute, self.inner.p, self.inner.p_star
        )
    }
}

/// Monte Carlo estimate together with its sampling parameters.
#[pyclass(frozen, name = "SampleEstimate")]
struct PySampleEstimate {
    inner: SampleEstimate,
}

#[pymethods]
impl PySampleEstimate {
    #[getter]
    fn n(&self) -> u64 {
        self.inner.n
    }

    #[getter]
    fn seed(&self) -> u64 {
        self.inner.seed
    }

    #[getter]
    fn workers(&self) -> u64 {
        self.inner.workers
    }

    #[getter]
    fn desirable(&self) -> u64 {
        self.inner.desirable
    }

    #[getter]
    fn cute(&self) -> u64 {
        self.inner.cute
    }

    #[getter]
    fn p_hat(&self) -> f64 {
        self.inner.p_hat
    }

    #[getter]
    fn p_star_hat(&self) -> f64 {
        self.inner.p_star_hat
    }

    #[getter]
    fn std_err_p(&self) -> f64 {
        self.inner.std_err_p
    }

    #[getter]
    fn std_err_p_star(&self) -> f64 {
        self.inner.std_err_p_star
    }

    fn __repr__(&self) -> String {
        format!(
            "SampleEstimate(n={}, seed={}, workers={}, p_hat={}, p_star_hat={})",
            self.inner.n, self.inner.seed, self.inner.workers, self.inner.p_hat, self.inner.p_star_hat
        )
    }
}

fn inequality_dict<'py>(py: Python<'py>, c: &InequalityCheck) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("lhs", PyRatio::wrap(c.lhs.clone()))?;
    d.set_item("rhs", PyRatio::wrap(c.rhs.clone()))?;
    d.set_item("holds", c.holds)?;
    Ok(d)
}

/// Count desirable and cute arrangements of `a` A-votes and `b` B-votes.
#[pyfunction]
#[pyo3(signature = (a, b, mu, budget = None))]
fn count_exact(
    a: u64,
    b: u64,
    mu: &Bound<'_, PyAny>,
    budget: Option<u64>,
) -> PyResult<PyExactCounts> {
    let spec = spec_for(a, b, mu)?;
    let counts = match budget {
        Some(limit) => ballot_core::enumeration::count_exact_with_budget(&spec, limit),
        None => ballot_core::enumeration::count_exact(&spec),
    }
    .map_err(to_py_err)?;
    Ok(PyExactCounts { inner: counts })
}

/// Count over distinct arrangements of `a` unit A-votes and one B-vote per
/// listed weight; `mu` scales every B-vote on top of its weight.
#[pyfunction]
#[pyo3(signature = (a, weights, mu, budget = None))]
fn count_exact_weighted(
    a: u64,
    weights: Vec<Bound<'_, PyAny>>,
    mu: &Bound<'_, PyAny>,
    budget: Option<u64>,
) -> PyResult<PyExactCounts> {
    let wspec = wspec_for(a, &weights, mu)?;
    let counts = match budget {
        Some(limit) => ballot_core::enumeration::count_exact_weighted_with_budget(&wspec, limit),
        None => ballot_core::enumeration::count_exact_weighted(&wspec),
    }
    .map_err(to_py_err)?;
    Ok(PyExactCounts { inner: counts })
}

/// First `m + 1` coefficients of the series recurrence for ratio `mu`.
#[pyfunction]
fn takacs_coefficients(mu: &Bound<'_, PyAny>, m: u64) -> PyResult<Vec<PyRatio>> {
    let coeffs = ballot_core::takacs::takacs_coefficients(&ratio_from_any(mu)?, m)
        .map_err(to_py_err)?;
    Ok(coeffs.values().iter().cloned().map(PyRatio::wrap).collect())
}

/// Desirable probability through the coefficient series.
#[pyfunction]
fn takacs_probability(a: u64, b: u64, mu: &Bound<'_, PyAny>) -> PyResult<PyRatio> {
    let spec = spec_for(a, b, mu)?;
    ballot_core::takacs::takacs_probability(&spec)
        .map(PyRatio::wrap)
        .map_err(to_py_err)
}

/// Floor sandwich `(lower, upper)` for the desirable probability; needs
/// `a > mu*b`.
#[pyfunction]
fn theorem1_bounds(a: u64, b: u64, mu: &Bound<'_, PyAny>) -> PyResult<(PyRatio, PyRatio)> {
    let spec = spec_for(a, b, mu)?;
    let pair = ballot_core::bounds::theorem1_bounds(&spec).map_err(to_py_err)?;
    Ok((PyRatio::wrap(pair.lower), PyRatio::wrap(pair.upper)))
}

/// Floor sandwich `(lower, upper)` for the cute probability; needs
/// `a >= mu*b`.
#[pyfunction]
fn theorem2_bounds(a: u64, b: u64, mu: &Bound<'_, PyAny>) -> PyResult<(PyRatio, PyRatio)> {
    let spec = spec_for(a, b, mu)?;
    let pair = ballot_core::bounds::theorem2_bounds(&spec).map_err(to_py_err)?;
    Ok((PyRatio::wrap(pair.lower), PyRatio::wrap(pair.upper)))
}

/// Exact `(p, p_star)` in closed form when `mu` is a nonnegative integer,
/// `None` otherwise.
#[pyfunction]
fn classical_closed_forms(
    a: u64,
    b: u64,
    mu: &Bound<'_, PyAny>,
) -> PyResult<Option<(PyRatio, PyRatio)>> {
    let spec = spec_for(a, b, mu)?;
    Ok(ballot_core::bounds::classical_closed_forms(&spec)
        .map(|f| (PyRatio::wrap(f.p), PyRatio::wrap(f.p_star))))
}

/// Sandwich `(lower, upper, integer_upper)` for the weighted desirable
/// probability; `integer_upper` is the sharper cap available when `mu` and
/// every weight are integers.
#[pyfunction]
fn weighted_bounds(
    a: u64,
    weights: Vec<Bound<'_, PyAny>>,
    mu: &Bound<'_, PyAny>,
) -> PyResult<(PyRatio, PyRatio, Option<PyRatio>)> {
    let wspec = wspec_for(a, &weights, mu)?;
    let b = ballot_core::bounds::weighted_bounds(&wspec);
    Ok((
        PyRatio::wrap(b.lower),
        PyRatio::wrap(b.upper),
        b.integer_upper.map(PyRatio::wrap),
    ))
}

/// Check the reflection counting inequalities against an exhaustive count.
///
/// Returns a dict with optional `"undesirable"` and `"ugly"` entries, each
/// `{"lhs", "rhs", "holds"}`, plus an overall `"passed"` flag. An entry is
/// `None` when the instance lies outside that inequality's domain.
#[pyfunction]
#[pyo3(signature = (a, b, mu, budget = None))]
fn reflection_counting_check<'py>(
    py: Python<'py>,
    a: u64,
    b: u64,
    mu: &Bound<'_, PyAny>,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let spec = spec_for(a, b, mu)?;
    let counts = match budget {
        Some(limit) => ballot_core::enumeration::count_exact_with_budget(&spec, limit),
        None => ballot_core::enumeration::count_exact(&spec),
    }
    .map_err(to_py_err)?;
    let report = ballot_core::bounds::reflection_counting_check(&spec, &counts);
    let d = PyDict::new(py);
    d.set_item(
        "undesirable",
        report
            .undesirable
            .as_ref()
            .map(|c| inequality_dict(py, c))
            .transpose()?,
    )?;
    d.set_item(
        "ugly",
        report
            .ugly
            .as_ref()
            .map(|c| inequality_dict(py, c))
            .transpose()?,
    )?;
    d.set_item("passed", report.passed)?;
    Ok(d)
}

/// Rotate a sequence to its canonical cute form.
///
/// Returns `(pivot_index, rotated)` where the rotation starts after the
/// first prefix minimum of the running sum.
#[pyfunction]
fn canonical_cute_rotation(sequence: &str, mu: &Bound<'_, PyAny>) -> PyResult<(u64, String)> {
    let seq = seq_for(sequence)?;
    let (pivot, rotated) =
        ballot_core::cycle::canonical_cute_rotation(&seq, &ratio_from_any(mu)?)
            .map_err(to_py_err)?;
    Ok((pivot, rotated.to_string()))
}

/// Offsets `r` in `1..=len` whose rotation of a cute base stays cute.
#[pyfunction]
fn cute_rotation_offsets(sequence: &str, mu: &Bound<'_, PyAny>) -> PyResult<Vec<u64>> {
    let seq = seq_for(sequence)?;
    ballot_core::cycle::cute_rotation_offsets(&seq, &ratio_from_any(mu)?).map_err(to_py_err)
}

/// Full rotation analysis of a sequence.
///
/// Returns a dict with the canonical `"base_sequence"`, its
/// `"pivot_index"`, the base's `"prefix_sums"`, and the
/// `"cute_rotation_offsets"` and `"desirable_rotation_offsets"` lists.
#[pyfunction]
fn analyze_rotations<'py>(
    py: Python<'py>,
    sequence: &str,
    mu: &Bound<'_, PyAny>,
) -> PyResult<Bound<'py, PyDict>> {
    let seq = seq_for(sequence)?;
    let analysis =
        ballot_core::cycle::analyze_rotations(&seq, &ratio_from_any(mu)?).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("base_sequence", analysis.base_sequence.to_string())?;
    d.set_item("pivot_index", analysis.pivot_index)?;
    d.set_item(
        "prefix_sums",
        analysis
            .prefix_sums
            .iter()
            .cloned()
            .map(PyRatio::wrap)
            .collect::<Vec<_>>(),
    )?;
    d.set_item("cute_rotation_offsets", analysis.cute_rotation_offsets)?;
    d.set_item(
        "desirable_rotation_offsets",
        analysis.desirable_rotation_offsets,
    )?;
    Ok(d)
}

/// Compare a sequence's cute and desirable rotation counts against the
/// cycle-lemma bounds.
#[pyfunction]
fn rotation_count_bounds_check<'py>(
    py: Python<'py>,
    sequence: &str,
    mu: &Bound<'_, PyAny>,
) -> PyResult<Bound<'py, PyDict>> {
    let seq = seq_for(sequence)?;
    let report = ballot_core::cycle::rotation_count_bounds_check(&seq, &ratio_from_any(mu)?);
    let d = PyDict::new(py);
    d.set_item("total_rotations", report.total_rotations)?;
    d.set_item("cute_rotations", report.cute_rotations)?;
    d.set_item("desirable_rotations", report.desirable_rotations)?;
    d.set_item("cute_bound", report.cute_bound)?;
    d.set_item("desirable_bound", report.desirable_bound)?;
    d.set_item("passed", report.passed)?;
    Ok(d)
}

/// Verify that summing cute rotations over every arrangement equals
/// `(a + b)` times the cute count, and likewise for desirable.
#[pyfunction]
#[pyo3(signature = (a, b, mu, budget = None))]
fn rotation_average_identity_check<'py>(
    py: Python<'py>,
    a: u64,
    b: u64,
    mu: &Bound<'_, PyAny>,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let spec = spec_for(a, b, mu)?;
    let report = match budget {
        Some(limit) => {
            ballot_core::cycle::rotation_average_identity_check_with_budget(&spec, limit)
        }
        None => ballot_core::cycle::rotation_average_identity_check(&spec),
    }
    .map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("counts", PyExactCounts { inner: report.counts })?;
    d.set_item("cute_rotation_sum", report.cute_rotation_sum)?;
    d.set_item("desirable_rotation_sum", report.desirable_rotation_sum)?;
    d.set_item("holds", report.holds)?;
    Ok(d)
}

/// Estimate both probabilities by sampling `n` random arrangements.
///
/// Fixed `(seed, workers)` reproduce the estimate bit for bit.
#[pyfunction]
#[pyo3(signature = (a, b, mu, n, seed = 0, workers = 1))]
fn sample_probability(
    a: u64,
    b: u64,
    mu: &Bound<'_, PyAny>,
    n: u64,
    seed: u64,
    workers: u64,
) -> PyResult<PySampleEstimate> {
    let spec = spec_for(a, b, mu)?;
    ballot_core::montecarlo::sample_probability_with_workers(&spec, n, seed, workers)
        .map(|inner| PySampleEstimate { inner })
        .map_err(to_py_err)
}

/// Running sums `S_r = a_r - mu * b_r` for `r = 1..=len`.
#[pyfunction]
fn partial_sums(sequence: &str, mu: &Bound<'_, PyAny>) -> PyResult<Vec<PyRatio>> {
    let seq = seq_for(sequence)?;
    Ok(ballot_core::partial_tallies(&seq, &ratio_from_any(mu)?)
        .into_iter()
        .map(|t| PyRatio::wrap(t.s_r))
        .collect())
}

/// Whether every running sum is strictly positive.
#[pyfunction]
fn is_desirable(sequence: &str, mu: &Bound<'_, PyAny>) -> PyResult<bool> {
    let seq = seq_for(sequence)?;
    Ok(ballot_core::enumeration::is_desirable(&seq, &ratio_from_any(mu)?))
}

/// Whether no running sum is negative.
#[pyfunction]
fn is_cute(sequence: &str, mu: &Bound<'_, PyAny>) -> PyResult<bool> {
    let seq = seq_for(sequence)?;
    Ok(ballot_core::enumeration::is_cute(&seq, &ratio_from_any(mu)?))
}

/// Exact-arithmetic toolkit for the generalized ballot problem.
///
/// Sequences are strings over `A` and `B`; every ratio argument accepts a
/// `Ratio`, `int`, `str`, or `fractions.Fraction`, and floats are rejected
/// to keep results exact. Invalid inputs raise `ValueError`; exceeding an
/// enumeration budget raises `RuntimeError`.
#[pymodule]
fn ballot_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_ENUM_BUDGET", DEFAULT_ENUM_BUDGET)?;
    m.add_class::<PyRatio>()?;
    m.add_class::<PyExactCounts>()?;
    m.add_class::<PySampleEstimate>()?;
    m.add_function(wrap_pyfunction!(count_exact, m)?)?;
    m.add_function(wrap_pyfunction!(count_exact_weighted, m)?)?;
    m.add_function(wrap_pyfunction!(takacs_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(takacs_probability, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(classical_closed_forms, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(reflection_counting_check, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_cute_rotation, m)?)?;
    m.add_function(wrap_pyfunction!(cute_rotation_offsets, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_rotations, m)?)?;
    m.add_function(wrap_pyfunction!(rotation_count_bounds_check, m)?)?;
    m.add_function(wrap_pyfunction!(rotation_average_identity_check, m)?)?;
    m.add_function(wrap_pyfunction!(sample_probability, m)?)?;
    m.add_function(wrap_pyfunction!(partial_sums, m)?)?;
    m.add_function(wrap_pyfunction!(is_desirable, m)?)?;
    m.add_function(wrap_pyfunction!(is_cute, m)?)?;
    Ok(())
}
