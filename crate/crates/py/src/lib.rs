//! Python bindings: exact counts, identity checks, proofs, decompositions,
//! sampling and rendering. Rationals cross the boundary as
//! `fractions.Fraction` (ints and `"p/q"` strings are accepted on input).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use pathsum::exact::{self, parse_rational, Limit, Rational};
use pathsum::identities::{self as ids, CheckReport, IdentityId, Point};
use pathsum::prove::{self, ProofCertificate, Verdict};
use pathsum::render::{self, Format, GridScene};
use pathsum::walks::{self, DecompParams, Decomposition, DecompositionReport, Path, PathConstraint};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(s) = obj.extract::<String>() {
        return parse_rational(&s).ok_or_else(|| value_error(format!("not a rational: {s:?}")));
    }
    let q: Rational = obj.extract()?;
    Ok(q)
}

fn opt_rational(obj: Option<&Bound<'_, PyAny>>) -> PyResult<Option<Rational>> {
    obj.map(rational).transpose()
}

fn identity_id(name: &str) -> PyResult<IdentityId> {
    name.parse().map_err(|e: String| PyKeyError::new_err(e))
}

fn definition(name: &str, mutate: bool) -> PyResult<ids::IdentityDef> {
    let id = identity_id(name)?;
    if mutate {
        ids::mutated(id).ok_or_else(|| value_error(format!("no mutant registered for {id}")))
    } else {
        Ok(ids::identity(id).clone())
    }
}

/// `None` stands for a pole.
fn limit_value(l: &Limit) -> Option<Rational> {
    l.value().cloned()
}

#[pyclass(name = "CheckReport", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCheckReport(CheckReport);

#[pymethods]
impl PyCheckReport {
    #[getter]
    fn identity(&self) -> &str {
        &self.0.identity
    }
    #[getter]
    fn n(&self) -> i64 {
        self.0.n
    }
    #[getter]
    fn m(&self) -> Option<Rational> {
        self.0.m.clone()
    }
    #[getter]
    fn r(&self) -> Option<Rational> {
        self.0.r.clone()
    }
    /// `None` at a pole.
    #[getter]
    fn lhs(&self) -> Option<Rational> {
        limit_value(&self.0.lhs)
    }
    #[getter]
    fn rhs(&self) -> Option<Rational> {
        limit_value(&self.0.rhs)
    }
    #[getter]
    fn status(&self) -> &'static str {
        self.0.status.as_str()
    }
    fn __repr__(&self) -> String {
        let r = &self.0;
        format!("CheckReport({} n={} lhs={} rhs={} {})", r.identity, r.n, r.lhs, r.rhs, r.status)
    }
}

#[pyclass(name = "ProofCertificate", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCertificate(ProofCertificate);

#[pymethods]
impl PyCertificate {
    #[getter]
    fn identity(&self) -> &str {
        &self.0.identity
    }
    #[getter]
    fn n(&self) -> i64 {
        self.0.n
    }
    #[getter]
    fn degree_bound(&self) -> usize {
        self.0.degree_bound
    }
    #[getter]
    fn evaluations(&self) -> usize {
        self.0.evaluations
    }
    #[getter]
    fn verified(&self) -> bool {
        self.0.is_verified()
    }
    /// `(m, r)` of the first failing grid point, `r` being `None` when absent.
    #[getter]
    fn counterexample(&self) -> Option<(Rational, Option<Rational>)> {
        match &self.0.verdict {
            Verdict::Verified => None,
            Verdict::RefutedAt { m, r } => Some((m.clone(), r.clone())),
        }
    }
    fn __str__(&self) -> String {
        self.0.to_string()
    }
    fn __repr__(&self) -> String {
        format!("ProofCertificate({} n={}: {})", self.0.identity, self.0.n, self.0)
    }
}

#[pyclass(name = "DecompositionReport", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDecomposition(DecompositionReport);

#[pymethods]
impl PyDecomposition {
    #[getter]
    fn which(&self) -> &'static str {
        self.0.which.id()
    }
    #[getter]
    fn steps(&self) -> i64 {
        self.0.params.steps
    }
    #[getter]
    fn end(&self) -> i64 {
        self.0.params.end
    }
    #[getter]
    fn split(&self) -> Option<i64> {
        self.0.params.split
    }
    #[getter]
    fn lhs(&self) -> BigInt {
        self.0.lhs.clone()
    }
    #[getter]
    fn terms(&self) -> Vec<BigInt> {
        self.0.terms.clone()
    }
    #[getter]
    fn status(&self) -> &'static str {
        self.0.status.as_str()
    }
    #[getter]
    fn reason(&self) -> Option<String> {
        self.0.reason.clone()
    }
    fn __repr__(&self) -> String {
        let r = &self.0;
        format!("DecompositionReport({} {:?} {} = {:?} {})", r.which, r.params, r.lhs, r.terms, r.status)
    }
}

#[pyclass(name = "Histogram", frozen, skip_from_py_object)]
struct PyHistogram(walks::Histogram);

#[pymethods]
impl PyHistogram {
    #[getter]
    fn samples(&self) -> u64 {
        self.0.samples
    }
    #[getter]
    fn seed(&self) -> u64 {
        self.0.seed
    }
    #[getter]
    fn ends(&self) -> BTreeMap<i64, u64> {
        self.0.ends.clone()
    }
    #[getter]
    fn touches(&self) -> BTreeMap<i64, u64> {
        self.0.touches.clone()
    }
    fn frequency(&self, end: i64) -> f64 {
        self.0.frequency(end)
    }
}

/// `P(N, m)`.
#[pyfunction]
fn count_paths(steps: i64, end: i64) -> BigInt {
    walks::count_paths(steps, end)
}

/// `S(N, m, r)`, `m >= 0`.
#[pyfunction]
fn count_touching(steps: i64, end: i64, barrier: i64) -> PyResult<BigInt> {
    walks::count_touching(steps, end, barrier).map_err(value_error)
}

/// `T(N, m, r)`, `m >= 0`, `r < 0`.
#[pyfunction]
fn count_avoiding(steps: i64, end: i64, barrier: i64) -> PyResult<BigInt> {
    walks::count_avoiding(steps, end, barrier).map_err(value_error)
}

/// `T(N, m, -depth)` from its closed form, `depth` in `1..=4`.
#[pyfunction]
fn closed_form_t(steps: i64, end: i64, depth: u32) -> PyResult<Rational> {
    walks::closed_form_t(steps, end, depth).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (steps, end, avoid=None, limit=1000))]
fn enumerate_paths(steps: i64, end: i64, avoid: Option<i64>, limit: usize) -> PyResult<Vec<String>> {
    let mut constraints = vec![PathConstraint::EndAt(end)];
    constraints.extend(avoid.map(PathConstraint::Avoids));
    let paths = walks::enumerate_paths(steps, &constraints, limit).map_err(value_error)?;
    Ok(paths.iter().map(Path::to_string).collect())
}

/// Generalized binomial `x(x-1)...(x-j+1)/j!`; zero for `j < 0`.
#[pyfunction]
fn binomial(x: &Bound<'_, PyAny>, j: i64) -> PyResult<Rational> {
    Ok(exact::binomial(&rational(x)?, j))
}

/// Identity names, `I1` to `I10`.
#[pyfunction]
fn identities() -> Vec<String> {
    ids::registry().iter().map(|d| d.name.clone()).collect()
}

#[pyfunction]
#[pyo3(signature = (identity, n, m=None, r=None, mutate=false))]
fn evaluate(
    identity: &str,
    n: i64,
    m: Option<&Bound<'_, PyAny>>,
    r: Option<&Bound<'_, PyAny>>,
    mutate: bool,
) -> PyResult<PyCheckReport> {
    let def = definition(identity, mutate)?;
    let point = Point::new(opt_rational(m)?, opt_rational(r)?);
    ids::eval_identity(&def, n, &point).map(PyCheckReport).map_err(value_error)
}

/// Every `n` in `0..=n_max` times the cartesian product of `ms` and `rs`
/// (restricted to the identity's parameters).
#[pyfunction]
#[pyo3(signature = (identity, n_max, ms=Vec::new(), rs=Vec::new()))]
fn sweep(
    identity: &str,
    n_max: i64,
    ms: Vec<Bound<'_, PyAny>>,
    rs: Vec<Bound<'_, PyAny>>,
) -> PyResult<Vec<PyCheckReport>> {
    let def = definition(identity, false)?;
    let ms: Vec<Rational> = ms.iter().map(rational).collect::<PyResult<_>>()?;
    let rs: Vec<Rational> = rs.iter().map(rational).collect::<PyResult<_>>()?;
    let points = ids::points_for(&def, &ms, &rs);
    let reports = ids::sweep(&def, n_max, &points).map_err(value_error)?;
    Ok(reports.into_iter().map(PyCheckReport).collect())
}

#[pyfunction]
#[pyo3(signature = (identity, n, mutate=false))]
fn verify_polynomial(identity: &str, n: i64, mutate: bool) -> PyResult<PyCertificate> {
    let def = definition(identity, mutate)?;
    prove::verify_polynomial(&def, n).map(PyCertificate).map_err(value_error)
}

#[pyfunction]
fn verify_induction(identity: &str, n_max: i64) -> PyResult<Vec<PyCertificate>> {
    let def = definition(identity, false)?;
    let certs = prove::verify_induction(&def, n_max).map_err(value_error)?;
    Ok(certs.into_iter().map(PyCertificate).collect())
}

/// Decomposition ids.
#[pyfunction]
fn decompositions() -> Vec<&'static str> {
    Decomposition::ALL.iter().map(|d| d.id()).collect()
}

#[pyfunction]
#[pyo3(signature = (which, steps, end, split=None))]
fn check_decomposition(which: &str, steps: i64, end: i64, split: Option<i64>) -> PyResult<PyDecomposition> {
    let which: Decomposition = which.parse().map_err(|e: String| PyKeyError::new_err(e))?;
    Ok(PyDecomposition(walks::check_decomposition(which, DecompParams { steps, end, split })))
}

#[pyfunction]
#[pyo3(signature = (steps, samples, seed=1))]
fn simulate(steps: i64, samples: u64, seed: u64) -> PyResult<PyHistogram> {
    walks::simulate(steps, samples, seed).map(PyHistogram).map_err(value_error)
}

/// ASCII drawing of a walk given as a string of `L`/`R` steps.
#[pyfunction]
#[pyo3(signature = (path, barrier=None, reflect=false))]
fn render_walk(path: &str, barrier: Option<i64>, reflect: bool) -> PyResult<String> {
    let path: Path = path.parse().map_err(value_error)?;
    let scene = GridScene::fitted(path.len(), Some(path), barrier, reflect);
    render::render_walk(&scene).map_err(value_error)
}

/// One of the two built-in scenes.
#[pyfunction]
fn figure(number: u8) -> PyResult<String> {
    let scene = match number {
        1 => render::figure_one(),
        2 => render::figure_two(),
        _ => return Err(value_error("figure must be 1 or 2")),
    };
    render::render_walk(&scene).map_err(value_error)
}

/// Reports as `csv` or `jsonl` text.
#[pyfunction]
#[pyo3(signature = (reports, format="csv"))]
fn emit_report(reports: Vec<PyRef<'_, PyCheckReport>>, format: &str) -> PyResult<String> {
    let format: Format = format.parse().map_err(value_error)?;
    let reports: Vec<CheckReport> = reports.iter().map(|r| r.0.clone()).collect();
    Ok(render::emit_report(&reports, format))
}

#[pymodule]
fn pathsum_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCheckReport>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyDecomposition>()?;
    m.add_class::<PyHistogram>()?;
    m.add_function(wrap_pyfunction!(count_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_touching, m)?)?;
    m.add_function(wrap_pyfunction!(count_avoiding, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_t, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(identities, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(verify_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify_induction, m)?)?;
    m.add_function(wrap_pyfunction!(decompositions, m)?)?;
    m.add_function(wrap_pyfunction!(check_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(render_walk, m)?)?;
    m.add_function(wrap_pyfunction!(figure, m)?)?;
    m.add_function(wrap_pyfunction!(emit_report, m)?)?;
    Ok(())
}
