//! Python bindings: `import w0engine`.

use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use w0_core::cli::{self, GridSpec, Query, WeightInput};
use w0_core::linalg::{fmt_q, parse_q, Vector};
use w0_core::oracle;
use w0_core::orthoset;
use w0_core::realforms::{self, RestrictedType};
use w0_core::reducer;
use w0_core::so1n;
use w0_core::subalg::{build_s, golden::GoldenTable};
use w0_core::{CartanType, Error, RootSystem};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::UnknownAlgebra { .. } => PyKeyError::new_err(e.to_string()),
        Error::Parse(_) | Error::InvalidWeight(_) | Error::ParameterRange { .. } | Error::InvalidSystem { .. } | Error::NotARoot { .. } => {
            PyValueError::new_err(e.to_string())
        }
        Error::Unsupported(_) | Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn weight_input(w: &Bound<'_, PyAny>) -> PyResult<WeightInput> {
    if let Ok(s) = w.extract::<String>() {
        return WeightInput::parse(&s).map_err(py_err);
    }
    let labels: Vec<i64> = w
        .extract()
        .map_err(|_| PyValueError::new_err("weight must be a string like 'eps:1,1,0' or a list of Dynkin labels"))?;
    Ok(WeightInput::Fund(labels))
}

fn eps_vector(coords: Vec<String>) -> PyResult<Vector> {
    Ok(Vector(coords.iter().map(|c| parse_q(c)).collect::<Result<_, _>>().map_err(py_err)?))
}

fn strings(v: &Vector) -> Vec<String> {
    v.0.iter().map(fmt_q).collect()
}

/// Signs of w0 on the invariant space: `plus` eigenvalues +1, `minus` eigenvalues −1.
#[pyclass(name = "W0Action", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyW0Action {
    #[pyo3(get)]
    plus: u64,
    #[pyo3(get)]
    minus: u64,
}

impl From<reducer::W0Action> for PyW0Action {
    fn from(a: reducer::W0Action) -> Self {
        PyW0Action {
            plus: a.plus,
            minus: a.minus,
        }
    }
}

#[pymethods]
impl PyW0Action {
    #[new]
    fn new(plus: u64, minus: u64) -> Self {
        PyW0Action { plus, minus }
    }

    #[getter]
    fn dim(&self) -> u64 {
        self.plus + self.minus
    }

    #[getter]
    fn verdict(&self) -> String {
        reducer::W0Action::new(self.plus, self.minus).verdict().to_string()
    }

    fn tensor(&self, other: &PyW0Action) -> PyW0Action {
        reducer::W0Action::new(self.plus, self.minus)
            .tensor(&reducer::W0Action::new(other.plus, other.minus))
            .into()
    }

    fn __repr__(&self) -> String {
        format!("W0Action(plus={}, minus={})", self.plus, self.minus)
    }
}

/// A catalogued real form.
#[pyclass(name = "RealForm", frozen)]
struct PyRealForm {
    inner: std::sync::Arc<realforms::RealForm>,
}

#[pymethods]
impl PyRealForm {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyRealForm {
            inner: realforms::lookup(name).map_err(py_err)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn complex_type(&self) -> String {
        self.inner.complex_type().to_string()
    }

    #[getter]
    fn real_rank(&self) -> Option<usize> {
        self.inner.datum().map(|d| d.real_rank())
    }

    #[getter]
    fn restricted_type(&self) -> Option<String> {
        self.inner.datum().and_then(|d| d.restricted_type).map(|t| t.to_string())
    }

    fn is_split(&self) -> bool {
        self.inner.is_split()
    }

    fn is_quasi_split(&self) -> bool {
        self.inner.is_quasi_split()
    }

    fn is_compact(&self) -> bool {
        self.inner.is_compact()
    }

    /// Summary of the subalgebra 𝔰, e.g. "so(1,2)^2 + R^1".
    fn s_decomposition(&self) -> PyResult<String> {
        Ok(build_s(&self.inner).map_err(py_err)?.summary())
    }

    /// Ξ as ε-coordinate strings in 𝔥*.
    fn ortho_set(&self) -> PyResult<Vec<Vec<String>>> {
        let d = self
            .inner
            .datum()
            .ok_or_else(|| PyValueError::new_err("complex forms have no restricted roots here"))?;
        Ok(orthoset::ortho_set_for(d).map_err(py_err)?.iter().map(strings).collect())
    }

    /// The w0 action on `V_λ^𝔩`; `weight` is Dynkin labels or "eps:..."/"fund:...".
    fn w0_action(&self, weight: &Bound<'_, PyAny>) -> PyResult<PyW0Action> {
        let input = weight_input(weight)?;
        let (eps, _) = cli::Coordinates::of(&self.inner)
            .and_then(|c| c.resolve(&input))
            .map_err(py_err)?;
        Ok(reducer::w0_action_any(&self.inner, &eps).map_err(py_err)?.into())
    }

    /// Matrix oracle on the adjoint ("adjoint") or traceless Sym² ("sym2") representation.
    #[pyo3(signature = (rep = "adjoint"))]
    fn oracle_w0(&self, rep: &str) -> PyResult<PyW0Action> {
        let m = match rep {
            "adjoint" => oracle::adjoint_rep(&self.inner),
            "sym2" => oracle::sym2_standard_rep(&self.inner),
            _ => return Err(PyValueError::new_err("rep must be 'adjoint' or 'sym2'")),
        }
        .map_err(py_err)?;
        Ok(oracle::oracle_w0_on_invariants(&m, &self.inner).map_err(py_err)?.into())
    }

    fn __repr__(&self) -> String {
        format!("RealForm({:?})", self.inner.name)
    }
}

/// Result of a single query.
#[pyclass(name = "Report", frozen)]
struct PyReport {
    #[pyo3(get)]
    algebra: String,
    #[pyo3(get)]
    weight_eps: Vec<String>,
    #[pyo3(get)]
    weight_fund: Vec<i64>,
    #[pyo3(get)]
    s_decomposition: Option<String>,
    #[pyo3(get)]
    action: PyW0Action,
    text: String,
    record: String,
}

impl From<cli::Report> for PyReport {
    fn from(r: cli::Report) -> Self {
        PyReport {
            algebra: r.algebra.clone(),
            weight_eps: strings(&r.weight_eps),
            weight_fund: r.weight_fund.clone(),
            s_decomposition: r.s_summary.clone(),
            action: r.action.into(),
            text: r.human(),
            record: serde_json::to_string(&r.record()).expect("records serialize"),
        }
    }
}

#[pymethods]
impl PyReport {
    /// The machine record as a JSON string.
    fn to_json(&self) -> String {
        self.record.clone()
    }

    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("Report({})", self.record)
    }
}

#[pyfunction]
#[pyo3(signature = (algebra, weight, witness = false))]
fn query(algebra: &str, weight: &Bound<'_, PyAny>, witness: bool) -> PyResult<PyReport> {
    let q = Query {
        algebra: algebra.to_string(),
        weight: weight_input(weight)?,
        witness,
    };
    Ok(cli::run_query(&q).map_err(py_err)?.into())
}

#[pyfunction]
fn w0_action(algebra: &str, weight: &Bound<'_, PyAny>) -> PyResult<PyW0Action> {
    Ok(query(algebra, weight, false)?.action.clone())
}

/// Evaluates a grid such as "fund:0..2" or "eps:0..3;nonzero".
#[pyfunction]
fn batch(py: Python<'_>, algebra: &str, grid: &str) -> PyResult<Vec<PyReport>> {
    let spec = GridSpec::parse(grid).map_err(py_err)?;
    let rows = py.detach(|| cli::run_batch(algebra, &spec, false)).map_err(py_err)?;
    Ok(rows.into_iter().map(Into::into).collect())
}

/// Dimension of the invariants of so(1,n) on `V_λ` (0 or 1).
#[pyfunction]
fn so1n_dim(n: usize, eps: Vec<String>) -> PyResult<usize> {
    let w = so1n::So1nWeight::new(n, eps_vector(eps)?).map_err(py_err)?;
    Ok(so1n::so1n_dim(&w))
}

#[pyfunction]
fn so1n_sign(n: usize, eps: Vec<String>) -> PyResult<i32> {
    let w = so1n::So1nWeight::new(n, eps_vector(eps)?).map_err(py_err)?;
    so1n::so1n_sign(&w).map_err(py_err)
}

/// The two rows of the invariant tableau of `λ₁ε₁ + λ₂ε₂`.
#[pyfunction]
fn invariant_tableau(l1: i64, l2: i64) -> PyResult<(String, String)> {
    let t = so1n::invariant_tableau(l1, l2).map_err(py_err)?;
    let [a, b] = t.rows();
    Ok((a.join(" "), b.join(" ")))
}

fn system(t: &str) -> PyResult<RootSystem> {
    let t: CartanType = t.parse().map_err(py_err)?;
    RootSystem::of_type(t).map_err(py_err)
}

#[pyfunction]
fn weyl_dimension(cartan_type: &str, labels: Vec<i64>) -> PyResult<u128> {
    let sys = system(cartan_type)?;
    if labels.len() != sys.rank() || labels.iter().any(|&x| x < 0) {
        return Err(PyValueError::new_err("labels must be dominant and of length rank"));
    }
    sys.weyl_dimension(&sys.from_int_labels(&labels))
        .ok_or_else(|| PyRuntimeError::new_err("dimension overflows u128"))
}

#[pyfunction]
fn weight_multiplicity(cartan_type: &str, labels: Vec<i64>, mu: Vec<i64>) -> PyResult<u64> {
    let sys = system(cartan_type)?;
    if mu.len() != sys.rank() {
        return Err(PyValueError::new_err("mu must have length rank"));
    }
    sys.weight_multiplicity(&sys.from_int_labels(&labels), &sys.from_int_labels(&mu))
        .map_err(py_err)
}

/// Ξ for a restricted type such as "C3" or "BC2", in its Bourbaki ε-coordinates.
#[pyfunction]
fn ortho_set(restricted_type: &str) -> PyResult<Vec<Vec<String>>> {
    let t = RestrictedType::parse(restricted_type).map_err(py_err)?;
    Ok(orthoset::ortho_set(t).map_err(py_err)?.roots.iter().map(strings).collect())
}

/// Names of the catalogued forms with complex rank at most `max_rank`.
#[pyfunction]
#[pyo3(signature = (max_rank = 4))]
fn instances(max_rank: usize) -> Vec<String> {
    realforms::instances(max_rank)
}

/// Runs the table check; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (max_rank = 8, exceptional = false))]
fn verify_golden(py: Python<'_>, max_rank: usize, exceptional: bool) -> (bool, String) {
    let report = py.detach(|| cli::verify_golden(GoldenTable::builtin(), max_rank, exceptional));
    (report.passed(), report.human())
}

#[pymodule]
fn w0engine(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyW0Action>()?;
    m.add_class::<PyRealForm>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(query, m)?)?;
    m.add_function(wrap_pyfunction!(w0_action, m)?)?;
    m.add_function(wrap_pyfunction!(batch, m)?)?;
    m.add_function(wrap_pyfunction!(so1n_dim, m)?)?;
    m.add_function(wrap_pyfunction!(so1n_sign, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(weight_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(ortho_set, m)?)?;
    m.add_function(wrap_pyfunction!(instances, m)?)?;
    m.add_function(wrap_pyfunction!(verify_golden, m)?)?;
    Ok(())
}
