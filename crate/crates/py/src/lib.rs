//! Python module `qdeform`: q-integers, q-rationals, friezes, q-reals,
//! q-sequences, Jones polynomials and the check suites.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

use qdeform::exactalg::{series_expand, IntPoly, LaurentPoly};
use qdeform::frieze::{
    classical_frieze, q_frieze, quiddity_from_triangulation, ClassicalFrieze, QFrieze, Quiddity,
    Triangulation,
};
use qdeform::qrat::CfForm;
use qdeform::qreal::{closed_form_series, quadratic_closed_form, radius_of_convergence, stabilize};
use qdeform::qseq::SeqKind;
use qdeform::{check, cli, knot, qcore, qrat, qseq};
use qdeform::{CFStream, QuadraticIrrational, Rational};

create_exception!(qdeform, QDeformError, PyValueError);

fn err(e: qdeform::Error) -> PyErr {
    QDeformError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = qdeform::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    match v {
        Value::Null => Ok(py.None().into_bound(py)),
        Value::Bool(b) => b.into_bound_py_any(py),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_bound_py_any(py),
            None => n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py),
        },
        Value::String(s) => s.into_bound_py_any(py),
        Value::Array(xs) => {
            let items = xs
                .iter()
                .map(|x| json_to_py(py, x))
                .collect::<PyResult<Vec<_>>>()?;
            Ok(PyList::new(py, items)?.into_any())
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, json_to_py(py, x)?)?;
            }
            Ok(d.into_any())
        }
    }
}

/// A Laurent polynomial in `q` with integer coefficients.
#[pyclass(name = "Poly", frozen, eq, skip_from_py_object, module = "qdeform")]
#[derive(Clone, PartialEq)]
pub struct PyPoly(pub LaurentPoly);

impl From<&IntPoly> for PyPoly {
    fn from(p: &IntPoly) -> Self {
        PyPoly(LaurentPoly::from(p))
    }
}

#[pymethods]
impl PyPoly {
    /// Parse `"1 + 2*q + q^-1"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        qdeform::exactalg::format::parse_laurent(text)
            .map(PyPoly)
            .map_err(err)
    }

    #[getter]
    fn min_exp(&self) -> i64 {
        self.0.min_exp()
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    /// Coefficient of `q^k`.
    fn coeff(&self, k: i64) -> BigInt {
        self.0.coeff(k)
    }

    fn at_one(&self) -> BigInt {
        self.0.eval_at_one()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }
}

/// The q-rational `[x]_q = num / den`.
#[pyclass(
    name = "QRational",
    frozen,
    eq,
    skip_from_py_object,
    module = "qdeform"
)]
#[derive(Clone, PartialEq)]
pub struct PyQRational(pub qdeform::QRational);

#[pymethods]
impl PyQRational {
    /// `QRational("5/2", form="hj")`; `form` is `regular`, `hj` or `matrix`.
    #[new]
    #[pyo3(signature = (x, form = "hj"))]
    fn new(x: &str, form: &str) -> PyResult<Self> {
        let form = match form {
            "regular" => CfForm::Regular,
            "hj" => CfForm::HJ,
            "matrix" => CfForm::Matrix,
            other => return Err(QDeformError::new_err(format!("unknown form {other:?}"))),
        };
        qdeform::QRational::with_form(&parse::<Rational>(x)?, form)
            .map(PyQRational)
            .map_err(err)
    }

    #[getter]
    fn x(&self) -> String {
        self.0.x().to_string()
    }

    #[getter]
    fn num(&self) -> PyPoly {
        self.0.num().into()
    }

    #[getter]
    fn den(&self) -> PyPoly {
        self.0.den().into()
    }

    /// `[x + k]_q`.
    fn translate(&self, k: i64) -> Self {
        PyQRational(qrat::psl2_translate(&self.0, k))
    }

    /// `[-1/x]_q`.
    fn neg_inv(&self) -> PyResult<Self> {
        qrat::psl2_neg_inv(&self.0).map(PyQRational).map_err(err)
    }

    /// `[-x]_q`.
    fn negate(&self) -> Self {
        PyQRational(qrat::psl2_negate(&self.0))
    }

    /// Taylor coefficients `q^0 .. q^(order-1)` (Laurent from the lowest power).
    fn series(&self, order: i64) -> PyResult<(i64, Vec<BigInt>)> {
        let s = series_expand(self.0.value(), order).map_err(err)?;
        Ok((s.min_exp(), s.coeffs().to_vec()))
    }

    fn unimodal(&self) -> (bool, bool) {
        let r = qrat::unimodality_check(&self.0);
        (r.num_unimodal, r.den_unimodal)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QRational('{}') = {}", self.0.x(), self.0)
    }
}

enum Pattern {
    Classical(ClassicalFrieze),
    Q(QFrieze),
}

/// A classical or q-deformed frieze pattern.
#[pyclass(name = "Frieze", frozen, module = "qdeform")]
pub struct PyFrieze {
    quiddity: Quiddity,
    pattern: Pattern,
}

impl PyFrieze {
    fn build(quiddity: Quiddity, q: bool) -> PyResult<Self> {
        let classical = classical_frieze(&quiddity).map_err(err)?;
        classical.verify_periodicity().map_err(err)?;
        let pattern = if q {
            Pattern::Q(q_frieze(&quiddity).map_err(err)?)
        } else {
            Pattern::Classical(classical)
        };
        Ok(PyFrieze { quiddity, pattern })
    }
}

#[pymethods]
impl PyFrieze {
    /// `Frieze([1, 4, 2, 1, 3, 2, 2], q=True)`.
    #[new]
    #[pyo3(signature = (quiddity, q = false))]
    fn new(quiddity: Vec<u64>, q: bool) -> PyResult<Self> {
        PyFrieze::build(Quiddity::new(quiddity).map_err(err)?, q)
    }

    /// `Frieze.from_triangulation("8:0-2,0-3,0-5,3-5,5-7")`.
    #[staticmethod]
    #[pyo3(signature = (text, q = false))]
    fn from_triangulation(text: &str, q: bool) -> PyResult<Self> {
        let t: Triangulation = parse(text)?;
        PyFrieze::build(quiddity_from_triangulation(&t).map_err(err)?, q)
    }

    #[getter]
    fn quiddity(&self) -> Vec<u64> {
        self.quiddity.cycle().to_vec()
    }

    #[getter]
    fn is_q(&self) -> bool {
        matches!(self.pattern, Pattern::Q(_))
    }

    /// Rows from the top row of ones: ints for a classical frieze, `Poly`
    /// for a q-frieze. Row `w + 1` holds `C[i][i + w]`.
    fn rows<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        match &self.pattern {
            Pattern::Classical(f) => f.rows().to_vec().into_bound_py_any(py),
            Pattern::Q(f) => f
                .rows()
                .iter()
                .map(|row| row.iter().map(PyPoly::from).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into_bound_py_any(py),
        }
    }

    /// Entry `C[i][j]`.
    fn entry<'py>(&self, py: Python<'py>, i: i64, j: i64) -> PyResult<Bound<'py, PyAny>> {
        match &self.pattern {
            Pattern::Classical(f) => f.entry(i, j).map_err(err)?.clone().into_bound_py_any(py),
            Pattern::Q(f) => PyPoly::from(f.entry(i, j).map_err(err)?).into_bound_py_any(py),
        }
    }

    fn ascii(&self) -> String {
        match &self.pattern {
            Pattern::Classical(f) => f.to_ascii(),
            Pattern::Q(f) => f.to_ascii(),
        }
    }

    fn to_json(&self) -> String {
        match &self.pattern {
            Pattern::Classical(f) => f.to_json().to_string(),
            Pattern::Q(f) => f.to_json().to_string(),
        }
    }

    fn __str__(&self) -> String {
        self.ascii()
    }
}

/// `[n]_q`; negative `n` gives a Laurent polynomial.
#[pyfunction]
fn q_int(n: i64) -> PyPoly {
    PyPoly(qcore::q_int(n).value)
}

#[pyfunction]
fn q_factorial(n: usize) -> PyPoly {
    (&qcore::q_factorial(n)).into()
}

#[pyfunction]
fn q_binomial(n: usize, m: i64) -> PyPoly {
    (&qcore::q_binomial(n, m)).into()
}

/// `X = R S' - S R'` for `a > b > 0`.
#[pyfunction]
fn x_polynomial(a: &str, b: &str) -> PyResult<PyPoly> {
    let qa = qdeform::QRational::new(&parse(a)?).map_err(err)?;
    let qb = qdeform::QRational::new(&parse(b)?).map_err(err)?;
    qrat::x_polynomial(&qa, &qb)
        .map(|p| (&p).into())
        .map_err(err)
}

/// `(path, x, QRational, edge weight)`.
type TreeNode = (String, String, PyQRational, Option<u32>);

/// Weighted Stern–Brocot tree to `depth`.
#[pyfunction]
fn stern_brocot(depth: usize) -> PyResult<Vec<TreeNode>> {
    let nodes = qrat::stern_brocot_enumerate(depth).map_err(err)?;
    Ok(nodes
        .into_iter()
        .map(|n| {
            (
                n.path,
                n.label.x().to_string(),
                PyQRational(n.label),
                n.edge_weight,
            )
        })
        .collect())
}

/// Certified Taylor coefficients of `[x]_q` for a continued-fraction
/// stream such as `"per=[1]"`: `(min_exp, coeffs, stabilized_upto)`.
#[pyfunction]
fn qreal(cf: &str, order: usize) -> PyResult<(i64, Vec<BigInt>, i64)> {
    let stream: CFStream = parse(cf)?;
    let v = stabilize(&stream, order).map_err(err)?;
    Ok((
        v.series.min_exp(),
        v.series.coeffs().to_vec(),
        v.stabilized_upto,
    ))
}

/// Closed form `(A + sqrt B) / C` of a quadratic irrational such as
/// `"(1+sqrt5)/2"`, with its equation and radii of convergence.
#[pyfunction]
fn quadratic<'py>(py: Python<'py>, x: &str) -> PyResult<Bound<'py, PyDict>> {
    let xq: QuadraticIrrational = parse(x)?;
    let f = quadratic_closed_form(&xq).map_err(err)?;
    let (lo, hi) = radius_of_convergence(&f).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("A", PyPoly::from(&f.a))?;
    d.set_item("B", PyPoly::from(&f.b))?;
    d.set_item("C", PyPoly::from(&f.c))?;
    d.set_item(
        "equation",
        f.equation.iter().map(PyPoly::from).collect::<Vec<_>>(),
    )?;
    d.set_item("radius_min", lo)?;
    d.set_item("radius_max", hi)?;
    let series = closed_form_series(&f, 20).map_err(err)?;
    d.set_item("series20", series.coeffs().to_vec())?;
    Ok(d)
}

/// `X_0 .. X_n` for `kind` in `{"fibonacci", "pell"}`.
#[pyfunction]
fn q_sequence(kind: &str, n: usize) -> PyResult<Vec<PyPoly>> {
    let kind: SeqKind = parse(kind)?;
    Ok(qseq::q_sequence(kind, n).iter().map(PyPoly::from).collect())
}

#[pyfunction]
#[pyo3(signature = (kind, upto, mirrored = false))]
fn triangle(kind: &str, upto: usize, mirrored: bool) -> PyResult<Vec<Vec<BigInt>>> {
    Ok(qseq::triangle(parse(kind)?, upto, mirrored))
}

/// Jones polynomial `q R + (1 - q) S` of the two-bridge knot `r/s`.
#[pyfunction]
fn jones(fraction: &str) -> PyResult<PyPoly> {
    let k = knot::TwoBridgeKnot::new(parse(fraction)?).map_err(err)?;
    knot::jones(&k).map(|p| (&p).into()).map_err(err)
}

/// Run a check suite and return its report as a dict.
#[pyfunction]
fn run_check<'py>(py: Python<'py>, suite: &str, bound: u64) -> PyResult<Bound<'py, PyAny>> {
    let suite: check::Suite = parse(suite)?;
    let report = py.detach(|| check::run_suite(suite, bound)).map_err(err)?;
    json_to_py(py, &report.to_json())
}

/// Run the command-line interface: `(exit_code, stdout, stderr)`.
#[pyfunction]
fn main(args: Vec<String>) -> (i32, String, String) {
    let (mut out, mut e) = (Vec::new(), Vec::new());
    let code = cli::run(
        std::iter::once("qdeform".to_string()).chain(args),
        &mut out,
        &mut e,
    );
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&e).into_owned(),
    )
}

/// Populate `m` with every class and function.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QDeformError", m.py().get_type::<QDeformError>())?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyQRational>()?;
    m.add_class::<PyFrieze>()?;
    m.add_function(wrap_pyfunction!(q_int, m)?)?;
    m.add_function(wrap_pyfunction!(q_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(x_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(stern_brocot, m)?)?;
    m.add_function(wrap_pyfunction!(qreal, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic, m)?)?;
    m.add_function(wrap_pyfunction!(q_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(triangle, m)?)?;
    m.add_function(wrap_pyfunction!(jones, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(main, m)?)?;
    Ok(())
}

#[pymodule]
#[pyo3(name = "qdeform")]
fn qdeform_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
