use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module<F: FnOnce(Python<'_>, &Bound<'_, PyModule>)>(f: F) {
    Python::attach(|py| {
        let m = PyModule::new(py, "qdeform").unwrap();
        qdeform_py::register(&m).unwrap();
        f(py, &m);
    });
}

fn eval(py: Python<'_>, m: &Bound<'_, PyModule>, code: &std::ffi::CStr) {
    let globals = pyo3::types::PyDict::new(py);
    globals.set_item("qd", m).unwrap();
    if let Err(e) = py.run(code, Some(&globals), None) {
        e.print(py);
        panic!("python snippet failed");
    }
}

#[test]
fn q_rationals_from_python() {
    with_module(|py, m| {
        eval(
            py,
            m,
            c"
v = qd.QRational('5/2')
assert str(v) == '(1 + 2*q + q^2 + q^3) / (1 + q)', str(v)
assert v.num.coeffs == [1, 2, 1, 1]
assert v.den.coeffs == [1, 1]
assert qd.QRational('5/2', form='matrix') == v
assert v.translate(1) == qd.QRational('7/2')
assert v.neg_inv() == qd.QRational('-2/5')
assert v.negate().negate() == v
assert v.unimodal() == (True, True)
lo, cs = qd.QRational('8/5').series(6)
assert (lo, cs) == (0, [1, 0, 1, -1, 2, -4]), (lo, cs)
try:
    qd.QRational('1/0')
    raise SystemExit('expected an error')
except qd.QDeformError:
    pass
",
        );
    });
}

#[test]
fn friezes_series_and_sequences_from_python() {
    with_module(|py, m| {
        eval(
            py,
            m,
            c"
f = qd.Frieze([1, 4, 2, 1, 3, 2, 2])
assert f.rows()[2] == [3, 7, 1, 2, 5, 3, 1]
g = qd.Frieze([1, 4, 2, 1, 3, 2, 2], q=True)
assert [str(p) for p in g.rows()[5]] == ['q^3', 'q^3', 'q^4', 'q', 'q^3', 'q^4', 'q^2']
assert all(p.coeffs == [1] for p in g.rows()[5])
assert str(g.entry(1, 2)) == '1 + 2*q + 2*q^2 + q^3 + q^4'
t = qd.Frieze.from_triangulation('8:0-2,0-3,0-5,3-5,5-7')
assert len(t.quiddity) == 8
lo, cs, upto = qd.qreal('per=[1]', 21)
assert cs[-1] == 1032004 and upto == 21
d = qd.quadratic('(1+sqrt5)/2')
assert str(d['A']) == '-1 + q + q^2' and abs(d['radius_min'] - 0.3819660112501051) < 1e-9
assert qd.triangle('pell', 6)[-1] == [1, 3, 7, 11, 13, 13, 11, 7, 3, 1]
assert str(qd.q_sequence('fibonacci', 6)[6]) == '1 + 2*q + 2*q^2 + 2*q^3 + q^4'
assert str(qd.jones('5/2')) == '1 + q + q^2 + q^3 + q^4'
assert str(qd.q_binomial(4, 2)) == '1 + q + 2*q^2 + q^3 + q^4'
assert str(qd.q_int(-2)) == '-q^-2 - q^-1'
assert str(qd.x_polynomial('5/2', '2/1')) == 'q^3'
assert len(qd.stern_brocot(2)) == 7
r = qd.run_check('definition-coincidence', 20)
assert r['violations'] == 0 and r['suite'] == 'definition-coincidence'
code, out, err = qd.main(['qrat', '5/3'])
assert code == 0 and out.strip() == '(1 + q + 2*q^2 + q^3) / (1 + q + q^2)'
assert qd.main(['qrat'])[0] == 2
",
        );
    });
}
