"""Smoke test for the qdeform Python extension.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`
or `pip install --no-build-isolation ./crates/py`.
"""

import qdeform as qd


def main():
    v = qd.QRational("5/2")
    assert str(v) == "(1 + 2*q + q^2 + q^3) / (1 + q)", v
    assert v.num.coeffs == [1, 2, 1, 1]
    assert qd.QRational("5/3", form="regular") == qd.QRational("5/3", form="matrix")
    assert v.translate(-2).neg_inv() == qd.QRational("-2")

    assert str(qd.q_binomial(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
    assert str(qd.q_factorial(3)) == "1 + 2*q + 2*q^2 + q^3"

    f = qd.Frieze([1, 4, 2, 1, 3, 2, 2], q=True)
    assert [str(p) for p in f.rows()[5]] == ["q^3", "q^3", "q^4", "q", "q^3", "q^4", "q^2"]

    _, coeffs, upto = qd.qreal("per=[1]", 21)
    assert coeffs[-3:] == [175502, -424748, 1032004] and upto == 21

    gold = qd.quadratic("(1+sqrt5)/2")
    assert abs(gold["radius_min"] - (3 - 5 ** 0.5) / 2) < 1e-9

    assert str(qd.jones("5/2")) == "1 + q + q^2 + q^3 + q^4"
    report = qd.run_check("total-positivity", 10)
    assert report["violations"] == 0, report

    code, out, _ = qd.main(["qseq", "--kind", "pell", "--upto", "4"])
    assert code == 0 and out.splitlines()[-1] == "P_4 = 1 + 2*q + 3*q^2 + 3*q^3 + 2*q^4 + q^5"

    try:
        qd.x_polynomial("1/2", "2")
    except qd.QDeformError as e:
        assert "greater" in str(e)
    else:
        raise AssertionError("expected QDeformError")

    print("qdeform smoke test: ok")


if __name__ == "__main__":
    main()
