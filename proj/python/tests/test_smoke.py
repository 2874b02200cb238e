import math

import pytest

import hamcat


def test_parse_eval_roundtrip():
    e = hamcat.parse("p2^2 - 2*p1*p3")
    assert e({"p1": 0.9, "p2": 0.2, "p3": -1.1}) == pytest.approx(2.02)
    back = hamcat.parse(str(e))
    ok, residual = hamcat.equal_on_samples(e, back, n=25, tol=1e-12)
    assert ok, residual


def test_differentiate_matches_closed_form():
    e = hamcat.parse("x2*ln(abs(x2))*p1")
    d = e.diff("x2")
    at = {"x2": 0.7, "p1": 0.9}
    assert d(at) == pytest.approx((math.log(0.7) + 1.0) * 0.9)


def test_parameterized_parse_and_errors():
    e = hamcat.parse("exp(-(a*x4))", parameters=["a"])
    assert e({"x4": 0.5}, {"a": 2.0}) == pytest.approx(math.exp(-1.0))
    with pytest.raises(hamcat.ParseError):
        hamcat.parse("q7 + 1")
    with pytest.raises(hamcat.EvalError):
        hamcat.evaluate(hamcat.parse("ln(x1)"), {"x1": -1.0})


def test_canonical_bracket_closure():
    q2 = hamcat.parse("-p2")
    q4 = hamcat.parse("-x2*p1 - x3*p2")
    br = hamcat.canonical_bracket(q2, q4, N=3)
    ok, residual = hamcat.equal_on_samples(br, hamcat.parse("-p1"), tol=1e-12)
    assert ok, residual


def test_catalog_listing():
    systems = hamcat.list_systems()
    ids = {s["id"] for s in systems}
    assert len(systems) >= 29
    assert "A4_1/R4" in ids
    assert "group/A4_2^-1" in ids
    assert sum(1 for s in systems if s["kind"] == "group") == 7


def test_jacobi_defect():
    for algebra in ("A4_1", "A4_7", "A4_12"):
        assert hamcat.jacobi_defect(algebra) <= 1e-12


def test_verify_report():
    rep = hamcat.verify("A4_1/R6/1")
    assert rep["class_computed"] == "superintegrable"
    assert rep["k"] == 4
    assert all(check["pass"] for check in rep["checks"])
    assert any("errata" in note for note in rep["notes"])

    with pytest.raises(hamcat.ConstraintError):
        hamcat.verify("group/A4_1", params={"c": 0.0})


def test_simulate_conserves_invariants():
    out = hamcat.simulate("A4_1/R6/1", z0=[0.4, 1.3, -0.7, 0.9, 0.2, -1.1], T=1.0)
    assert "exit_time" not in out
    assert len(out["times"]) == 1001
    assert out["variables"] == ["x1", "x2", "x3", "p1", "p2", "p3"]
    assert all(drift <= 1e-10 for drift in out["drift"].values())
