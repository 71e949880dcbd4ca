import math

import pytest

import cotlab


def test_jet_and_transversality():
    j = cotlab.surfaces.zero().jet(3.0, 4.0)
    assert (j.x, j.y, j.fx) == (3.0, 4.0, 0.0)
    assert cotlab.dot(j) == pytest.approx(-0.4)
    assert cotlab.cot(j) == pytest.approx(-0.08)
    assert cotlab.cot_printed(j) == pytest.approx(0.08)
    assert cotlab.zcot_residual(j) == 25.0
    assert cotlab.classify_point(cotlab.surfaces.zero().jet(0.0, 0.0)) == "singular"


def test_families():
    s = cotlab.zero_cot_solution(1.0, 2.0, "sin")
    assert abs(cotlab.zcot_residual(s.jet(1.0, 1.0))) < 1e-10
    q = cotlab.bernstein(1.0, 2.0, g="cos")
    assert abs(cotlab.pminimal_residual(q.jet(0.3, 0.2))) < 1e-9
    loc = cotlab.pminimal_local(0.0, "const:0.5", "sin")
    x, y = 0.4, 0.3
    assert loc.value(x, y) == pytest.approx(0.5 * (-y * x + 0.5 * x * x) + math.sin(y - 0.5 * x), abs=1e-12)
    assert "zero-cot" in cotlab.family_names()
    assert cotlab.make_family("plane", a=1.0, b=2.0, c=3.0).value(1.0, 1.0) == 6.0


def test_trace_radial():
    samples, termination = cotlab.trace(cotlab.surfaces.zero(), 1.0, 0.0, "forward", 1e-3, 2.0)
    assert termination == "MaxTime"
    assert max(abs(s.a + 2.0 / (1.0 + s.t)) for s in samples) < 1e-8


def test_errors():
    with pytest.raises(cotlab.DomainError):
        cotlab.trace(cotlab.surfaces.zero(), 0.0, 0.0)
    with pytest.raises(cotlab.CotlabError):
        cotlab.zero_cot_solution(0.0, 0.0, "sin")
    with pytest.raises(ValueError):
        cotlab.zero_cot_solution(1.0, 0.0, "tan")


def test_models():
    su2 = cotlab.structure_constants("su2")
    assert su2[0][1][2] == -1
    assert su2[1][2][0] == -1
    assert cotlab.cot_from_constants("su2", 0.7) == 1.0
    assert cotlab.cot_from_constants("sl2", 0.7) == -1.0


def test_riccati_and_verdict():
    assert cotlab.riccati_closed_form(2.0, 0.0, 0.25) == pytest.approx(4.0)
    assert ("ForwardBound", 0.5) in cotlab.singular_verdict(2.0, 0.0)


def test_suite_report():
    rep = cotlab.run_suite("models")
    assert rep["summary"]["failed"] == 0
    assert rep["summary"]["total"] == len(rep["checks"])
