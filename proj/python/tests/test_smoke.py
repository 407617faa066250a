import math

import pytest

import nlgreen as ng

scipy_special = pytest.importorskip("scipy.special")


def test_closed_forms_match_frozen_values():
    assert ng.psi_tan(1.0) == pytest.approx(0.85451043200960189252, rel=1e-14)
    assert ng.step_tanh(2.0, -4.0, 8.0) == pytest.approx(10.040067681374741547, rel=1e-14)
    assert ng.ve_exponential(0.0) == pytest.approx(0.9566780614039374946, rel=1e-12)
    assert ng.tan_step(1.5, 0.0, 1.0) == pytest.approx(0.92346187171786874868, rel=1e-13)
    assert ng.vlin_gaussian(0.0, 1.0) == pytest.approx(0.5456413607650470421, rel=1e-14)


def test_point_solutions():
    p = ng.ModelParams(mu=1.0, lam=1.0)
    assert ng.point_tanh(0.0, p) == 0.0
    assert ng.point_tanh(-3.0, p) == ng.point_tanh(3.0, p)
    assert ng.point_linear(0.0, ng.ModelParams(k=2.0)) == pytest.approx(0.25)
    assert ng.green_tanh(1.5, 1.5) == 0.0


def test_special_functions_against_scipy():
    for u in (-5.5, -1.2, 0.0, 0.3, 2.7, 5.9):
        assert ng.erf(u) == pytest.approx(math.erf(u), abs=1e-15)
    for u in (-2.5, 0.1, 1.0, 7.3, 40.0):
        assert ng.digamma(u) == pytest.approx(scipy_special.digamma(u), rel=1e-13)
    for z in (-0.95, -0.6, 0.4, 0.8):
        assert ng.hyp2f1(0.5, 1.0, 1.5, z) == pytest.approx(
            scipy_special.hyp2f1(0.5, 1.0, 1.5, z), rel=1e-12
        )


def test_potential_quadrature_matches_closed_form():
    step = ng.SourceDistribution.step(-4.0, 8.0)
    for x in (-10.0, 0.0, 2.0, 15.0):
        value, err = ng.potential(step, x, kernel="tanh")
        assert value == pytest.approx(ng.v1_step(x), abs=1e-10)
        assert err >= 0.0


def test_tan_kernel_rejects_poles_and_reports_them():
    with pytest.raises(ng.NlgreenError) as info:
        ng.potential(ng.SourceDistribution.gaussian(1.0), 0.0, kernel="tan")
    assert info.value.code == "AsymptoteInDomain"
    assert len(info.value.poles) > 0
    value, _ = ng.potential(ng.SourceDistribution.unit_step01(), 0.5, kernel="tan", segment=(0.0, 1.0))
    assert value == pytest.approx(ng.tan_step(0.5, 0.0, 1.0), abs=1e-10)


def test_invalid_parameters_raise():
    with pytest.raises(ng.NlgreenError) as info:
        ng.ModelParams(lam=-1.0)
    assert info.value.code == "InvalidArgument"


def test_verify_point_strengths():
    lin = ng.verify_point("linear", ng.ModelParams(k=1.0))
    assert lin["pass"]
    assert lin["source_strength"] == pytest.approx(1.0, abs=1e-6)
    tanh = ng.verify_point("tanh")
    assert tanh["residual_pass"]
    assert tanh["source_strength"] == pytest.approx(-math.sqrt(2.0), abs=1e-6)


def test_ivp_with_python_potential():
    nodes, phi, _ = ng.solve_ivp(lambda f: -f + f**3, 0.0, 1.0 / math.sqrt(2.0), 3.0)
    assert nodes[0] == 0.0 and nodes[-1] == pytest.approx(3.0)
    for x, v in zip(nodes, phi):
        assert v == pytest.approx(math.tanh(x / math.sqrt(2.0)), abs=1e-8)
