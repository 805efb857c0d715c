import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from ginimre.distortion import (DistortionSpec, dual, dw, empirical_weights, evaluate, family,
                                family_is_monotone_in_alpha, identity, parse_distortion,
                                piecewise, step, zonoid)
from ginimre.errors import DomainError

alphas = st.floats(min_value=0.01, max_value=1.0)


def all_specs(alpha):
    return [identity(), step(alpha), zonoid(alpha), dw(alpha),
            piecewise([(0, 0), (0.3, 0.6), (1, 1)])]


def test_evaluate_examples():
    assert evaluate(identity(), 0.3) == 0.3
    assert evaluate(zonoid(0.5), 0.25) == 0.5
    assert evaluate(dw(0.5), 0.5) == pytest.approx(0.75, abs=1e-15)


def test_dw_matches_integrated_spectrum():
    # v(t) = int_0^t beta (1 - s)^(beta - 1) ds
    for beta in (1.0, 2.0, 14 / 3, 7.0):
        for t in (0.1, 0.5, 0.9):
            ref, _ = integrate.quad(lambda s: beta * (1 - s) ** (beta - 1), 0, t, epsabs=1e-14)
            assert evaluate(dw(1 / beta), t) == pytest.approx(ref, abs=1e-12)


@pytest.mark.parametrize("t", [-0.01, 1.01, float("nan")])
def test_evaluate_domain(t):
    with pytest.raises(DomainError):
        evaluate(dw(0.5), t)


def test_step_left_boundary():
    v = step(0.4)
    assert evaluate(v, 0.39999) == 0.0
    assert evaluate(v, 0.4) == 1.0


@pytest.mark.parametrize("bad", [0.0, -0.2, 1.5, float("inf")])
def test_alpha_validation(bad):
    with pytest.raises(DomainError):
        dw(bad)


def test_piecewise_validation():
    with pytest.raises(DomainError):
        piecewise([(0, 0), (0.5, 0.7)])
    with pytest.raises(DomainError):
        piecewise([(0, 0), (0.5, 0.7), (0.5, 0.8), (1, 1)])
    with pytest.raises(DomainError):
        piecewise([(0, 0), (0.5, 0.7), (0.7, 0.6), (1, 1)])
    with pytest.raises(DomainError):
        piecewise([(0, 0.1), (1, 1)])


def test_concavity_flags():
    assert identity().concave and zonoid(0.3).concave and dw(0.3).concave
    assert not step(0.3).concave
    assert piecewise([(0, 0), (0.3, 0.6), (1, 1)]).concave
    assert not piecewise([(0, 0), (0.6, 0.3), (1, 1)]).concave


def test_dual_examples():
    assert dual(identity()) == identity()
    t = np.linspace(0, 1, 1001)
    a = 0.3
    np.testing.assert_allclose(evaluate(dual(zonoid(a)), t), np.maximum(0, (t - 1 + a) / a),
                               atol=1e-15)
    np.testing.assert_allclose(evaluate(dual(dw(a)), t), t ** (1 / a), atol=1e-15)


@settings(max_examples=60, deadline=None)
@given(alphas)
def test_dual_involution_and_convexity(alpha):
    t = np.linspace(0, 1, 1001)
    for v in all_specs(alpha):
        vt = dual(v)
        np.testing.assert_allclose(evaluate(vt, t), 1 - evaluate(v, 1 - t), atol=1e-14)
        np.testing.assert_allclose(evaluate(dual(vt), t), evaluate(v, t), atol=1e-14)
        if v.concave:
            assert vt.convex


def test_empirical_weights_examples():
    np.testing.assert_allclose(empirical_weights(identity(), 4), [0.25] * 4, atol=1e-16)
    # ((n - i + 1)/n)^2 - ((n - i)/n)^2 with n = 2
    np.testing.assert_allclose(empirical_weights(dw(0.5), 2), [0.75, 0.25], atol=1e-16)
    np.testing.assert_array_equal(empirical_weights(step(0.5), 4), [0, 1, 0, 0])


def test_empirical_weights_domain():
    with pytest.raises(DomainError):
        empirical_weights(dw(0.5), 0)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 50, 999, 10_000])
@pytest.mark.parametrize("alpha", [0.05, 1 / 7, 3 / 14, 0.5, 1.0])
def test_weights_sum_and_monotone(n, alpha):
    for v in all_specs(alpha):
        w = empirical_weights(v, n)
        assert abs(w.sum() - 1.0) <= 1e-12
        assert np.all(w >= 0)
        if v.concave:
            assert np.all(np.diff(w) <= 1e-15)


def test_weights_against_formula():
    beta = 14 / 3
    n = 28
    i = np.arange(1, n + 1)
    expect = ((n - i + 1) / n) ** beta - ((n - i) / n) ** beta
    np.testing.assert_allclose(empirical_weights(dw(1 / beta), n), expect, rtol=1e-13, atol=1e-17)


def test_alpha_one_is_mean():
    t = np.linspace(0, 1, 101)
    for v in (dw(1.0), zonoid(1.0)):
        np.testing.assert_allclose(evaluate(v, t), t, atol=1e-15)


def test_family_monotone():
    t = np.linspace(0, 1, 101)
    grid = np.arange(1, 11) / 10
    assert family_is_monotone_in_alpha("zonoid", t, grid)
    assert family_is_monotone_in_alpha("dw", t, grid)
    assert family_is_monotone_in_alpha("identity", t, [1.0])
    # a family growing with alpha is rejected
    assert not family_is_monotone_in_alpha(lambda a: dw(1.1 - a), t, grid)
    with pytest.raises(DomainError):
        family_is_monotone_in_alpha("dw", t, [0.5, 0.4])


def test_family_factory():
    assert family("dw", 0.5) == dw(0.5)
    with pytest.raises(DomainError):
        family("piecewise", 0.5)


def test_parse(tmp_path):
    assert parse_distortion("identity") == identity()
    assert parse_distortion("dw:0.5") == dw(0.5)
    assert parse_distortion("zonoid:3/14").alpha == pytest.approx(3 / 14)
    assert parse_distortion("step:0.25") == step(0.25)
    path = tmp_path / "bp.csv"
    path.write_text("t,v\n0,0\n0.5,0.8\n1,1\n")
    v = parse_distortion(str(path))
    assert v.family == "piecewise" and v.concave
    assert evaluate(v, 0.25) == pytest.approx(0.4)
    for bad in ("dw", "dw:x", "foo:0.5", "dw:2"):
        with pytest.raises(DomainError):
            parse_distortion(bad)


def test_str_roundtrip():
    for v in (identity(), dw(3 / 14), zonoid(0.5), step(0.2)):
        w = parse_distortion(str(v))
        assert w.family == v.family
        if v.alpha is not None:
            assert math.isclose(w.alpha, v.alpha, rel_tol=1e-9)


def test_immutable():
    v = dw(0.5)
    with pytest.raises(Exception):
        v.alpha = 0.3
    assert isinstance(v, DistortionSpec) and v.beta == 2.0
