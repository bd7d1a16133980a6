import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from contcs.quad import (MAX_RULE_SIZE, QuadratureError, gauss_laguerre_rule, integrate_halfline,
                         oscillatory_rule_size)
from contcs.specfun import ln_gamma


def test_one_point_rule():
    rule = gauss_laguerre_rule(0.0, 1)
    assert rule.nodes.tolist() == pytest.approx([1.0], rel=1e-15)
    assert rule.weights.tolist() == pytest.approx([1.0], rel=1e-15)


def test_two_point_rule():
    rule = gauss_laguerre_rule(0.0, 2)
    r2 = math.sqrt(2.0)
    assert rule.nodes == pytest.approx([2 - r2, 2 + r2], rel=1e-14)
    assert rule.weights == pytest.approx([(2 + r2) / 4, (2 - r2) / 4], rel=1e-14)
    assert rule.weights == pytest.approx([0.853553, 0.146447], abs=1e-6)


@pytest.mark.parametrize("n", [1, 3, 10, 64, 200, 512])
def test_weight_sum(n):
    rule = gauss_laguerre_rule(0.5, n)
    assert rule.weights.sum() == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 2.5, 10.5])
@pytest.mark.parametrize("n", [4, 20, 50])
def test_matches_scipy_roots(alpha, n):
    x, w = special.roots_genlaguerre(n, alpha)
    rule = gauss_laguerre_rule(alpha, n)
    assert np.allclose(rule.nodes, x, rtol=1e-12, atol=0)
    assert np.allclose(rule.weights, w, rtol=1e-9, atol=0)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([-0.5, 0.0, 0.5, 1.5, 3.5]), st.integers(1, 64))
def test_monomial_exactness(alpha, n):
    rule = gauss_laguerre_rule(alpha, n)
    for k in range(2 * n):
        scaled = np.sum(rule.weights * np.exp(k * np.log(rule.nodes) - ln_gamma(alpha + k + 1.0)))
        assert abs(scaled - 1.0) < 1e-11


def test_rule_invariants_and_immutability():
    rule = gauss_laguerre_rule(1.5, 100)
    assert np.all(np.diff(rule.nodes) > 0) and rule.nodes[0] > 0
    assert np.all(rule.weights > 0)
    with pytest.raises(ValueError):
        rule.nodes[0] = 1.0


@pytest.mark.parametrize("alpha, n", [(-1.0, 4), (-3.0, 4), (0.0, 0), (0.0, -2), (0.0, MAX_RULE_SIZE + 1)])
def test_rule_rejects(alpha, n):
    with pytest.raises(ValueError):
        gauss_laguerre_rule(alpha, n)


@pytest.mark.parametrize("ell", [0, 1, 3])
@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
def test_gamma_integral(ell, lam):
    val = integrate_halfline(lambda e: np.ones_like(e), ell + 0.5, 2 / lam**2)
    exact = math.gamma(ell + 1.5) * (lam**2 / 2) ** (ell + 1.5)
    assert val == pytest.approx(exact, rel=1e-12)


def test_trivial_integral():
    assert integrate_halfline(lambda e: np.ones_like(e), 0.0, 1.0) == pytest.approx(1.0, rel=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.75, 5.0), st.floats(-3.0, 3.0), st.sampled_from([0.0, 0.5, 2.5]))
def test_complex_scale_closed_form(a, b, alpha):
    # int E^alpha exp(-(a + ib) E) dE = Gamma(alpha+1) (a + ib)^{-(alpha+1)}
    val = integrate_halfline(lambda e: np.ones_like(e), alpha, complex(a, b), rule_size=16)
    exact = math.gamma(alpha + 1) * complex(a, b) ** (-(alpha + 1))
    assert abs(val - exact) < 1e-10 * abs(exact)


def test_phase_beyond_resolution_is_reported():
    # Laguerre rules resolve exp(-i w u) only at a rate (w^2/(1+w^2))^n; w = 8 needs > 512 points
    with pytest.raises(QuadratureError):
        integrate_halfline(lambda e: np.ones_like(e), 0.0, complex(1.0, 8.0))


def test_real_scale_equals_complex_scale():
    f = lambda e: np.exp(-0.3 * e) * np.cos(e)
    assert integrate_halfline(f, 1.5, 1.0) == pytest.approx(integrate_halfline(f, 1.5, 1 + 0j), rel=1e-12)


def test_error_estimate_bounds_change():
    f = lambda e: 1.0 / (1.0 + e)
    val, err, m = integrate_halfline(f, 0.5, 1.0, rule_size=8, tol=1e-10, full_output=True)
    finer = integrate_halfline(f, 0.5, 1.0, rule_size=m, tol=1e-13)
    assert abs(finer - val) <= max(err, 1e-10 * abs(val))


def test_nonconvergence_reported():
    with pytest.raises(QuadratureError):
        integrate_halfline(lambda e: np.sign(np.sin(40 * e)), 0.0, 1.0, rule_size=8)


def test_rejects_nonpositive_real_scale():
    for s in (0.0, -1.0, 1j):
        with pytest.raises(ValueError):
            integrate_halfline(lambda e: e, 0.0, s)


def test_oscillatory_rule_size():
    assert oscillatory_rule_size(0.0, 1.0) == 32
    assert oscillatory_rule_size(10.0, 1.0) == 80
    assert oscillatory_rule_size(-10.0, 2.0) == 320
