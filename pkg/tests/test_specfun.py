import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sturmian.errors import DomainError
from sturmian.specfun import (LaguerreParams, laguerre, laguerre_deriv, laguerre_ode_residual,
                              log_gamma)

mpmath.mp.dps = 40


@pytest.mark.parametrize("x, expected", [
    (1.0, 0.0),
    (2.0, 0.0),
    (5.0, math.log(24.0)),
    (0.5, 0.5723649429247001),
])
def test_log_gamma_values(x, expected):
    assert log_gamma(x) == pytest.approx(expected, rel=1e-15, abs=1e-16)


@pytest.mark.parametrize("x", [0.0, -1.0, float("inf"), float("nan")])
def test_log_gamma_domain(x):
    with pytest.raises(DomainError):
        log_gamma(x)


def test_log_gamma_against_mpmath():
    rng = np.random.default_rng(7)
    xs = np.concatenate([10 ** rng.uniform(-3, 6, 400), rng.uniform(0.7, 2.3, 400),
                         [1e-3, 1e6, 1 + 1e-9, 2 - 1e-10, 0.75, 1.25, 1.75, 2.25]])
    for x in xs:
        ref = float(mpmath.loggamma(mpmath.mpf(float(x))))
        assert abs(log_gamma(x) - ref) <= 1e-13 * abs(ref), x


@given(st.floats(0.1, 100.0))
def test_log_gamma_recurrence(x):
    lhs = log_gamma(x + 1.0)
    rhs = log_gamma(x) + math.log(x)
    assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1.0)


def test_laguerre_params_invariants():
    with pytest.raises(DomainError):
        LaguerreParams(-1.0, 2)
    with pytest.raises(DomainError):
        LaguerreParams(0.5, 1.5)
    with pytest.raises(DomainError):
        LaguerreParams(0.5, -1)
    assert LaguerreParams(0.5, 2.0).degree_k == 2


def test_laguerre_examples():
    assert laguerre(LaguerreParams(3.7, 0), 12.3) == 1.0
    assert laguerre(LaguerreParams(2, 1), 1.0) == 2.0
    # L^a_k(0) = Gamma(k+a+1) / (k! Gamma(a+1))
    expected = math.gamma(3.5) / (2 * math.gamma(1.5))
    assert expected == pytest.approx(1.875, rel=1e-15)
    assert laguerre(LaguerreParams(0.5, 2), 0.0) == pytest.approx(expected, rel=1e-14)


def test_laguerre_rejects_negative_argument():
    with pytest.raises(DomainError):
        laguerre(LaguerreParams(0.0, 2), -0.1)


def test_laguerre_array_matches_scalar():
    p = LaguerreParams(1.3, 6)
    xs = np.linspace(0, 20, 11)
    vec = laguerre(p, xs)
    assert all(vec[i] == laguerre(p, float(x)) for i, x in enumerate(xs))


def explicit_sum(a, k, x):
    """sum_i (-1)^i C(k+a, k-i) x^i / i!, terms built from log-gammas at 40 digits."""
    a, x = mpmath.mpf(a), mpmath.mpf(x)
    total = mpmath.mpf(0)
    for i in range(k + 1):
        log_t = (mpmath.loggamma(k + a + 1) - mpmath.loggamma(k - i + 1)
                 - mpmath.loggamma(a + i + 1) - mpmath.loggamma(i + 1))
        term = mpmath.exp(log_t) * x ** i
        total += term if i % 2 == 0 else -term
    return float(total)


@settings(max_examples=200)
@given(a=st.floats(-0.99, 20.0), k=st.integers(0, 30), x=st.floats(0.0, 60.0))
def test_recurrence_matches_explicit_sum(a, k, x):
    p = LaguerreParams(a, k)
    ref = explicit_sum(a, k, x)
    assert abs(laguerre(p, x) - ref) <= 1e-9 * abs(ref) + 1e-300 or ref == 0.0


def test_recurrence_matches_mpmath():
    for a, k, x in [(0.5, 10, 3.3), (2.7, 30, 45.0), (-0.5, 20, 0.01), (7.1, 25, 60.0)]:
        ref = float(mpmath.laguerre(k, a, x))
        assert laguerre(LaguerreParams(a, k), x) == pytest.approx(ref, rel=1e-9)


def test_deriv_examples():
    assert laguerre_deriv(LaguerreParams(1.2, 0), 3.0, 1) == 0.0
    assert laguerre_deriv(LaguerreParams(2, 1), 0.7, 1) == -1.0
    assert laguerre_deriv(LaguerreParams(2, 1), 0.7, 2) == 0.0
    p = LaguerreParams(0.5, 3)
    h = 1e-5
    fd = (laguerre(p, 1.0 + h) - laguerre(p, 1.0 - h)) / (2 * h)
    assert abs(laguerre_deriv(p, 1.0, 1) - fd) <= 1e-8


def test_deriv_rejects_bad_order():
    with pytest.raises(DomainError):
        laguerre_deriv(LaguerreParams(0.5, 3), 1.0, 3)


@pytest.mark.parametrize("a, k, x", [(0.5, 3, 1.0), (2.4, 7, 5.5), (-0.3, 12, 9.0), (4.0, 2, 0.3)])
def test_derivative_sign_adjudication(a, k, x):
    """Exactly one sign of +-L^{a+1}_{k-1} matches a central difference: the negative one."""
    p = LaguerreParams(a, k)
    h = 1e-5
    fd = (laguerre(p, x + h) - laguerre(p, x - h)) / (2 * h)
    shifted = laguerre(LaguerreParams(a + 1, k - 1), x)
    tol = 1e-7 * max(1.0, abs(fd))
    assert abs(fd - (-shifted)) <= tol
    assert abs(fd - shifted) > tol


def test_second_derivative_matches_finite_difference():
    p = LaguerreParams(1.5, 6)
    x, h = 4.0, 1e-4
    fd2 = (laguerre(p, x + h) - 2 * laguerre(p, x) + laguerre(p, x - h)) / h ** 2
    assert laguerre_deriv(p, x, 2) == pytest.approx(fd2, rel=1e-6)


def test_ode_residual_examples():
    assert laguerre_ode_residual(LaguerreParams(0, 0), 1.0) == 0.0
    assert abs(laguerre_ode_residual(LaguerreParams(2.4, 1), 3.3)) <= 1e-12
    p = LaguerreParams(1.5, 7)
    assert abs(laguerre_ode_residual(p, 8.0)) <= 1e-10 * (1 + abs(laguerre(p, 8.0)))


def test_ode_residual_requires_positive_x():
    with pytest.raises(DomainError):
        laguerre_ode_residual(LaguerreParams(1.0, 2), 0.0)


@settings(max_examples=300)
@given(a=st.floats(-0.99, 15.0), k=st.integers(0, 20), x=st.floats(1e-2, 50.0))
def test_ode_residual_vanishes(a, k, x):
    p = LaguerreParams(a, k)
    assert abs(laguerre_ode_residual(p, x)) <= 1e-10 * (1 + abs(laguerre(p, x)))
