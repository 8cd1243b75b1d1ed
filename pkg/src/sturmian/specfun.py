"""Scalar special-function kernels.

Generalized Laguerre polynomials L^a_k(x) follow the modern convention

    L^a_0 = 1,  L^a_1 = 1 + a - x,
    (k+1) L^a_{k+1} = (2k+1+a-x) L^a_k - (k+a) L^a_{k-1},

so that  int_0^inf x^a e^{-x} (L^a_k)^2 dx = Gamma(k+a+1)/k!  and
x L'' + (a+1-x) L' + k L = 0.  The derivative identity is
d/dx L^a_k = -L^{a+1}_{k-1}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = [
    "LaguerreParams",
    "log_gamma",
    "laguerre",
    "laguerre_deriv",
    "laguerre_ode_residual",
    "DERIVATIVE_SIGN",
]

# Sign s in d/dx L^a_k = s * L^{a+1}_{k-1}; fixed by finite differences
# (see tests/test_specfun.py::test_derivative_sign_adjudication).
DERIVATIVE_SIGN = -1.0


@dataclass(frozen=True)
class LaguerreParams:
    order_a: float
    degree_k: int

    def __post_init__(self):
        a, k = self.order_a, self.degree_k
        if not math.isfinite(a) or a <= -1.0:
            raise DomainError(f"Laguerre order must exceed -1, got {a!r}")
        if isinstance(k, bool) or int(k) != k or k < 0:
            raise DomainError(f"Laguerre degree must be a nonnegative integer, got {k!r}")
        object.__setattr__(self, "degree_k", int(k))
        object.__setattr__(self, "order_a", float(a))


# --- log-gamma --------------------------------------------------------------

_EULER_GAMMA = 0.57721566490153286060651209008240243
_SERIES_RADIUS = 0.25
_SERIES_TERMS = 30
_BERNOULLI = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
              Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6)]


def _zeta(s, n_terms=12):
    # Euler-Maclaurin tail; accurate to well below 1e-17 for integer s >= 2
    total = math.fsum(n ** -s for n in range(1, n_terms))
    n = float(n_terms)
    total += n ** (1 - s) / (s - 1) + 0.5 * n ** -s
    rising = float(s)
    for j, b in enumerate(_BERNOULLI, start=1):
        total += float(b) / math.factorial(2 * j) * rising * n ** (-s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return total


# ln Gamma(1+z) = -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k
_LNGAMMA1P_COEFFS = [(-1) ** k * _zeta(k) / k for k in range(2, _SERIES_TERMS + 2)]


def _lngamma1p(z):
    acc = 0.0
    for c in reversed(_LNGAMMA1P_COEFFS):
        acc = acc * z + c
    return z * (acc * z - _EULER_GAMMA)


def log_gamma(x):
    """Natural log of Gamma(x) for real x > 0."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires a finite positive argument, got {x!r}")
    # math.lgamma loses relative accuracy around its zeros at 1 and 2
    if abs(x - 1.0) <= _SERIES_RADIUS:
        return _lngamma1p(x - 1.0)
    if abs(x - 2.0) <= _SERIES_RADIUS:
        z = x - 2.0
        return _lngamma1p(z) + math.log1p(z)
    return math.lgamma(x)


# --- Laguerre polynomials ----------------------------------------------------

def _check_x(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
        raise DomainError("Laguerre argument must be finite and nonnegative")
    return arr


def _recurrence(a, k, x):
    prev = np.ones_like(x)
    if k == 0:
        return prev
    cur = 1.0 + a - x
    for j in range(1, k):
        prev, cur = cur, ((2 * j + 1 + a - x) * cur - (j + a) * prev) / (j + 1)
    return cur


def _as_output(arr, x):
    return float(arr) if np.ndim(x) == 0 else arr


def laguerre(params: LaguerreParams, x):
    """Evaluate L^a_k(x) by upward recurrence in degree. Accepts scalars or arrays."""
    arr = _check_x(x)
    return _as_output(_recurrence(params.order_a, params.degree_k, arr), x)


def laguerre_deriv(params: LaguerreParams, x, m: int = 1):
    """m-th derivative (m in {1, 2}) of L^a_k at x."""
    if m not in (1, 2):
        raise DomainError(f"derivative order must be 1 or 2, got {m!r}")
    arr = _check_x(x)
    a, k = params.order_a, params.degree_k
    if m > k:
        return _as_output(np.zeros_like(arr), x)
    value = DERIVATIVE_SIGN ** m * _recurrence(a + m, k - m, arr)
    return _as_output(value, x)


def laguerre_ode_residual(params: LaguerreParams, x):
    """x L'' + (a+1-x) L' + k L, which vanishes identically."""
    arr = _check_x(x)
    if np.any(arr <= 0.0):
        raise DomainError("ODE residual requires x > 0")
    a, k = params.order_a, params.degree_k
    val = laguerre(params, arr)
    d1 = laguerre_deriv(params, arr, 1)
    d2 = laguerre_deriv(params, arr, 2)
    return _as_output(arr * d2 + (a + 1.0 - arr) * d1 + k * val, x)
