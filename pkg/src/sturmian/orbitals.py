"""Radial Coulomb-Sturmian / Bagci-Hoggan orbitals in N = 4 - alpha dimensions.

    R(zeta, r) = N * (2 zeta r)^(l + nu - 1) * exp(-zeta r) * L^a_k(2 zeta r)

with degree k = n - l - nu, order a = 2l + 2nu - alpha and

    N = [ (2 zeta)^(3 - alpha) * k! / Gamma(n + l + nu + 1 - alpha) ]^(1/2),

which makes each family of fixed (l, nu, alpha, zeta) orthonormal under
int_0^inf R_i R_j r^(2 - alpha) dr.  At alpha = 0 the constant reduces to
[(2 zeta)^3 Gamma(n - l - nu + 1) / Gamma(n + l + nu + 1)]^(1/2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import errors
from .errors import DomainError
from .quadrature import gauss_laguerre_rule
from .specfun import LaguerreParams, laguerre, log_gamma

__all__ = [
    "OrbitalSpec",
    "GramReport",
    "validate",
    "normalization",
    "log_normalization",
    "radial",
    "radial_log",
    "overlap",
    "gram",
    "family",
    "tabulate",
    "tabulate_csv",
    "alpha_from_dimension",
    "dimension_from_alpha",
    "effective_l",
    "angular_eigenvalue",
    "sturmian_energy",
]

DEGREE_TOL = 1e-9


@dataclass(frozen=True)
class OrbitalSpec:
    """Validated quantum-number tuple. Build with :func:`validate`."""

    n_star: float
    l_star: float
    nu: float
    alpha: float
    zeta: float
    degree: int
    order: float

    @property
    def dimension(self) -> float:
        return 4.0 - self.alpha

    @property
    def power(self) -> float:
        """Exponent l + nu - 1 of the (2 zeta r) prefactor."""
        return self.l_star + self.nu - 1.0

    @property
    def laguerre_params(self) -> LaguerreParams:
        return LaguerreParams(self.order, self.degree)

    def as_dict(self):
        return {"n": self.n_star, "l": self.l_star, "nu": self.nu,
                "alpha": self.alpha, "zeta": self.zeta}


def validate(n_star, l_star, nu, alpha, zeta) -> OrbitalSpec:
    raw = dict(n_star=n_star, l_star=l_star, nu=nu, alpha=alpha, zeta=zeta)
    for name, value in raw.items():
        if not math.isfinite(float(value)):
            raise errors.NonFiniteParameter(f"{name} must be finite, got {value!r}")
    n_star, l_star, nu, alpha, zeta = (float(v) for v in raw.values())
    if l_star < 0.0:
        raise DomainError(f"l* must be nonnegative, got {l_star!r}")
    if not 0.0 < nu <= 1.0:
        raise errors.NuOutOfRange(f"nu must satisfy 0 < nu <= 1, got {nu!r}")
    k_real = n_star - l_star - nu
    k = round(k_real)
    if abs(k_real - k) > DEGREE_TOL or k < 0:
        raise errors.NonIntegerDegree(f"n* - l* - nu = {k_real!r} is not a nonnegative integer")
    a = 2.0 * l_star + 2.0 * nu - alpha
    if a <= -1.0:
        raise errors.OrderTooSmall(f"2l* + 2nu - alpha = {a!r} must exceed -1")
    if 3.0 - alpha <= 0.0:
        raise errors.DimensionTooSmall(f"alpha = {alpha!r} gives N = {4 - alpha!r}; need alpha < 3")
    if zeta <= 0.0:
        raise errors.NonPositiveZeta(f"zeta must be positive, got {zeta!r}")
    return OrbitalSpec(n_star, l_star, nu, alpha, zeta, int(k), a)


def log_normalization(spec: OrbitalSpec) -> float:
    k, a = spec.degree, spec.order
    gamma_arg = k + a + 1.0
    if gamma_arg <= 0.0:
        raise DomainError(f"normalization Gamma argument {gamma_arg!r} is not positive")
    return 0.5 * ((3.0 - spec.alpha) * math.log(2.0 * spec.zeta)
                  + math.lgamma(k + 1.0) - log_gamma(gamma_arg))


def normalization(spec: OrbitalSpec) -> float:
    return math.exp(log_normalization(spec))


def _check_r(r):
    arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("radius must be finite and positive (the r -> 0 limit is not special-cased)")
    return arr


def radial_log(spec: OrbitalSpec, r):
    """(sign, log|R|) at r.  sign is 0 (log -inf) only where the Laguerre factor vanishes."""
    arr = _check_r(r)
    x = 2.0 * spec.zeta * arr
    poly = laguerre(spec.laguerre_params, x)
    sign = np.sign(poly)
    with np.errstate(divide="ignore"):
        log_mag = (log_normalization(spec) + spec.power * np.log(x)
                   - spec.zeta * arr + np.log(np.abs(poly)))
    if np.ndim(r) == 0:
        return int(sign), float(log_mag)
    return sign.astype(int), log_mag


def radial(spec: OrbitalSpec, r):
    """R(zeta, r) for r > 0; scalar or array."""
    sign, log_mag = radial_log(spec, r)
    value = sign * np.exp(log_mag)
    return float(value) if np.ndim(r) == 0 else value


# --- overlaps ----------------------------------------------------------------

@lru_cache(maxsize=256)
def _rule(a, M):
    return gauss_laguerre_rule(a, M)


def _shared(spec):
    return (spec.l_star, spec.nu, spec.alpha, spec.zeta)


def _check_family(specs, M):
    ref = _shared(specs[0])
    for s in specs[1:]:
        if _shared(s) != ref:
            raise DomainError("overlap requires equal (l*, nu, alpha, zeta); "
                              f"got {ref} and {_shared(s)}")
    k_max = max(s.degree for s in specs)
    if int(M) != M or M < k_max + 2:
        raise DomainError(f"M = {M!r} too small; need at least k_max + 2 = {k_max + 2}")


def _scaled_laguerre(spec, rule):
    # sqrt(k!/Gamma(k+a+1)) L^a_k(x_m); the (2 zeta)^(alpha-3) Jacobian cancels
    # against N_i N_j once x = 2 zeta r is substituted
    k, a = spec.degree, spec.order
    log_c = 0.5 * (math.lgamma(k + 1.0) - log_gamma(k + a + 1.0))
    return math.exp(log_c) * laguerre(spec.laguerre_params, rule.nodes)


def overlap(spec_i: OrbitalSpec, spec_j: OrbitalSpec, M: int) -> float:
    """int_0^inf R_i R_j r^(2 - alpha) dr by an M-point generalized Gauss-Laguerre rule."""
    _check_family([spec_i, spec_j], M)
    rule = _rule(spec_i.order, int(M))
    fi = _scaled_laguerre(spec_i, rule)
    fj = _scaled_laguerre(spec_j, rule)
    return math.fsum(rule.weights * (fi * fj))


@dataclass(frozen=True)
class GramReport:
    specs: tuple
    matrix: np.ndarray
    max_offdiag: float
    max_diag_deviation: float

    def summary(self):
        return {"max_offdiag": self.max_offdiag,
                "max_diag_deviation": self.max_diag_deviation}

    def to_csv(self) -> str:
        return "\n".join(",".join(f"{v:.17g}" for v in row) for row in self.matrix) + "\n"


def gram(specs, M: int) -> GramReport:
    specs = tuple(specs)
    if not specs:
        raise DomainError("gram needs at least one orbital")
    _check_family(list(specs), M)
    rule = _rule(specs[0].order, int(M))
    w = rule.weights
    cols = [_scaled_laguerre(s, rule) for s in specs]
    size = len(specs)
    matrix = np.empty((size, size))
    for i in range(size):
        for j in range(i, size):
            matrix[i, j] = matrix[j, i] = math.fsum(w * (cols[i] * cols[j]))
    off = matrix - np.diag(np.diag(matrix))
    return GramReport(specs, matrix,
                      float(np.max(np.abs(off))),
                      float(np.max(np.abs(np.diag(matrix) - 1.0))))


def family(l_star, nu, alpha, zeta, size):
    """Orbitals n* = l* + nu + k for k = 0 .. size-1."""
    return [validate(l_star + nu + k, l_star, nu, alpha, zeta) for k in range(size)]


# --- tabulation --------------------------------------------------------------

def tabulate(spec: OrbitalSpec, r_min, r_max, points, spacing="linear"):
    if not (r_min > 0.0 and r_max > r_min):
        raise DomainError("need 0 < r_min < r_max")
    if int(points) != points or points < 2:
        raise DomainError("need at least 2 points")
    if spacing == "linear":
        r = np.linspace(r_min, r_max, int(points))
    elif spacing == "log":
        r = np.geomspace(r_min, r_max, int(points))
    else:
        raise DomainError(f"unknown spacing {spacing!r}")
    return r, radial(spec, r)


def tabulate_csv(r, values) -> str:
    lines = ["r,R"] + [f"{x:.17g},{v:.17g}" for x, v in zip(r, values)]
    return "\n".join(lines) + "\n"


# --- dimension, angular and energy maps ------------------------------------

def alpha_from_dimension(N: float) -> float:
    if not (math.isfinite(N) and N > 1.0):
        raise DomainError(f"dimension must exceed 1, got {N!r}")
    return 4.0 - N


def dimension_from_alpha(alpha: float) -> float:
    if not (math.isfinite(alpha) and alpha < 3.0):
        raise DomainError(f"alpha must be below 3, got {alpha!r}")
    return 4.0 - alpha


def effective_l(l_star: float, nu: float) -> float:
    return l_star + nu - 1.0


def angular_eigenvalue(l_star: float, nu: float, N: float) -> float:
    """(l + nu - 1)(l + nu + N - 3), i.e. l'(l' + N - 2) with l' = l + nu - 1."""
    if not (math.isfinite(l_star) and l_star >= 0.0):
        raise DomainError(f"l* must be nonnegative, got {l_star!r}")
    if not 0.0 < nu <= 1.0:
        raise errors.NuOutOfRange(f"nu must satisfy 0 < nu <= 1, got {nu!r}")
    alpha_from_dimension(N)
    lp = effective_l(l_star, nu)
    return lp * (lp + N - 2.0)


def sturmian_energy(zeta: float, alpha: float) -> float:
    """E = -zeta^2 / (3 - alpha)."""
    if not (math.isfinite(zeta) and zeta > 0.0):
        raise errors.NonPositiveZeta(f"zeta must be positive, got {zeta!r}")
    dimension_from_alpha(alpha)
    return -zeta * zeta / (3.0 - alpha)
