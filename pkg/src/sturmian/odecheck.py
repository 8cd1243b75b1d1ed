"""Residuals of the radial differential equations satisfied by the orbitals.

Four operators are implemented:

EQ7   x R'' + (3-a) R' + [n + (1-a)(1/2 - l/x) - l(l+1)/x - x/4] R      (x = 2 zeta r)
EQ8   x R'' + (3-a) R' + [n + (1-a)(1/x + 1/2) - l(l+1-a)/x - x/4] R
EQ10  -(1/((3-a) r^(3-a))) d/dr (r^(3-a) dR/dr) + l(l+2-a)/((3-a) r^2) R
      - zeta(2n+1-a)/((3-a) r) R - E R,                    (3-a) E = -zeta^2
EQ11  EQ10 with centrifugal coefficient (l+nu-1)(l+nu+1-a) and any nu in (0, 1]

where a stands for alpha.  EQ7 and EQ10 are the same equation in different
variables; EQ8 differs from EQ7 by (l+1-alpha)/x * R.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .orbitals import OrbitalSpec, log_normalization, radial, sturmian_energy
from .specfun import laguerre, laguerre_deriv

__all__ = [
    "EQUATIONS",
    "ResidualReport",
    "radial_derivatives",
    "residual",
    "residual_values",
    "bracket",
    "bracket_discrepancy",
    "discrepancy_consistency",
    "fd_crosscheck",
    "default_grid",
]

EQUATIONS = ("EQ7", "EQ8", "EQ10", "EQ11")
SCALE_FLOOR = 1e-300
INTEGER_TOL = 1e-9


def default_grid(spec: OrbitalSpec, points=64, r_min=0.1, r_max=20.0):
    return np.geomspace(r_min / spec.zeta, r_max / spec.zeta, points)


def _check_r(r):
    arr = np.asarray(r, dtype=float)
    if arr.size == 0 or not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("radii must be finite and positive")
    return arr


def radial_derivatives(spec: OrbitalSpec, r):
    """(R, dR/dr, d2R/dr2) by the product rule on y^p e^(-y/2) L(y), y = 2 zeta r."""
    arr = _check_r(r)
    z = spec.zeta
    y = 2.0 * z * arr
    p = spec.power
    params = spec.laguerre_params
    L = laguerre(params, y)
    L1 = laguerre_deriv(params, y, 1)
    L2 = laguerre_deriv(params, y, 2)
    # common factor N y^p e^(-y/2), kept positive
    common = np.exp(log_normalization(spec) + p * np.log(y) - 0.5 * y)
    g = p / y - 0.5
    f0 = L
    f1 = g * L + L1
    f2 = (g * g - p / (y * y)) * L + 2.0 * g * L1 + L2
    out = common * f0, 2.0 * z * common * f1, 4.0 * z * z * common * f2
    if np.ndim(r) == 0:
        return tuple(float(v) for v in out)
    return out


def _is_integer(v):
    return abs(v - round(v)) <= INTEGER_TOL


def _require_psi_alpha(spec, what):
    if spec.nu != 1.0 or not _is_integer(spec.l_star):
        raise DomainError(f"{what} is written for Psi^alpha orbitals (nu = 1, integer l)")


def bracket(equation_id, spec: OrbitalSpec, x):
    """Coefficient of R in the printed x-variable equations EQ7 / EQ8."""
    n, l, al = spec.n_star, spec.l_star, spec.alpha
    x = np.asarray(x, dtype=float)
    if equation_id == "EQ7":
        return n + (1.0 - al) * (0.5 - l / x) - l * (l + 1.0) / x - x / 4.0
    if equation_id == "EQ8":
        return n + (1.0 - al) * (1.0 / x + 0.5) - l * (l + 1.0 - al) / x - x / 4.0
    raise DomainError(f"no x-variable bracket for {equation_id!r}")


def bracket_discrepancy(spec: OrbitalSpec, x):
    """EQ8 bracket minus EQ7 bracket at x; algebraically (l + 1 - alpha)/x."""
    _require_psi_alpha(spec, "bracket_discrepancy")
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("x must be finite and positive")
    d = bracket("EQ8", spec, arr) - bracket("EQ7", spec, arr)
    return float(d) if np.ndim(x) == 0 else d


def discrepancy_consistency(spec: OrbitalSpec, r) -> float:
    """Max of |(EQ8 - EQ7 residual) - discrepancy * R| / scale over r.

    Ties the printed brackets to the full operators through two separate
    evaluation paths.
    """
    r = _check_r(np.atleast_1d(r))
    res7, scale = residual_values("EQ7", spec, r)
    res8, _ = residual_values("EQ8", spec, r)
    R = radial_derivatives(spec, r)[0]
    disc = bracket_discrepancy(spec, 2.0 * spec.zeta * r)
    return float(np.max(np.abs((res8 - res7) - disc * R) / scale))


def residual_values(equation_id, spec: OrbitalSpec, r, energy=None):
    """Pointwise left-hand side of ``equation_id`` and the normalization scale.

    The scale is |R| + |R'| + |R''| + 1e-300 in the equation's own variable.
    ``energy`` overrides E = -zeta^2/(3 - alpha) in EQ10/EQ11.
    """
    if equation_id not in EQUATIONS:
        raise DomainError(f"unknown equation {equation_id!r}; expected one of {EQUATIONS}")
    if equation_id != "EQ11":
        _require_psi_alpha(spec, equation_id)
    r = _check_r(r)
    R, dR, d2R = radial_derivatives(spec, r)
    z, n, al = spec.zeta, spec.n_star, spec.alpha
    if equation_id in ("EQ7", "EQ8"):
        x = 2.0 * z * r
        Rx, Rxx = dR / (2.0 * z), d2R / (4.0 * z * z)
        res = x * Rxx + (3.0 - al) * Rx + bracket(equation_id, spec, x) * R
        scale = np.abs(R) + np.abs(Rx) + np.abs(Rxx) + SCALE_FLOOR
        return res, scale
    if equation_id == "EQ10":
        l = spec.l_star
        centrifugal = l * (l + 2.0 - al)
    else:
        centrifugal = spec.power * (spec.l_star + spec.nu + 1.0 - al)
    E = sturmian_energy(z, al) if energy is None else float(energy)
    c = 3.0 - al
    # (1/r^c) d/dr (r^c R') = R'' + (c/r) R'
    res = (-(d2R + c / r * dR) / c + centrifugal / (c * r * r) * R
           - z * (2.0 * n + 1.0 - al) / (c * r) * R - E * R)
    scale = np.abs(R) + np.abs(dR) + np.abs(d2R) + SCALE_FLOOR
    return res, scale


@dataclass(frozen=True)
class ResidualReport:
    equation_id: str
    spec: OrbitalSpec
    grid: np.ndarray
    residuals: np.ndarray
    max_abs: float
    max_rel: float

    def to_dict(self):
        return {
            "equation": self.equation_id,
            "spec": self.spec.as_dict(),
            "max_abs": self.max_abs,
            "max_rel": self.max_rel,
            "points": [{"r": float(x), "residual": float(v)}
                       for x, v in zip(self.grid, self.residuals)],
        }


def residual(equation_id, spec: OrbitalSpec, grid, energy=None) -> ResidualReport:
    grid = _check_r(np.atleast_1d(grid))
    res, scale = residual_values(equation_id, spec, grid, energy)
    return ResidualReport(equation_id, spec, grid, res,
                          float(np.max(np.abs(res))),
                          float(np.max(np.abs(res) / scale)))


def fd_crosscheck(spec: OrbitalSpec, grid, h: float) -> float:
    """Max deviation of analytic R', R'' from central differences with step h.

    Deviations are divided by |R| + |R'| + |R''| at each point, which stays
    meaningful at nodes of R.
    """
    if not (math.isfinite(h) and h > 0.0):
        raise DomainError(f"step must be finite and positive, got {h!r}")
    grid = _check_r(np.atleast_1d(grid))
    if np.any(grid <= 2.0 * h):
        raise DomainError("every grid point must exceed 2h")
    R, dR, d2R = radial_derivatives(spec, grid)
    plus = radial(spec, grid + h)
    minus = radial(spec, grid - h)
    fd1 = (plus - minus) / (2.0 * h)
    fd2 = (plus - 2.0 * R + minus) / (h * h)
    scale = np.abs(R) + np.abs(dR) + np.abs(d2R) + SCALE_FLOOR
    dev = np.maximum(np.abs(fd1 - dR), np.abs(fd2 - d2R)) / scale
    return float(np.max(dev))
