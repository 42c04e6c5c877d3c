"""The linear fractional families psi_{z1,z2}, Psi, Phi_z and kappa, the
closed-form unique maximizer of |kappa| over the bidisc, and the cost
K* = sup |kappa| that drives every hexablock membership test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import DomainError, cx

_DEN_TINY = 1e-14


def _triple(x):
    x1, x2, x3 = (cx(t) for t in x)
    return x1, x2, x3


def is_triangular(x, tol: float = 1e-9) -> bool:
    """x1*x2 = x3 within a tolerance scaled by 1 + |x3|."""
    x1, x2, x3 = _triple(x)
    return abs(x1 * x2 - x3) <= tol * (1.0 + abs(x3))


def kappa_eval(z1: complex, z2: complex, x) -> complex:
    """sqrt((1-|z1|^2)(1-|z2|^2)) / (1 - x1 z1 - x2 z2 + x3 z1 z2)."""
    z1, z2 = cx(z1), cx(z2)
    x1, x2, x3 = _triple(x)
    top1 = 1.0 - abs(z1) ** 2
    top2 = 1.0 - abs(z2) ** 2
    if top1 <= 0.0 or top2 <= 0.0:
        return 0.0
    den = 1.0 - x1 * z1 - x2 * z2 + x3 * z1 * z2
    if abs(den) < _DEN_TINY:
        raise DomainError("kappa denominator vanished: point is outside closed E")
    return math.sqrt(top1 * top2) / den


def psi_eval(z1: complex, z2: complex, p) -> complex:
    """a * kappa(z1, z2, x) for p = (a, x1, x2, x3); zero when |z_i| = 1."""
    a = cx(p[0])
    z1, z2 = cx(z1), cx(z2)
    if 1.0 - abs(z1) ** 2 <= 0.0 or 1.0 - abs(z2) ** 2 <= 0.0:
        return 0.0
    return a * kappa_eval(z1, z2, p[1:])


def Psi_eval(z: complex, x, tol: float = 1e-9) -> complex:
    """Psi(z, x) = (x3 z - x1)/(x2 z - 1); the constant x1 on triangular x."""
    z = cx(z)
    x1, x2, x3 = _triple(x)
    den = x2 * z - 1.0
    if abs(den) < _DEN_TINY:
        if is_triangular(x, tol):
            return x1
        raise DomainError("Psi pole: x2*z = 1 on non-triangular input")
    return (x3 * z - x1) / den


def Phi_eval(z: complex, s: complex, p: complex) -> complex:
    """Phi_z(s, p) = (2 z p - s)/(2 - z s)."""
    z, s, p = cx(z), cx(s), cx(p)
    den = 2.0 - z * s
    if abs(den) < _DEN_TINY:
        raise DomainError("Phi pole: z*s = 2")
    return (2.0 * z * p - s) / den


def betas(x) -> tuple[complex, complex]:
    """beta_1 = (x1 - conj(x2) x3)/(1-|x3|^2) and the symmetric beta_2."""
    x1, x2, x3 = _triple(x)
    den = 1.0 - abs(x3) ** 2
    if den <= 0.0:
        raise DomainError("betas need |x3| < 1")
    return (x1 - x2.conjugate() * x3) / den, (x2 - x1.conjugate() * x3) / den


@dataclass(frozen=True)
class MaximizerResult:
    """Closed-form argmax of |kappa(., x)| over the bidisc and its value."""

    z1: complex
    z2: complex
    beta1: complex
    beta2: complex
    k_star: float
    d1: float
    d2: float


def _half_maximizer(b_this: complex, b_other: complex) -> tuple[complex, float]:
    t = 1.0 + abs(b_this) ** 2 - abs(b_other) ** 2
    d = t * t - 4.0 * abs(b_this) ** 2
    if d < 0.0:
        if d < -1e-12:
            raise DomainError(f"negative maximizer discriminant {d:.3e}")
        d = 0.0
    z = 2.0 * b_this.conjugate() / (t + math.sqrt(d))
    return z, d


def tetra_interior_margin(x) -> float:
    """Signed interior margin 1 - (|x1|^2 + |x2 - conj(x1) x3| + |x1 x2 - x3|).

    Positive exactly on the open tetrablock; used as the canonical margin.
    """
    x1, x2, x3 = _triple(x)
    return 1.0 - (abs(x1) ** 2 + abs(x2 - x1.conjugate() * x3) + abs(x1 * x2 - x3))


def maximizer(x, refuse_margin: float = 1e-9) -> MaximizerResult:
    """Unique interior maximizer of |kappa(., x)| for x in the open tetrablock.

    Refuses points whose interior margin does not exceed `refuse_margin`;
    the cost blows up off distinguished-boundary directions and the honest
    boundary cases are handled by `sup_on_bE`.
    """
    m = tetra_interior_margin(x)
    if not m > refuse_margin:
        raise DomainError(f"maximizer needs interior margin > {refuse_margin} "
                          f"(got {m:.3e})")
    b1, b2 = betas(x)
    z1, d1 = _half_maximizer(b1, b2)
    z2, d2 = _half_maximizer(b2, b1)
    k = abs(kappa_eval(z1, z2, x))
    return MaximizerResult(z1, z2, b1, b2, k, d1, d2)


def k_star(x, refuse_margin: float = 1e-9) -> float:
    """K*(x) = sup over the bidisc of |kappa(., x)|, always >= 1."""
    return maximizer(x, refuse_margin).k_star


def sup_on_bE(x, tol: float = 1e-9) -> float:
    """sup |kappa(., x)| over D^2 for x on the distinguished boundary of E
    with |x1| < 1; equals 1/sqrt(1-|x1|^2), attained at (conj(x1), 0)."""
    x1, x2, x3 = _triple(x)
    if abs(abs(x3) - 1.0) > tol or abs(x1 - x2.conjugate() * x3) > tol * 10 \
            or abs(x2) > 1.0 + tol:
        raise DomainError("point is not on the distinguished boundary of E")
    if abs(x1) >= 1.0 - tol:
        raise DomainError("sup_on_bE needs |x1| < 1")
    return 1.0 / math.sqrt(1.0 - abs(x1) ** 2)


def stationarity_residual(x, z1: complex, z2: complex) -> float:
    """Residual of the critical-point equations at (z1, z2):
    conj(z1) = (x1 - x3 z2)/(1 - x2 z2), conj(z2) = (x2 - x3 z1)/(1 - x1 z1).
    """
    x1, x2, x3 = _triple(x)
    z1, z2 = cx(z1), cx(z2)
    r1 = z1.conjugate() - (x1 - x3 * z2) / (1.0 - x2 * z2)
    r2 = z2.conjugate() - (x2 - x3 * z1) / (1.0 - x1 * z1)
    return max(abs(r1), abs(r2))
