"""Membership, closure, interior, boundary-part and distinguished-boundary
classification for the mu-hexablock, the normed hexablock and the hexablock,
plus structured-singular-value computation for the four 2x2 structures and
the Hartogs potential of the hexablock over the tetrablock.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .numerics import (TOL, ConsistencyError, DomainError, Mat2, cx,
                       op_norm, spectral_radius)
from .psi import (is_triangular, k_star, maximizer, tetra_interior_margin)
from .domains import Region, penta_classify, tetra_classify
from .oracles import GridSpec, grid_sup_kappa

_INF = math.inf

#: accuracy budget of the grid fallback used on dE \ bE inputs
GRID_SUP_BUDGET = 1e-4


def _point4(p):
    a, x1, x2, x3 = (cx(t) for t in p)
    return a, (x1, x2, x3)


def psi_sup(p, tol: float = TOL, spec: GridSpec | None = None):
    """sup over the open bidisc of |psi_{z1,z2}(p)|.

    Returns (sup, witness, method).  Closed forms are used on the open
    tetrablock (via the unique maximizer) and on the distinguished boundary
    with |x1| < 1; points of dE off bE fall back to a refined grid estimate
    with a documented 1e-4 accuracy budget.  The supremum is infinite when
    a != 0 and |x1| or |x2| reaches the circle; it is None outside the
    closed tetrablock where the map itself is undefined.
    """
    a, x = _point4(p)
    if abs(a) == 0.0:
        return 0.0, None, "zero"
    m = tetra_interior_margin(x)
    if m > max(tol, 1e-9):
        r = maximizer(x)
        return abs(a) * r.k_star, (r.z1, r.z2), "maximizer"
    v = tetra_classify(x, tol)
    if v.region is Region.EXTERIOR:
        return None, None, "exterior"
    x1, x2, x3 = x
    if v.region is Region.DISTINGUISHED_BOUNDARY:
        if abs(x1) < 1.0 - tol:
            return abs(a) / math.sqrt(1.0 - abs(x1) ** 2), \
                (x1.conjugate(), 0.0), "b_tetra"
        return _INF, None, "circle_coordinate"
    # topological boundary off the distinguished part (the grid estimate
    # also covers interior points below the maximizer's refusal margin)
    if abs(x1) >= 1.0 - tol or abs(x2) >= 1.0 - tol:
        return _INF, None, "circle_coordinate"
    sup, arg = grid_sup_kappa(x, spec or GridSpec())
    return abs(a) * sup, arg, "grid"


def hmu_member(p, tol: float = TOL):
    """Membership of the mu-hexablock: (x1,x2,x3) in E, |a| K* < 1, and the
    triangularity obstruction x1 x2 = x3 when a = 0.

    Returns (flag, margin)."""
    a, x = _point4(p)
    m_int = tetra_interior_margin(x)
    if not m_int > tol:
        return False, min(m_int, 0.0)
    margin = 1.0 - abs(a) * k_star(x)
    if abs(a) <= tol and not is_triangular(x, tol):
        x1, x2, x3 = x
        return False, -abs(x1 * x2 - x3)
    return margin > tol, margin


def hmu_closure_member(p, tol: float = TOL, spec: GridSpec | None = None):
    """Membership of the closed mu-hexablock (equivalently the closed
    hexablock): (x1,x2,x3) in closed E and sup |psi| <= 1.

    Returns (flag, margin)."""
    a, x = _point4(p)
    v = tetra_classify(x, tol)
    if v.region is Region.EXTERIOR:
        return False, min(v.margins["closure_beta"], v.margins["closure_part4"])
    sup, _, _ = psi_sup(p, tol, spec)
    if sup is None or math.isinf(sup):
        return False, -1.0
    margin = 1.0 - sup
    return margin >= -tol, margin


def hn_params(x):
    """beta = 1 - |x1|^2 - |x2|^2 + |x3|^2, w^2 = x1 x2 - x3 and the interval
    (m, M) = (beta -/+ sqrt(beta^2 - 4|w|^4)) / 2 of admissible |a|^2."""
    x1, x2, x3 = (cx(t) for t in x)
    beta = 1.0 - abs(x1) ** 2 - abs(x2) ** 2 + abs(x3) ** 2
    wsq = x1 * x2 - x3
    disc = beta * beta - 4.0 * abs(wsq) ** 2
    disc = max(disc, 0.0)
    root = math.sqrt(disc)
    return beta, wsq, 0.5 * (beta - root), 0.5 * (beta + root)


def _hn_quartic_margin(a: complex, x) -> float:
    """-(|a|^4 - beta |a|^2 + |w|^4): positive exactly on m < |a|^2 < M."""
    x1, x2, x3 = (cx(t) for t in x)
    beta = 1.0 - abs(x1) ** 2 - abs(x2) ** 2 + abs(x3) ** 2
    w4 = abs(x1 * x2 - x3) ** 2
    t = abs(a) ** 2
    return -(t * t - beta * t + w4)


def hn_member(p, closed: bool = False, tol: float = TOL):
    """Membership of the (open or closed) normed hexablock.

    Open: (x1,x2,x3) in E and either (a = 0 and x1 x2 = x3) or
    m < |a|^2 < M.  Closed: closed E and the non-strict inequalities.
    Returns (flag, margin)."""
    a, x = _point4(p)
    v = tetra_classify(x, tol)
    if closed:
        if v.region is Region.EXTERIOR:
            return False, min(v.margins["closure_beta"],
                              v.margins["closure_part4"])
    else:
        m_int = tetra_interior_margin(x)
        if not m_int > tol:
            return False, min(m_int, 0.0)
    if abs(a) <= tol:
        # membership at a = 0 pivots on triangularity alone and is a
        # knife-edge in the x3 direction; the margin reflects that
        x1, x2, x3 = x
        marg = -abs(x1 * x2 - x3)
        return marg >= -tol * (1.0 + abs(x3)), marg
    q = _hn_quartic_margin(a, x)
    if closed:
        return q >= -tol, q
    return q > tol, q


def h_member(p, closed: bool = False, tol: float = TOL,
             spec: GridSpec | None = None):
    """Membership of the hexablock H (open) or its closure.

    Open: (x1,x2,x3) in E and |a| K* < 1.  Closed: delegates to the closed
    mu-hexablock, the two closures coincide.  Returns (flag, margin)."""
    if closed:
        return hmu_closure_member(p, tol, spec)
    a, x = _point4(p)
    m_int = tetra_interior_margin(x)
    if not m_int > tol:
        return False, min(m_int, 0.0)
    margin = 1.0 - abs(a) * k_star(x)
    return margin > tol, margin


def classify_boundary(p, tol: float = TOL, spec: GridSpec | None = None):
    """Boundary-part flags for a point of the topological boundary of H.

    Returns (parts, witness) where parts is a subset of {"d0", "d1", "d2"}:
    d0 needs a = 0 and x on dE; d1 needs a != 0 with sup |psi| = 1 attained
    at an interior point (returned as witness); d2 needs a != 0, x on dE and
    sup <= 1.  The parts can overlap only through the sup = 1 on dE case.
    """
    a, x = _point4(p)
    in_h, _ = h_member(p, tol=tol)
    in_hbar, mbar = h_member(p, closed=True, tol=tol, spec=spec)
    if in_h or (not in_hbar and mbar < -10 * tol):
        raise DomainError("point is not on the boundary of H")
    parts: set[str] = set()
    witness = None
    v = tetra_classify(x, tol)
    on_dE = v.region in (Region.BOUNDARY, Region.DISTINGUISHED_BOUNDARY)
    if abs(a) <= tol and on_dE:
        parts.add("d0")
    if abs(a) > tol:
        if on_dE:
            parts.add("d2")
        sup, arg, method = psi_sup(p, tol, spec)
        budget = GRID_SUP_BUDGET if method == "grid" else 10 * tol
        attained = arg is not None
        if method == "grid" and attained:
            # corner-limit suprema are approached, never attained: an
            # argmax hugging the torus is not an interior witness
            attained = max(abs(complex(arg[0])), abs(complex(arg[1]))) <= 0.999
        if sup is not None and not math.isinf(sup) \
                and abs(sup - 1.0) <= budget and attained:
            parts.add("d1")
            witness = arg
    if not parts:
        raise DomainError("boundary point received no part label")
    return parts, witness


def bh_member(p, tol: float = TOL):
    """Distinguished boundary of H: |a|^2 + |x1|^2 = 1 and x in bE.

    Returns (flag, margin)."""
    a, x = _point4(p)
    x1, x2, x3 = x
    mb = -max(abs(x1 - x2.conjugate() * x3), abs(abs(x3) - 1.0),
              abs(x2) - 1.0)
    ms = -abs(abs(a) ** 2 + abs(x1) ** 2 - 1.0)
    margin = min(mb, ms)
    return margin >= -tol, margin


def hp_param(theta: float, z: complex, w: complex):
    """The unitary-orbit parametrization (-e^{i t} z, w, e^{i t} conj(w),
    e^{i t}) of H_p; requires |z|^2 + |w|^2 = 1."""
    z, w = cx(z), cx(w)
    if abs(abs(z) ** 2 + abs(w) ** 2 - 1.0) > 1e-9:
        raise DomainError("hp_param needs |z|^2 + |w|^2 = 1")
    e = complex(math.cos(theta), math.sin(theta))
    return (-e * z, w, e * w.conjugate(), e)


@dataclass
class HexaVerdict:
    """Joint verdict over the hexablock family with its margin ledger."""

    in_h: bool
    in_h_closure: bool
    in_hmu: bool
    in_hmu_closure: bool
    in_int_hmu: bool
    in_hn: bool
    in_hn_closure: bool
    in_int_hn: bool
    in_bh: bool
    boundary_parts: frozenset
    margins: dict = field(default_factory=dict)


def classify_hexa(p, tol: float = TOL, spec: GridSpec | None = None) -> HexaVerdict:
    """Full verdict (H, H_mu, H_N, closures, interiors, bH, boundary parts)
    with the lattice H_N <= H_mu <= H <= H-closure asserted."""
    a, x = _point4(p)
    f_h, m_h = h_member(p, tol=tol)
    f_hc, m_hc = h_member(p, closed=True, tol=tol, spec=spec)
    f_mu, m_mu = hmu_member(p, tol)
    f_hn, m_hn = hn_member(p, closed=False, tol=tol)
    f_hnc, m_hnc = hn_member(p, closed=True, tol=tol)
    nonzero_a = abs(a) > tol
    f_imu = f_mu and nonzero_a
    f_ihn = f_hn and nonzero_a
    f_bh, m_bh = bh_member(p, tol)
    f_bh = f_bh and f_hc
    parts: frozenset = frozenset()
    if f_hc and not f_h:
        try:
            got, _ = classify_boundary(p, tol, spec)
            parts = frozenset(got)
        except DomainError:
            parts = frozenset()

    checks = [(f_hn, f_mu, "H_N <= H_mu"), (f_mu, f_h, "H_mu <= H"),
              (f_h, f_hc, "H <= closure"), (f_ihn, f_imu, "int lattice"),
              (f_hn, f_hnc, "H_N <= closed H_N"),
              (f_hnc, f_hc, "closed H_N <= closed H")]
    for low, high, name in checks:
        if low and not high:
            raise ConsistencyError(f"verdict lattice violated: {name} at {p}")
    margins = {"h": m_h, "h_closure": m_hc, "hmu": m_mu, "hn": m_hn,
               "hn_closure": m_hnc, "bh": m_bh}
    return HexaVerdict(f_h, f_hc, f_mu, f_hc, f_imu, f_hn, f_hnc, f_ihn,
                       f_bh, parts, margins)


# ---------------------------------------------------------------------------
# Structured singular values
# ---------------------------------------------------------------------------

def _strict_member(A: Mat2, t: float, structure: str, tol: float) -> bool:
    """Strict membership criterion for the scaled matrix A/t."""
    B = A.scaled(1.0 / t)
    if structure == "tetra":
        return tetra_interior_margin((B.a11, B.a22, B.det)) > 0.0
    if structure == "penta":
        return penta_classify(B.a21, B.trace, B.det, tol).in_interior
    if structure == "hexa":
        x = (B.a11, B.a22, B.det)
        if not tetra_interior_margin(x) > 0.0:
            return False
        return abs(B.a21) * k_star(x, refuse_margin=0.0) < 1.0
    raise DomainError(f"unknown structure {structure!r}")


def mu_value(A: Mat2, structure: str = "hexa", tol: float = 1e-9) -> float:
    """Structured singular value of a 2x2 matrix by bisection.

    structure is one of 'tetra' (diagonal perturbations), 'penta'
    (span{I, e12}), 'hexa' (upper triangular), 'spectral' or 'norm'.
    The bisection bracket [spectral radius, operator norm] is valid because
    each structure contains the scalars and sits inside M2, so
    r <= mu <= norm (the three mu values themselves are not totally
    ordered: diagonal and span{I, e12} perturbations are not nested).
    The value 0 is returned when the membership criterion holds at a
    vanishing scale.
    """
    if structure == "norm":
        return op_norm(A)
    if structure == "spectral":
        return spectral_radius(A)
    hi = op_norm(A)
    if hi <= 1e-300:
        return 0.0
    lo = spectral_radius(A)
    probe = max(lo, hi * 1e-13)
    if _strict_member(A, probe, structure, tol):
        if lo <= hi * 1e-12:
            return 0.0
        # mu equals the spectral radius up to roundoff
        return lo
    hi_b = hi * (1.0 + 1e-12) + 1e-300
    if not _strict_member(A, hi_b * (1.0 + 1e-6), structure, tol):
        # numerical guard; mu <= norm always holds mathematically
        return hi
    lo_b = probe
    target = tol * max(1.0, hi)
    while hi_b - lo_b > target:
        mid = 0.5 * (lo_b + hi_b)
        if _strict_member(A, mid, structure, tol):
            hi_b = mid
        else:
            lo_b = mid
    return 0.5 * (lo_b + hi_b)


def hartogs_u(x) -> float:
    """Hartogs potential u(x) = 2 log K*(x); H = {|a|^2 < exp(-u(x))}."""
    return 2.0 * math.log(k_star(x))
