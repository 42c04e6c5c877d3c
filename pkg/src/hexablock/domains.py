"""Classification oracles for the symmetrized bidisc, tetrablock and
pentablock (interior / closure / boundary / distinguished boundary), the
diamond action behind Aut(E), and the embeddings tying everything to the
hexablock.

Every boundary-sensitive predicate works through signed margins; a verdict
is only a thresholding of those margins at the supplied tolerance.  When two
implemented criteria disagree while both margins clear the tolerance, a
`ConsistencyError` is raised: that situation is a bug, not a data problem.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .numerics import (TOL, ConsistencyError, DomainError, DiscAut, cx,
                       stable_quadratic_roots)
from .psi import betas, is_triangular, k_star, tetra_interior_margin


class Region(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    DISTINGUISHED_BOUNDARY = "distinguished_boundary"
    EXTERIOR = "exterior_of_closure"


@dataclass
class RegionVerdict:
    region: Region
    margins: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def in_closure(self) -> bool:
        return self.region is not Region.EXTERIOR

    @property
    def in_interior(self) -> bool:
        return self.region is Region.INTERIOR

    @property
    def distinguished(self) -> bool:
        return self.region is Region.DISTINGUISHED_BOUNDARY


def _vote(flags: dict, margins: dict, tol: float, what: str) -> bool:
    """Consensus of equivalent boolean criteria.

    Criteria whose margin is within tol of zero abstain.  Decisive criteria
    must agree; a split vote is an internal fault.
    """
    votes = {}
    for name, flag in flags.items():
        if abs(margins[name]) > tol:
            votes[name] = flag
    if not votes:
        # everything is within tolerance of the boundary: report the flag of
        # the first criterion; caller treats it as a boundary-zone call
        return next(iter(flags.values()))
    vals = set(votes.values())
    if len(vals) > 1:
        raise ConsistencyError(
            f"{what}: equivalent criteria disagree beyond tolerance: {votes} "
            f"margins={{{', '.join(f'{k}: {v:.3e}' for k, v in margins.items())}}}")
    return vals.pop()


# ---------------------------------------------------------------------------
# Symmetrized bidisc
# ---------------------------------------------------------------------------

def solve_beta(s: complex, p: complex):
    """beta with s = beta + conj(beta) p, or None when the map is singular."""
    s, p = cx(s), cx(p)
    # write beta = u + iv; the real 2x2 system comes from s = beta + conj(beta)p
    a = 1.0 + p
    b = 1j * (1.0 - p)
    M = np.array([[a.real, b.real], [a.imag, b.imag]])
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(det) < 1e-12:
        return None
    u, v = np.linalg.solve(M, np.array([s.real, s.imag]))
    return complex(u, v)


def g2_classify(s: complex, p: complex, tol: float = TOL) -> RegionVerdict:
    """Classify (s, p) against the symmetrized bidisc G2.

    Interior criteria: |s - conj(s)p| < 1 - |p|^2;
    2|s - conj(s)p| + |s^2 - 4p| < 4 - |s|^2; and the beta decomposition.
    Closure uses the non-strict forms with |s| <= 2; the distinguished
    boundary needs |p| = 1, s = conj(s) p and |s| <= 2.
    """
    s, p = cx(s), cx(p)
    sp = abs(s - s.conjugate() * p)
    m2 = (1.0 - abs(p) ** 2) - sp
    m3 = (4.0 - abs(s) ** 2) - (2.0 * sp + abs(s * s - 4.0 * p))
    margins = {"sp_vs_p2": m2, "royal": m3}
    flags = {"sp_vs_p2": m2 > 0.0, "royal": m3 > 0.0}
    beta = solve_beta(s, p)
    if beta is not None and abs(p) < 1.0:
        m4 = 1.0 - abs(beta)
        margins["beta"] = m4
        flags["beta"] = m4 > 0.0 and abs(p) < 1.0
    inside = _vote(flags, margins, tol, "G2 interior")

    mc = min((4.0 - abs(s) ** 2) - (2.0 * sp + abs(s * s - 4.0 * p)),
             2.0 - abs(s))
    margins["closure"] = mc
    in_closure = mc >= -tol

    mb = -max(abs(abs(p) - 1.0), abs(s - s.conjugate() * p), abs(s) - 2.0)
    margins["b_gamma"] = mb
    on_b = mb >= -tol

    witnesses = {}
    if beta is not None:
        witnesses["beta"] = beta
    l1, l2 = stable_quadratic_roots(s, p)
    witnesses["eigenvalues"] = (l1, l2)

    if not in_closure:
        region = Region.EXTERIOR
    elif on_b:
        region = Region.DISTINGUISHED_BOUNDARY
    elif inside and mc > tol:
        region = Region.INTERIOR
    else:
        region = Region.BOUNDARY
    return RegionVerdict(region, margins, witnesses)


# ---------------------------------------------------------------------------
# Tetrablock
# ---------------------------------------------------------------------------

def tetra_closure_margin(x) -> float:
    """Non-strict beta-decomposition margin: 1 - (|b1| + |b2|) when |x3| < 1,
    extended continuously through |x3| = 1."""
    x1, x2, x3 = (cx(t) for t in x)
    if abs(x3) > 1.0:
        return 1.0 - abs(x3)
    if abs(abs(x3) - 1.0) < 1e-13:
        # on |x3| = 1 the closure forces x1 = conj(x2) x3 (b E directions)
        return -max(abs(x1 - x2.conjugate() * x3), abs(x1) - 1.0, abs(x2) - 1.0)
    b1, b2 = betas(x)
    return 1.0 - (abs(b1) + abs(b2))


def tetra_classify(x, tol: float = TOL) -> RegionVerdict:
    """Classify x = (x1, x2, x3) against the tetrablock E.

    Evaluates the equivalent interior criteria (parts 3, 4, 5, 8 and the
    beta decomposition), the closure criteria, the boundary equalities and
    the distinguished-boundary characterizations, asserting agreement.
    """
    x1, x2, x3 = (cx(t) for t in x)
    w = abs(x1 * x2 - x3)

    m3 = 1.0 - (abs(x1) ** 2 + abs(x2 - x1.conjugate() * x3) + w)
    m3f = 1.0 - (abs(x2) ** 2 + abs(x1 - x2.conjugate() * x3) + w)
    m4 = min(1.0 + abs(x1) ** 2 - abs(x2) ** 2 - abs(x3) ** 2
             - 2.0 * abs(x1 - x2.conjugate() * x3), 1.0 - abs(x1))
    m5 = (1.0 - abs(x3) ** 2) - (abs(x1 - x2.conjugate() * x3)
                                 + abs(x2 - x1.conjugate() * x3))
    # part 8 needs |x3| < 1 alongside the displayed inequality (the stated
    # triangular guard alone does not exclude e.g. (0, 0, 1.2))
    m8 = min(1.0 - abs(x1) ** 2 - abs(x2) ** 2 + abs(x3) ** 2 - 2.0 * w,
             1.0 - abs(x3))
    if is_triangular(x, tol):
        m8 = min(m8, 2.0 - abs(x1) - abs(x2))

    margins = {"part3": m3, "part3_flip": m3f, "part4": m4,
               "part5": m5, "part8": m8}
    flags = {k: v > 0.0 for k, v in margins.items()}
    witnesses = {}
    if abs(x3) < 1.0:
        b1, b2 = betas(x)
        m7 = 1.0 - (abs(b1) + abs(b2))
        margins["part7"] = m7
        flags["part7"] = m7 > 0.0
        witnesses["beta1"] = b1
        witnesses["beta2"] = b2
    inside = _vote(flags, margins, tol, "tetrablock interior")

    mc = tetra_closure_margin(x)
    mc4 = min(1.0 + abs(x1) ** 2 - abs(x2) ** 2 - abs(x3) ** 2
              - 2.0 * abs(x1 - x2.conjugate() * x3), 1.0 - abs(x1))
    margins["closure_beta"] = mc
    margins["closure_part4"] = mc4
    in_closure = _vote({"closure_beta": mc >= -tol, "closure_part4": mc4 >= -tol},
                       {"closure_beta": mc, "closure_part4": mc4},
                       tol, "tetrablock closure")
    if mc < -tol or mc4 < -tol:
        in_closure = False

    # boundary equalities (only meaningful inside the closure)
    b2_eq = abs(x2) ** 2 + abs(x1 - x2.conjugate() * x3) + w - 1.0
    b3_eq = abs(x1) ** 2 + abs(x2 - x1.conjugate() * x3) + w - 1.0
    b4_eq = 1.0 - abs(x1) ** 2 - abs(x2) ** 2 + abs(x3) ** 2 - 2.0 * w
    b5_eq = abs(x1 - x2.conjugate() * x3) + abs(x2 - x1.conjugate() * x3) \
        - (1.0 - abs(x3) ** 2)
    margins["boundary_part2"] = b2_eq
    margins["boundary_part3"] = b3_eq
    margins["boundary_part4"] = b4_eq
    margins["boundary_part5"] = b5_eq

    mb = -max(abs(x1 - x2.conjugate() * x3), abs(abs(x3) - 1.0),
              abs(x2) - 1.0)
    mb6 = -abs(abs(x3) - 1.0) if in_closure else -1.0
    margins["b_tetra_part1"] = mb
    margins["b_tetra_part6"] = mb6
    on_b = in_closure and _vote(
        {"b_tetra_part1": mb >= -tol, "b_tetra_part6": mb6 >= -tol},
        {"b_tetra_part1": mb, "b_tetra_part6": mb6}, tol,
        "tetrablock distinguished boundary")

    if not in_closure:
        region = Region.EXTERIOR
    elif on_b:
        region = Region.DISTINGUISHED_BOUNDARY
    elif inside and mc > tol:
        region = Region.INTERIOR
    else:
        region = Region.BOUNDARY
    return RegionVerdict(region, margins, witnesses)


# ---------------------------------------------------------------------------
# Pentablock
# ---------------------------------------------------------------------------

def penta_radius(s: complex, p: complex) -> float:
    """c_plus = |1 - conj(l2) l1|/2 + sqrt((1-|l1|^2)(1-|l2|^2))/2."""
    l1, l2 = stable_quadratic_roots(s, p)
    prod = (1.0 - abs(l1) ** 2) * (1.0 - abs(l2) ** 2)
    return 0.5 * abs(1.0 - l2.conjugate() * l1) + 0.5 * math.sqrt(max(prod, 0.0))


def penta_radius_minus(s: complex, p: complex) -> float:
    l1, l2 = stable_quadratic_roots(s, p)
    prod = (1.0 - abs(l1) ** 2) * (1.0 - abs(l2) ** 2)
    return 0.5 * abs(1.0 - l2.conjugate() * l1) - 0.5 * math.sqrt(max(prod, 0.0))


def penta_classify(a: complex, s: complex, p: complex,
                   tol: float = TOL) -> RegionVerdict:
    """Classify (a, s, p) against the pentablock P.

    Interior: (s, p) in G2 and |a| below the closed-form bound c_plus; the
    same supremum is recomputed through the symmetric hexablock embedding
    psi_z(a, s, p) = psi_{z,z}(a, s/2, s/2, p) and the two routes must agree.
    Distinguished boundary: (s, p) in b Gamma and |a|^2 + |s|^2/4 = 1.
    """
    a, s, p = cx(a), cx(s), cx(p)
    g2 = g2_classify(s, p, tol)
    cp = penta_radius(s, p)
    m_cp = cp - abs(a)
    margins = {"c_plus": m_cp}
    margins["g2_closure"] = g2.margins["closure"]
    flags = {"c_plus": g2.in_interior and m_cp > 0.0}

    # the psi-sup route through the hexablock bridge
    x = (s / 2.0, s / 2.0, p)
    if tetra_interior_margin(x) > 1e-9:
        sup = abs(a) * k_star(x)
        m_sup = 1.0 - sup
        margins["psi_sup"] = m_sup
        flags["psi_sup"] = g2.in_interior and m_sup > 0.0
    inside = _vote(flags, margins, tol, "pentablock interior")

    m_closure = min(m_cp, g2.margins["closure"])
    margins["closure"] = m_closure
    in_closure = g2.in_closure and m_cp >= -tol

    mb = min(g2.margins["b_gamma"],
             -abs(abs(a) ** 2 + abs(s) ** 2 / 4.0 - 1.0))
    margins["b_penta"] = mb
    on_b = in_closure and mb >= -tol

    witnesses = dict(g2.witnesses)
    if not in_closure:
        region = Region.EXTERIOR
    elif on_b:
        region = Region.DISTINGUISHED_BOUNDARY
    elif inside and m_closure > tol and g2.in_interior:
        region = Region.INTERIOR
    else:
        region = Region.BOUNDARY
    return RegionVerdict(region, margins, witnesses)


# ---------------------------------------------------------------------------
# The diamond action and tau
# ---------------------------------------------------------------------------

def diamond(x, y, tol: float = 1e-12):
    """x <> y = (x1 - x3 y1, y2 - x2 y3, x1 y2 - x3 y3) / (1 - x2 y1),
    the composition law Psi(., x) o Psi(., y) = Psi(., x <> y)."""
    x1, x2, x3 = (cx(t) for t in x)
    y1, y2, y3 = (cx(t) for t in y)
    den = 1.0 - x2 * y1
    if abs(den) < max(tol, 1e-14):
        raise DomainError("diamond singularity: x2*y1 = 1")
    return ((x1 - x3 * y1) / den, (y2 - x2 * y3) / den,
            (x1 * y2 - x3 * y3) / den)


def tau_of(v: DiscAut):
    """tau(v) = (omega*alpha, conj(alpha), omega) for v = omega*B_alpha;
    lies in the closed tetrablock and satisfies v = Psi(., tau(v))."""
    return (v.xi * v.z, v.z.conjugate(), v.xi)


# ---------------------------------------------------------------------------
# Embeddings and retractions
# ---------------------------------------------------------------------------

def embed_biball(a: complex, x: complex):
    return (cx(a), cx(x), 0.0 + 0.0j, 0.0 + 0.0j)


def embed_g2(s: complex, p: complex):
    s, p = cx(s), cx(p)
    return (0.0 + 0.0j, s / 2.0, s / 2.0, p)


def embed_tetra(x):
    x1, x2, x3 = (cx(t) for t in x)
    return (0.0 + 0.0j, x1, x2, x3)


def embed_penta(a: complex, s: complex, p: complex):
    a, s, p = cx(a), cx(s), cx(p)
    return (a, s / 2.0, s / 2.0, p)


def retract_g2(q):
    _, x1, x2, x3 = (cx(t) for t in q)
    return (x1 + x2, x3)


def retract_tetra(q):
    return tuple(cx(t) for t in q[1:])


def retract_penta(q):
    a, x1, x2, x3 = (cx(t) for t in q)
    return (a, x1 + x2, x3)


def penta_hn_witness(a: complex, s: complex, p: complex, tol: float = TOL):
    """A point of the open normed hexablock projecting onto (a, s, p) in P.

    Returns (a, s/2, s/2, p) on the c_- < |a| < c_+ branch, otherwise the
    zeta_0-shifted quadruple (a, s/2 + d, s/2 - d, p) with
    d = zeta_0 sqrt(|w|^2 - |a|^2) and w = (l1 - l2)/2.
    """
    a, s, p = cx(a), cx(s), cx(p)
    if not penta_classify(a, s, p, tol).in_interior:
        raise DomainError("penta_hn_witness needs a point of the open pentablock")
    cm = penta_radius_minus(s, p)
    cp = penta_radius(s, p)
    if cm < abs(a) < cp:
        return (a, s / 2.0, s / 2.0, p)
    l1, l2 = stable_quadratic_roots(s, p)
    w = (l1 - l2) / 2.0
    if abs(w) < 1e-14:
        # c_- = 0 forces a = 0 here; the symmetric point is triangular
        return (a, s / 2.0, s / 2.0, p)
    zeta0 = w / abs(w)
    d = zeta0 * math.sqrt(max(abs(w) ** 2 - abs(a) ** 2, 0.0))
    return (a, s / 2.0 + d, s / 2.0 - d, p)


# ---------------------------------------------------------------------------
# Distinguished-boundary generation for the tetrablock
# ---------------------------------------------------------------------------

def bE_margin(x) -> float:
    """Signed distance-like margin to the distinguished boundary of E."""
    x1, x2, x3 = (cx(t) for t in x)
    return -max(abs(x1 - x2.conjugate() * x3), abs(abs(x3) - 1.0),
                abs(x2) - 1.0)


def bE_generator_params(x, tol: float = 1e-9):
    """Normal-form parameters reproducing a distinguished-boundary point.

    Returns ``(kind, xi1, z1, xi2, z2)`` with ``tau_{v, chi}(base) = x`` for
    v = -xi1 B_{z1}, chi = -xi2 B_{-conj(z2)} and base point (1,1,1) when
    ``kind == 'triangular'`` or (0,0,1) otherwise.
    """
    x1, x2, x3 = (cx(t) for t in x)
    if bE_margin(x) < -10 * tol:
        raise DomainError("not a distinguished-boundary point of E")
    if is_triangular(x, tol):
        return ("triangular", x1 / abs(x1), 0.0 + 0.0j, x2 / abs(x2), 0.0 + 0.0j)
    return ("generic", x3, -x1 * x3.conjugate(), 1.0 + 0.0j, 0.0 + 0.0j)
