"""Automorphism algebra: the tetrablock maps tau_{v,chi} (with optional
coordinate flip), the hexablock subgroup of maps T_{v,chi,omega} and
T_{v,chi,F,omega} with exact normal-form composition and inversion, and the
pentablock automorphisms f_{omega,v}.

Conventions.  A `DiscAut` stores the plain form xi*B_z.  The hexablock
normal form uses v = -xi1 B_{z1} and chi = -xi2 B_{-conj(z2)}; the helpers
below convert between the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import ConsistencyError, DomainError, DiscAut, cx
from .domains import tau_of, diamond
from . import hexa as _hexa


def _params_v(v: DiscAut) -> tuple[complex, complex]:
    """(xi1, z1) with v = -xi1 B_{z1}."""
    return -v.xi, v.z


def _params_chi(chi: DiscAut) -> tuple[complex, complex]:
    """(xi2, z2) with chi = -xi2 B_{-conj(z2)}."""
    return -chi.xi, -chi.z.conjugate()


def _v_from_params(xi1: complex, z1: complex) -> DiscAut:
    return DiscAut(-cx(xi1), cx(z1))


def _chi_from_params(xi2: complex, z2: complex) -> DiscAut:
    return DiscAut(-cx(xi2), -cx(z2).conjugate())


# ---------------------------------------------------------------------------
# Tetrablock automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TetraAut:
    """tau_{v,chi} (flip False) or tau_{v,chi,F} (flip True) on closed E."""

    v: DiscAut
    chi: DiscAut
    flip: bool = False

    def __call__(self, x):
        return tetra_aut_apply(self, x)


def tetra_aut_apply(t: TetraAut, x):
    """Apply the closed-form tetrablock automorphism; the flip acts first."""
    x1, x2, x3 = (cx(s) for s in x)
    if t.flip:
        x1, x2 = x2, x1
    xi1, z1 = _params_v(t.v)
    xi2, z2 = _params_chi(t.chi)
    den = (1.0 - z1.conjugate() * x1) \
        - xi2 * z2.conjugate() * (x2 - z1.conjugate() * x3)
    if abs(den) < 1e-14:
        raise DomainError("tetrablock automorphism denominator vanished")
    t1 = xi1 * ((x1 - z1) + xi2 * z2.conjugate() * (z1 * x2 - x3)) / den
    t2 = (z2 * (z1.conjugate() * x1 - 1.0) + xi2 * (x2 - z1.conjugate() * x3)) / den
    t3 = xi1 * (z2 * (z1 - x1) - xi2 * (z1 * x2 - x3)) / den
    return (t1, t2, t3)


def tetra_aut_apply_diamond(t: TetraAut, x):
    """Same map through the diamond action (independent route for tests)."""
    x1, x2, x3 = (cx(s) for s in x)
    if t.flip:
        x1, x2 = x2, x1
    return diamond(diamond(tau_of(t.v), (x1, x2, x3)), tau_of(t.chi))


def tetra_aut_invert(t: TetraAut) -> TetraAut:
    """tau_{v,chi}^{-1} = tau_{v^-1,chi^-1}; with flip the slots star-swap."""
    if not t.flip:
        return TetraAut(t.v.invert(), t.chi.invert(), False)
    return TetraAut(t.chi.star().invert(), t.v.star().invert(), True)


# ---------------------------------------------------------------------------
# Hexablock automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HexaAut:
    """T_{v,chi,omega} (flip False) or T_{v,chi,F,omega} (flip True)."""

    v: DiscAut
    chi: DiscAut
    omega: complex
    flip: bool = False

    def __post_init__(self):
        w = cx(self.omega)
        if abs(abs(w) - 1.0) > 1e-9:
            raise DomainError("hexablock automorphism phase must be unimodular")
        object.__setattr__(self, "omega", w / abs(w))

    @classmethod
    def identity(cls) -> "HexaAut":
        return cls(DiscAut.identity(), DiscAut.identity(), 1.0, False)

    @property
    def tetra_part(self) -> TetraAut:
        return TetraAut(self.v, self.chi, self.flip)

    def __call__(self, p, check: bool = True):
        return hexa_aut_apply(self, p, check=check)

    def approx_eq(self, other: "HexaAut", tol: float = 1e-10) -> bool:
        return (self.flip == other.flip
                and abs(self.omega - other.omega) <= tol
                and self.v.approx_eq(other.v, tol)
                and self.chi.approx_eq(other.chi, tol))


def hexa_aut_apply(T: HexaAut, p, check: bool = True, tol: float = 1e-7):
    """Apply T to a point of the closed hexablock.

    With check=True the input must pass the closure criterion within a
    loose tolerance; the image region always equals the input region.
    """
    a, x1, x2, x3 = (cx(s) for s in p)
    if check:
        ok, margin = _hexa.h_member((a, x1, x2, x3), closed=True, tol=tol)
        if not ok and margin < -tol:
            raise DomainError(f"point outside the closed hexablock "
                              f"(margin {margin:.3e})")
    u1, u2, u3 = x1, x2, x3
    if T.flip:
        u1, u2 = u2, u1
    xi1, z1 = _params_v(T.v)
    xi2, z2 = _params_chi(T.chi)
    den = 1.0 - u1 * z1.conjugate() - u2 * z2.conjugate() * xi2 \
        + u3 * z1.conjugate() * z2.conjugate() * xi2
    if abs(den) < 1e-14:
        raise DomainError("hexablock automorphism denominator vanished")
    scale = math.sqrt((1.0 - abs(z1) ** 2) * (1.0 - abs(z2) ** 2))
    b = T.omega * xi2 * a * scale / den
    t1, t2, t3 = tetra_aut_apply(T.tetra_part, (x1, x2, x3))
    return (b, t1, t2, t3)


def hexa_aut_invert(T: HexaAut) -> HexaAut:
    """Closed-form inverse: T_{v,chi,w}^-1 = T_{v^-1,chi^-1,conj(w)} and
    T_{v,chi,F,w}^-1 = T_{chi*^-1, v*^-1, F, conj(w) xi1 conj(xi2)}."""
    if not T.flip:
        return HexaAut(T.v.invert(), T.chi.invert(), T.omega.conjugate(), False)
    xi1, _ = _params_v(T.v)
    xi2, _ = _params_chi(T.chi)
    omega = T.omega.conjugate() * xi1 * xi2.conjugate()
    return HexaAut(T.chi.star().invert(), T.v.star().invert(), omega, True)


def _compose_noflip(T1: HexaAut, T2: HexaAut) -> tuple[DiscAut, DiscAut, complex]:
    """Normal form of T_{v1,chi1,w1} o T_{v2,chi2,w2} (both without flip):
    v-part v1 o v2, chi-part chi2 o chi1, phase w1 w2 conj(gamma)."""
    xi1, z1 = _params_v(T1.v)
    xi2c1, z2c1 = _params_chi(T1.chi)
    xi1b, z1b = _params_v(T2.v)
    # pattern parameters: chi = chi1^-1, zeta = v2^-1, Y = chi2
    z2 = -xi2c1.conjugate() * z2c1          # chi slot of the pattern
    alpha1 = -xi1b * z1b                    # zeta = -eta1 B_{alpha1}
    _, alpha2 = _params_chi(T2.chi)
    u1 = 1.0 - z1.conjugate() * alpha1
    u2 = 1.0 - z2 * alpha2.conjugate()
    if abs(u1) < 1e-14 or abs(u2) < 1e-14:
        raise ConsistencyError("degenerate phase factor in composition")
    gamma = (u1 / abs(u1)) * (u2 / abs(u2))
    v = T1.v.compose(T2.v)
    chi = T2.chi.compose(T1.chi)
    return v, chi, T1.omega * T2.omega * gamma.conjugate()


def _compose_flipflip(T1: HexaAut, T2: HexaAut) -> tuple[DiscAut, DiscAut, complex]:
    """Normal form of T_{v1,chi1,F,w1} o T_{v2,chi2,F,w2}: the flips cancel,
    v-part v1 o chi2*, chi-part v2* o chi1, phase w1 w2 conj(beta)."""
    xi1, z1 = _params_v(T1.v)
    xi2c1, z2c1 = _params_chi(T1.chi)
    z2 = -xi2c1.conjugate() * z2c1
    # zeta = v2 = -eta1 B_{alpha1}; Y = chi2^-1 = -eta2 B_{-conj(alpha2)}
    eta1, alpha1 = _params_v(T2.v)
    xi2b, z2b = _params_chi(T2.chi)
    eta2 = xi2b.conjugate()
    alpha2 = -xi2b.conjugate() * z2b
    u1 = 1.0 - z1.conjugate() * eta2.conjugate() * alpha2
    u2 = 1.0 - z2 * eta1.conjugate() * alpha1.conjugate()
    if abs(u1) < 1e-14 or abs(u2) < 1e-14:
        raise ConsistencyError("degenerate phase factor in composition")
    beta = eta1 * eta2 * (u1 / abs(u1)) * (u2 / abs(u2))
    v = T1.v.compose(T2.chi.star())
    chi = T2.v.star().compose(T1.chi)
    return v, chi, T1.omega * T2.omega * beta.conjugate()


def hexa_aut_compose(T1: HexaAut, T2: HexaAut) -> HexaAut:
    """Exact normal form of T1 o T2; flip parity is the XOR of the inputs.

    Mixed parities reduce to the two closed-form cases through F-hat^2 = id:
    a trailing flip on T2 commutes out unchanged, a flip on T1 routes the
    composition through the flip-flip phase law.
    """
    if T1.flip:
        v, chi, omega = _compose_flipflip(
            T1, HexaAut(T2.v, T2.chi, T2.omega, True))
    else:
        v, chi, omega = _compose_noflip(
            T1, HexaAut(T2.v, T2.chi, T2.omega, False))
    return HexaAut(v, chi, omega, T1.flip != T2.flip)


def hexa_aut_from_be_point(x) -> tuple[HexaAut, tuple]:
    """A hexablock automorphism T and base point q in {(0,1,1,1), (1,0,0,1)}
    with tetra part reproducing the given distinguished-boundary point:
    tau_{v,chi}(base) = x."""
    from .domains import bE_generator_params
    kind, xi1, z1, xi2, z2 = bE_generator_params(x)
    T = HexaAut(_v_from_params(xi1, z1), _chi_from_params(xi2, z2), 1.0, False)
    base = (0.0, 1.0, 1.0, 1.0) if kind == "triangular" else (1.0, 0.0, 0.0, 1.0)
    return T, base


# ---------------------------------------------------------------------------
# Pentablock automorphisms
# ---------------------------------------------------------------------------

def penta_aut_apply(omega: complex, v: DiscAut, q, check: bool = True,
                    tol: float = 1e-10):
    """f_{omega,v} on the closed pentablock, computed by the closed form and
    cross-checked against the factored route e_* o T_{v,v*,omega} o e_0."""
    omega = cx(omega)
    if abs(abs(omega) - 1.0) > 1e-9:
        raise DomainError("pentablock automorphism phase must be unimodular")
    a, s, p = (cx(t) for t in q)
    xi, z = _params_v(v)
    den = 1.0 - z.conjugate() * s + z.conjugate() ** 2 * p
    if abs(den) < 1e-14:
        raise DomainError("pentablock automorphism denominator vanished")
    out = (xi / den * omega * (1.0 - abs(z) ** 2) * a,
           xi / den * (-2.0 * z + (1.0 + abs(z) ** 2) * s - 2.0 * z.conjugate() * p),
           xi * xi / den * (z * z - z * s + p))

    if check:
        T = HexaAut(v, v.star(), omega, False)
        b, y1, y2, y3 = hexa_aut_apply(T, (a, s / 2.0, s / 2.0, p), check=False)
        alt = (b, y1 + y2, y3)
        err = max(abs(o - t) for o, t in zip(out, alt))
        if err > max(tol, 1e-10):
            raise ConsistencyError(
                f"pentablock automorphism routes disagree by {err:.3e}")
    return out


def penta_aut_compose_params(omega1, v1: DiscAut, omega2, v2: DiscAut):
    """Group law f_{w1,v1} o f_{w2,v2} = f_{w1 w2, v1 o v2}."""
    return cx(omega1) * cx(omega2), v1.compose(v2)
