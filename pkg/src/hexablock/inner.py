"""Rational inner functions into the closed tetrablock and hexablock,
their construction through spectral factorization, rational inner-outer
splitting, and the constructive two-point Schwarz interpolation for the
hexablock and the pentablock.

Data model: a tetrablock inner function is the triple of polynomials
(E1, E2, D) with declared bound n, evaluating to (E1/D, E2/D, D~n/D); a
hexablock inner function adds the outer numerator A, a Blaschke product B
and a unimodular constant c, with first component c*B*A/D.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .numerics import (BlaschkeProduct, ConsistencyError, DomainError, Poly,
                       cx, fejer_riesz, poly_abs2_trig, trig_sub)
from .psi import k_star
from .domains import tetra_classify
from .hexa import h_member

_CIRCLE_N = 512


def _circle(n: int = _CIRCLE_N) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


def _disc_samples(n: int = 100, rmax: float = 0.93) -> np.ndarray:
    k = np.arange(n)
    r = rmax * np.sqrt((k + 0.5) / n)
    th = 2.0 * np.pi * k * 0.6180339887498949
    return r * np.exp(1j * th)


# ---------------------------------------------------------------------------
# Tetrablock inner functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalTetraInner:
    """(E1/D, E2/D, D~n/D) with E1 = E2~n, |Ei| <= |D| on the circle and
    D zero-free on the closed disc."""

    E1: Poly
    E2: Poly
    D: Poly
    n: int

    def components(self):
        E1 = self.E1.with_bound(self.n)
        E2 = self.E2.with_bound(self.n)
        D = self.D.with_bound(self.n)
        return E1, E2, D, D.reflect()

    def __call__(self, lam):
        E1, E2, D, Dr = self.components()
        dv = D(lam)
        return (E1(lam) / dv, E2(lam) / dv, Dr(lam) / dv)


def tetra_inner_eval(t: RationalTetraInner, lam):
    return t(lam)


def tetra_inner_validate(t: RationalTetraInner, tol: float = 1e-6) -> dict:
    """Validation report for tetrablock inner data.

    Checks D zero-free on a dense closed-disc grid, the reflection identity
    E1 = E2~n, the circle bounds |Ei| <= |D|, circle images on the
    distinguished boundary and disc images in the closed tetrablock.
    """
    E1, E2, D, Dr = t.components()
    report = {"ok": True, "issues": []}

    grid = np.concatenate([_disc_samples(200, 0.999), _circle(256)])
    dmin = float(np.min(np.abs(D(grid))))
    report["min_abs_D"] = dmin
    if dmin <= 1e-9:
        report["ok"] = False
        report["issues"].append("D vanishes on the closed disc")

    refl = float(np.max(np.abs(E1.padded() - E2.reflect().padded())))
    report["reflection_residual"] = refl
    if refl > 1e-9 * max(1.0, float(np.max(np.abs(E2.padded())))):
        report["ok"] = False
        report["issues"].append("E1 != E2~n")

    circ = _circle()
    dv = np.abs(D(circ))
    excess = max(float(np.max(np.abs(E1(circ)) - dv)),
                 float(np.max(np.abs(E2(circ)) - dv)))
    report["circle_bound_excess"] = excess
    if excess > tol:
        report["ok"] = False
        report["issues"].append("|E_i| exceeds |D| on the circle")

    worst_b = 0.0
    for lam in circ[:: max(1, len(circ) // 64)]:
        x = t(lam)
        x1, x2, x3 = (cx(s) for s in x)
        mb = max(abs(x1 - x2.conjugate() * x3), abs(abs(x3) - 1.0),
                 abs(x2) - 1.0)
        worst_b = max(worst_b, mb)
    report["circle_bE_violation"] = worst_b
    if worst_b > tol:
        report["ok"] = False
        report["issues"].append("circle image leaves the distinguished boundary")

    worst_in = 0.0
    for lam in _disc_samples(60):
        v = tetra_classify(t(lam), 1e-9)
        m = min(v.margins["closure_beta"], v.margins["closure_part4"])
        if m < 0.0:
            worst_in = max(worst_in, -m)
    report["disc_closure_violation"] = worst_in
    if worst_in > tol:
        report["ok"] = False
        report["issues"].append("disc image leaves the closed tetrablock")
    return report


# ---------------------------------------------------------------------------
# Hexablock inner functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalHexaInner:
    """(c*B*A/D, E1/D, E2/D, D~n/D); A is the spectral factor of
    |D|^2 - |E1|^2 and B an arbitrary finite Blaschke product."""

    tetra: RationalTetraInner
    A: Poly
    B: BlaschkeProduct = BlaschkeProduct()
    c: complex = 1.0
    a_in: BlaschkeProduct | None = None

    def __call__(self, lam):
        x1, x2, x3 = self.tetra(lam)
        D = self.tetra.D.with_bound(self.tetra.n)
        a = self.c * self.B(lam) * self.A(lam) / D(lam)
        return (a, x1, x2, x3)

    def a_component(self, lam):
        D = self.tetra.D.with_bound(self.tetra.n)
        return self.c * self.B(lam) * self.A(lam) / D(lam)

    def to_json(self) -> str:
        def arr(p: Poly):
            return [[z.real, z.imag] for z in p.padded()]

        return json.dumps({
            "n": self.tetra.n,
            "E1": arr(self.tetra.E1.with_bound(self.tetra.n)),
            "E2": arr(self.tetra.E2.with_bound(self.tetra.n)),
            "D": arr(self.tetra.D.with_bound(self.tetra.n)),
            "A": arr(self.A.with_bound(self.tetra.n)),
            "B_phase": [self.B.phase.real, self.B.phase.imag],
            "B_zeros": [[z.real, z.imag] for z in self.B.zeros],
            "c": [cx(self.c).real, cx(self.c).imag],
        })

    @classmethod
    def from_json(cls, text: str) -> "RationalHexaInner":
        d = json.loads(text)

        def poly(key):
            return Poly(np.array([complex(r, i) for r, i in d[key]]), d["n"])

        tetra = RationalTetraInner(poly("E1"), poly("E2"), poly("D"), d["n"])
        B = BlaschkeProduct(complex(*d["B_phase"]),
                            tuple(complex(r, i) for r, i in d["B_zeros"]))
        return cls(tetra, poly("A"), B, complex(*d["c"]))


def hexa_inner_construct(t: RationalTetraInner, B: BlaschkeProduct,
                         c: complex = 1.0) -> RationalHexaInner:
    """Complete tetrablock inner data to a hexablock inner function.

    A is the spectral factor of |D|^2 - |E1|^2, assembled exactly from
    coefficient convolutions before factoring (no sampling); the result
    passes `hexa_inner_validate` whenever the input data validates.
    """
    rep = tetra_inner_validate(t)
    if not rep["ok"]:
        raise DomainError(f"invalid tetrablock inner data: {rep['issues']}")
    E1, _, D, _ = t.components()
    d2 = poly_abs2_trig(D)
    f = trig_sub(d2, poly_abs2_trig(E1))
    scale = float(np.max(np.abs(d2)))
    if float(np.max(np.abs(f))) <= 1e-12 * scale:
        # |E1| = |D| identically on the circle (x1 itself inner): A = 0
        A = Poly.const(0.0, t.n)
    else:
        A = fejer_riesz(f, tol=1e-7)
    if A.degree > t.n:
        raise ConsistencyError("spectral factor degree exceeded the bound")
    return RationalHexaInner(t, A.with_bound(t.n), B, cx(c))


def hexa_inner_validate(f: RationalHexaInner, tol: float = 1e-6,
                        interior_tol: float = 1e-8) -> dict:
    """Validation report for hexablock inner data: circle images satisfy
    |a|^2 + |x1|^2 = 1 and land on the distinguished boundary of E; disc
    images stay in the closed hexablock; the tetra part validates."""
    report = {"ok": True, "issues": []}
    sub = tetra_inner_validate(f.tetra, tol)
    report["tetra"] = sub
    if not sub["ok"]:
        report["ok"] = False
        report["issues"].append("tetra part invalid")

    circ = _circle()
    worst_norm = 0.0
    worst_b = 0.0
    for lam in circ:
        a, x1, x2, x3 = f(lam)
        worst_norm = max(worst_norm, abs(abs(a) ** 2 + abs(x1) ** 2 - 1.0))
        worst_b = max(worst_b, abs(x1 - x2.conjugate() * x3),
                      abs(abs(x3) - 1.0), abs(x2) - 1.0)
    report["circle_norm_residual"] = worst_norm
    report["circle_bE_violation"] = worst_b
    if worst_norm > tol:
        report["ok"] = False
        report["issues"].append("|a|^2 + |x1|^2 != 1 on the circle")
    if worst_b > tol:
        report["ok"] = False
        report["issues"].append("circle image off the distinguished boundary")

    worst_marg = 0.0
    for lam in _disc_samples(100):
        ok, margin = h_member(f(lam), closed=True, tol=1e-9)
        if margin < -interior_tol:
            worst_marg = max(worst_marg, -margin)
    report["disc_closure_violation"] = worst_marg
    if worst_marg > interior_tol:
        report["ok"] = False
        report["issues"].append("disc image leaves the closed hexablock")
    return report


def rational_inner_outer(num: Poly, den: Poly, tol: float = 1e-9):
    """Inner-outer splitting of a rational function bounded by 1 on the disc.

    Returns (a_in, (out_num, out_den)) where a_in is the Blaschke product
    over the zeros of `num` in the open disc (with multiplicity) and the
    outer part is zero-free on the disc with a_in * out = num/den exactly.
    """
    grid = np.concatenate([_disc_samples(200, 0.999), _circle(256)])
    if float(np.min(np.abs(den(grid)))) <= 1e-9:
        raise DomainError("denominator vanishes on the closed disc")
    if float(np.max(np.abs(num(grid) / den(grid)))) > 1.0 + 1e-7:
        raise DomainError("rational data exceeds modulus 1 on the disc")
    zero_list = [] if num.degree <= 0 else list(num.roots())
    inner_zeros = [z for z in zero_list if abs(z) < 1.0 - tol]
    # divide out the disc zeros, multiply the reflected denominators back in
    q = num.coeffs.copy()
    for z in inner_zeros:
        q = _deflate(q, z)
    out_num = Poly(q, max(len(q) - 1, 0))
    for z in inner_zeros:
        out_num = out_num.mul(Poly(np.array([-1.0, z.conjugate()]), 1))
    # outer part normalized positive at the origin; the phase moves inside
    v0 = complex(out_num(0.0)) / complex(den(0.0))
    phase = 1.0 + 0.0j
    if abs(v0) > 1e-13:
        phase = v0 / abs(v0)
        out_num = out_num.scale(phase.conjugate())
    a_in = BlaschkeProduct(phase, tuple(inner_zeros))
    return a_in, (out_num, den)


def _deflate(coeffs: np.ndarray, root: complex) -> np.ndarray:
    """Synthetic division of an ascending-coefficient polynomial by (t - root)."""
    c = np.asarray(coeffs, dtype=complex)
    d = len(c) - 1
    out = np.zeros(d, dtype=complex)
    carry = c[d]
    for k in range(d - 1, -1, -1):
        out[k] = carry
        carry = c[k] + carry * root
    return out


# ---------------------------------------------------------------------------
# Schwarz lemma for the hexablock
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SchwarzProblem:
    """Two-point data: f(0) = 0, f(lambda0) = target with target in H."""

    lambda0: complex
    target: tuple

    def __post_init__(self):
        lam = cx(self.lambda0)
        if not 0.0 < abs(lam) < 1.0:
            raise DomainError("lambda0 must lie in the punctured open disc")
        tgt = tuple(cx(t) for t in self.target)
        ok, margin = h_member(tgt, tol=1e-12)
        if not ok:
            raise DomainError(f"target outside the open hexablock "
                              f"(margin {margin:.3e})")
        object.__setattr__(self, "lambda0", lam)
        object.__setattr__(self, "target", tgt)


def tetra_ratio(x) -> float:
    """max of the two Schwarz ratios of the tetrablock target."""
    x1, x2, x3 = (cx(t) for t in x)
    w = abs(x1 * x2 - x3)
    r1 = (abs(x1 - x2.conjugate() * x3) + w) / (1.0 - abs(x2) ** 2)
    r2 = (abs(x2 - x1.conjugate() * x3) + w) / (1.0 - abs(x1) ** 2)
    return max(r1, r2)


@dataclass
class FeasibilityReport:
    feasible: bool
    margins: dict = field(default_factory=dict)
    violated: str | None = None


def schwarz_feasible(prob: SchwarzProblem, tol: float = 1e-9) -> FeasibilityReport:
    """Feasibility of the two-point problem.

    The psi-supremum bound sup |psi(a, x)| <= |lambda0| (equivalently the
    rescaled closure condition on (a/lambda0, x); the two margins are
    cross-asserted) together with the tetrablock ratio condition decide
    feasibility.  The coordinate bound |a| <= |lambda0| sqrt(1 - |x1|^2)
    is also reported: it is necessary but strictly weaker. (0.55, 0, 0.8, 0)
    at lambda0 = 0.85 satisfies it and the ratio bound while the supremum
    11/12 exceeds lambda0, so no interpolant exists.
    """
    lam = abs(prob.lambda0)
    a = prob.target[0]
    x = prob.target[1:]
    x1 = x[0]
    m_ratio = lam - tetra_ratio(x)
    m_sup = lam - abs(a) * k_star(x)
    m_coord = lam * math.sqrt(1.0 - abs(x1) ** 2) - abs(a)
    ok_resc, m_resc = h_member((a / prob.lambda0,) + tuple(x), closed=True,
                               tol=tol)
    margins = {"tetra_ratio": m_ratio, "psi_sup": m_sup,
               "a_bound": m_coord, "rescaled_closure": m_resc}
    # (3) <-> (4): the supremum bound and the rescaled closure must agree
    if abs(m_sup) > tol and abs(m_resc) > tol and (m_sup > 0) != ok_resc:
        raise ConsistencyError(
            f"psi-supremum and rescaled-closure criteria disagree ({margins})")
    # the coordinate bound is a consequence of feasibility
    if m_sup > tol and m_ratio > tol and m_coord < -tol:
        raise ConsistencyError(
            f"necessary coordinate bound failed on feasible data ({margins})")
    feasible = m_sup >= -tol and m_ratio >= -tol
    violated = None
    if not feasible:
        violated = "psi_sup" if m_sup < -tol else "tetra_ratio"
        if m_coord < -tol:
            violated = "a_bound"
    return FeasibilityReport(feasible, margins, violated)


def _interp_zero_blaschke(lambda0: complex, eta: complex,
                          tol: float = 1e-10) -> BlaschkeProduct:
    """Blaschke product with value 0 at 0 and eta at lambda0, |eta| <= 1.

    Degree 1 rotation when |eta| = 1 (then the value at 0 is not 0; callers
    use this only for the x-components); degree 2 with zeros {0, zeta}
    otherwise, zeta = (lambda0 - eta)/(1 - eta conj(lambda0))."""
    lam = cx(lambda0)
    eta = cx(eta)
    if abs(eta) > 1.0 + 1e-12:
        raise DomainError("interpolation value outside the closed disc")
    if abs(abs(eta) - 1.0) <= tol:
        m = eta / lam * abs(lam)
        return BlaschkeProduct(-m / abs(m), (0.0,))
    zeta = (lam - eta) / (1.0 - eta * lam.conjugate())
    u = (1.0 - eta * lam.conjugate()) / (1.0 - eta.conjugate() * lam)
    return BlaschkeProduct(u, (0.0, zeta))


def _blaschke_interp_unit(lambda0: complex, eta: complex) -> BlaschkeProduct:
    """Inner function with value 0 at 0, eta at lambda0; handles |eta| = |lambda0|
    subcase with a pure rotation times the identity zero."""
    lam = cx(lambda0)
    eta = cx(eta)
    ratio = eta / lam
    if abs(abs(ratio) - 1.0) <= 1e-10:
        return BlaschkeProduct(-ratio, (0.0,))
    return _interp_zero_blaschke(lam, ratio)


def _phase_align_tetra(parts, n: int) -> RationalTetraInner:
    """Assemble (E1, E2, D) from per-component Blaschke data with the global
    phase fixed so E1 = E2~n (equivalently D~n/D equals the product map)."""
    (n1, m1), (n2, m2) = parts
    D0 = m1.mul(m2)
    E10 = n1.mul(m2)
    E20 = n2.mul(m1)
    ref = E20.with_bound(n).reflect()
    # unimodular ratio E10 / ref fixes the needed square root of phase
    r1 = E10.padded()
    r2 = ref.padded()
    idx = int(np.argmax(np.abs(r2)))
    if abs(r2[idx]) < 1e-13:
        ratio = 1.0 + 0.0j
    else:
        ratio = r1[idx] / r2[idx]
        ratio = ratio / abs(ratio)
    # with E = cD*E0: need cD*E10 = conj(cD)*ref, i.e. cD^2 = conj(ratio)^-1...
    cD = complex(math.cos(-0.5 * math.atan2(ratio.imag, ratio.real)),
                 math.sin(-0.5 * math.atan2(ratio.imag, ratio.real)))
    E1 = E10.scale(cD).with_bound(n)
    E2 = E20.scale(cD).with_bound(n)
    D = D0.scale(cD).with_bound(n)
    resid = float(np.max(np.abs(E1.padded() - E2.reflect().padded())))
    if resid > 1e-8:
        raise ConsistencyError(f"phase alignment failed, residual {resid:.3e}")
    # spot-check D~n/D against the product of the component maps
    for lam in np.exp(2j * np.pi * np.arange(16) / 16):
        lhs = D.reflect()(lam) / D(lam)
        rhs = (n1(lam) / m1(lam)) * (n2(lam) / m2(lam))
        if abs(lhs - rhs) > 1e-8:
            raise ConsistencyError("x3 does not match the product map")
    return RationalTetraInner(E1, E2, D, n)


def _blaschke_as_polys(b: BlaschkeProduct) -> tuple[Poly, Poly]:
    return b.as_rational()


def construct_from_tetra(t: RationalTetraInner, lambda0: complex,
                         a_target: complex, tol: float = 1e-9) -> RationalHexaInner:
    """Lift tetrablock inner data interpolating x(0) = 0, x(lambda0) = x to a
    hexablock inner function with a(0) = 0, a(lambda0) = a_target.

    B is chosen by the rotation/Moebius recipe according to whether
    |a| = |lambda0| sqrt(1 - |x1|^2) holds with equality (detected at 1e-10).
    """
    lam = cx(lambda0)
    a = cx(a_target)
    f0 = hexa_inner_construct(t, BlaschkeProduct(), 1.0)
    A, D = f0.A, t.D.with_bound(t.n)
    ratio = complex(A(lam) / D(lam))
    s = abs(ratio)
    cap = abs(lam) * s
    if abs(a) <= 1e-13:
        # the first component vanishes identically once B has a zero at 0
        return RationalHexaInner(t, A, BlaschkeProduct(1.0, (0.0,)), 1.0)
    if abs(a) > cap + 1e-9:
        raise DomainError(
            "target first coordinate exceeds this data's Schwarz reach "
            f"(|a| = {abs(a):.6g} > {cap:.6g} = |lambda0| |A/D|(lambda0)); "
            "general synthesis requires external tetrablock inner "
            "interpolation data")
    c2 = ratio / s
    if abs(abs(a) - cap) <= 1e-10:
        c1 = a / (lam * s)
        B = BlaschkeProduct(-c2.conjugate(), (0.0,))
        return RationalHexaInner(t, A, B, c1)
    eta0 = a / (lam * s)
    zeta = (lam - eta0) / (1.0 - eta0 * lam.conjugate())
    u = (1.0 - eta0 * lam.conjugate()) / (1.0 - eta0.conjugate() * lam)
    B = BlaschkeProduct(c2.conjugate() * u, (0.0, zeta))
    return RationalHexaInner(t, A, B, 1.0)


def schwarz_construct(prob: SchwarzProblem,
                      supplied_tetra: RationalTetraInner | None = None,
                      tol: float = 1e-9) -> RationalHexaInner:
    """Rational hexablock inner interpolant with f(0) = 0, f(lambda0) = target.

    Supported automatic cases: |x3| = |lambda0| (forces x1 = x2 = 0);
    triangular targets x1 x2 = x3 (per-coordinate Blaschke synthesis);
    any target when `supplied_tetra` interpolates ((0,0,0) at 0, x at
    lambda0).  Other feasible targets need external tetrablock inner data
    and raise a DomainError saying so.
    """
    rep = schwarz_feasible(prob, tol)
    if not rep.feasible:
        raise DomainError(f"infeasible Schwarz data: {rep.violated} violated "
                          f"(margins {rep.margins})")
    lam = prob.lambda0
    a, x1, x2, x3 = prob.target

    if supplied_tetra is not None:
        t = supplied_tetra
        val0 = t(0.0)
        val1 = t(lam)
        e0 = max(abs(cx(v)) for v in val0)
        e1 = max(abs(cx(u) - cx(v)) for u, v in zip(val1, (x1, x2, x3)))
        if e0 > 1e-7 or e1 > 1e-7:
            raise DomainError("supplied tetrablock data does not interpolate "
                              f"the target (residuals {e0:.2e}, {e1:.2e})")
        return construct_from_tetra(t, lam, a, tol)

    if abs(abs(x3) - abs(lam)) <= 1e-9 and max(abs(x1), abs(x2)) <= 1e-9:
        omega = x3 / lam
        w1 = _unit_sqrt(omega)
        D = Poly.const(w1.conjugate(), 1)
        t = RationalTetraInner(Poly.const(0.0, 1), Poly.const(0.0, 1), D, 1)
        return construct_from_tetra(t, lam, a, tol)

    if abs(x1 * x2 - x3) <= 1e-9 * (1.0 + abs(x3)):
        # the inner g-pair forces |x1| = 1 on the circle, so the lifted
        # first component vanishes identically: this route only reaches
        # targets with a = 0
        if abs(a) > 1e-12:
            raise DomainError(
                "triangular targets with a != 0 are outside the automatic "
                "g-pair construction; general synthesis requires external "
                "tetrablock inner interpolation data (pass supplied_tetra)")
        b1 = _blaschke_interp_unit(lam, x1)
        b2 = _blaschke_interp_unit(lam, x2)
        t = _phase_align_tetra([_blaschke_as_polys(b1),
                                _blaschke_as_polys(b2)],
                               b1.degree + b2.degree)
        return construct_from_tetra(t, lam, a, tol)

    raise DomainError("general synthesis requires external tetrablock inner "
                      "interpolation data; pass supplied_tetra")


def _unit_sqrt(w: complex) -> complex:
    w = cx(w)
    ang = math.atan2(w.imag, w.real)
    return complex(math.cos(ang / 2.0), math.sin(ang / 2.0))


def interpolation_residuals(f: RationalHexaInner, prob: SchwarzProblem) -> float:
    """max endpoint residual of f against the two-point data."""
    v0 = f(0.0)
    v1 = f(prob.lambda0)
    r0 = max(abs(cx(t)) for t in v0)
    r1 = max(abs(cx(u) - cx(v)) for u, v in zip(v1, prob.target))
    return max(r0, r1)


# ---------------------------------------------------------------------------
# Pentablock bridge
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalPentaInner:
    """(a_in-part, E/D, D~n/D) pentablock inner data with E = E~n."""

    E: Poly
    D: Poly
    A: Poly
    B: BlaschkeProduct
    c: complex
    n: int

    def __call__(self, lam):
        E = self.E.with_bound(self.n)
        D = self.D.with_bound(self.n)
        dv = D(lam)
        a = self.c * self.B(lam) * self.A(lam) / dv
        return (a, E(lam) / dv, D.reflect()(lam) / dv)


def penta_inner_to_hexa(f: RationalPentaInner) -> RationalHexaInner:
    """(a, s, p) inner data to (a, s/2, s/2, p) hexablock inner data."""
    half = f.E.scale(0.5)
    tetra = RationalTetraInner(half, half, f.D, f.n)
    return RationalHexaInner(tetra, f.A, f.B, f.c)


def hexa_inner_to_penta(f: RationalHexaInner, tol: float = 1e-9) -> RationalPentaInner:
    """Inverse bridge; requires symmetric tetra data E1 = E2."""
    E1 = f.tetra.E1.with_bound(f.tetra.n)
    E2 = f.tetra.E2.with_bound(f.tetra.n)
    if float(np.max(np.abs(E1.padded() - E2.padded()))) > tol:
        raise DomainError("hexablock inner data is not symmetric (E1 != E2)")
    return RationalPentaInner(E1.scale(2.0), f.tetra.D, f.A, f.B, cx(f.c),
                              f.tetra.n)


def penta_inner_validate(f: RationalPentaInner, tol: float = 1e-6) -> dict:
    """Validate pentablock inner data through the hexablock bridge and the
    direct circle conditions |a|^2 + |s|^2/4 = 1, (s, p) in b Gamma."""
    report = hexa_inner_validate(penta_inner_to_hexa(f), tol)
    worst = 0.0
    for lam in _circle(128):
        a, s, p = f(lam)
        worst = max(worst,
                    abs(abs(a) ** 2 + abs(s) ** 2 / 4.0 - 1.0),
                    abs(abs(p) - 1.0), abs(s - s.conjugate() * p))
    report["circle_K0_violation"] = worst
    if worst > 10.0 * tol:
        report["ok"] = False
        report["issues"].append("circle image off K0")
    return report


def penta_schwarz_feasible(lambda0: complex, a: complex, s: complex,
                           p: complex, tol: float = 1e-9) -> FeasibilityReport:
    """Feasibility of the pentablock two-point problem; delegates to the
    symmetric embedded hexablock problem and cross-checks the direct
    inequalities (2|s - conj(s)p| + |s^2 - 4p|)/(4 - |s|^2) <= |lambda0|
    and |a| <= |lambda0| sqrt(1 - |s|^2/4)."""
    lam = cx(lambda0)
    a, s, p = cx(a), cx(s), cx(p)
    prob = SchwarzProblem(lam, (a, s / 2.0, s / 2.0, p))
    rep = schwarz_feasible(prob, tol)
    direct_ratio = (2.0 * abs(s - s.conjugate() * p) + abs(s * s - 4.0 * p)) \
        / (4.0 - abs(s) ** 2)
    m1 = abs(lam) - direct_ratio
    m2 = abs(lam) * math.sqrt(max(1.0 - abs(s) ** 2 / 4.0, 0.0)) - abs(a)
    for name, direct, bridged in (("ratio", m1, rep.margins["tetra_ratio"]),
                                  ("a_bound", m2, rep.margins["a_bound"])):
        if abs(direct - bridged) > 1e-8 * (1.0 + abs(direct)):
            raise ConsistencyError(
                f"pentablock {name} margin disagrees with the bridge: "
                f"{direct} vs {bridged}")
    return rep
