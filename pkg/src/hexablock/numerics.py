"""Scalar/matrix/polynomial substrate: 2x2 matrix algebra with closed-form
singular values, disc automorphisms in normal form, finite Blaschke products,
polynomial reflection, Fejer-Riesz spectral factorization and the matricial
Mobius transform.

All routines are pure; values are immutable after construction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

#: Default tolerance converting signed margins into verdicts.
TOL = 1e-9

_TINY = 1e-14


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConsistencyError(RuntimeError):
    """Equivalent criteria disagreed beyond tolerance (internal fault)."""


def cx(value) -> complex:
    """Coerce to a finite complex scalar."""
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex value {value!r}")
    return z


# ---------------------------------------------------------------------------
# 2x2 matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mat2:
    """A 2x2 complex matrix with exact trace/determinant accessors."""

    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, cx(getattr(self, name)))

    @classmethod
    def from_array(cls, arr) -> "Mat2":
        a = np.asarray(arr, dtype=complex)
        if a.shape != (2, 2):
            raise DomainError(f"expected 2x2 array, got shape {a.shape}")
        return cls(a[0, 0], a[0, 1], a[1, 0], a[1, 1])

    def to_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)

    @property
    def trace(self) -> complex:
        return self.a11 + self.a22

    @property
    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    def scaled(self, r: complex) -> "Mat2":
        return Mat2(r * self.a11, r * self.a12, r * self.a21, r * self.a22)

    def adjoint(self) -> "Mat2":
        return Mat2(self.a11.conjugate(), self.a21.conjugate(),
                    self.a12.conjugate(), self.a22.conjugate())


def singular_values(A: Mat2) -> tuple[float, float]:
    """Both singular values of a 2x2 matrix by the closed-form quadratic on
    the eigenvalues of A*A; no iterative eigensolver."""
    f = (abs(A.a11) ** 2 + abs(A.a12) ** 2 + abs(A.a21) ** 2 + abs(A.a22) ** 2)
    d = abs(A.det)
    disc = f * f - 4.0 * d * d
    disc = max(disc, 0.0)
    top = 0.5 * (f + math.sqrt(disc))
    smax = math.sqrt(top)
    smin = d / smax if smax > 0.0 else 0.0
    return smax, smin


def op_norm(A: Mat2) -> float:
    """Largest singular value (operator norm) of a 2x2 matrix."""
    return singular_values(A)[0]


def eigenvalues2(A: Mat2) -> tuple[complex, complex]:
    """Eigenvalues of a 2x2 matrix via the numerically stable quadratic."""
    return stable_quadratic_roots(A.trace, A.det)


def spectral_radius(A: Mat2) -> float:
    l1, l2 = eigenvalues2(A)
    return max(abs(l1), abs(l2))


def stable_quadratic_roots(s: complex, p: complex) -> tuple[complex, complex]:
    """Roots of ``t**2 - s*t + p`` avoiding cancellation.

    The bigger root is computed from the quadratic formula with the sign of
    the square root chosen to avoid subtraction; the other root comes from
    the product identity.
    """
    s = cx(s)
    p = cx(p)
    sq = cmath.sqrt(s * s - 4.0 * p)
    if abs(s + sq) < abs(s - sq):
        sq = -sq
    big = 0.5 * (s + sq)
    if abs(big) > _TINY:
        small = p / big
    else:
        small = 0.5 * (s - sq)
    return big, small


def upper_tri_contraction(z1: complex, w: complex, z2: complex,
                          strict: bool = False) -> bool:
    """Whether ``[[z1, w], [0, z2]]`` has operator norm <= 1 (< 1 if strict).

    Uses the criterion |w|^2 <= (1-|z1|^2)(1-|z2|^2) together with the
    modulus bounds on the diagonal; agrees with the closed-form norm.
    """
    r1 = abs(cx(z1))
    r2 = abs(cx(z2))
    bound = (1.0 - r1 * r1) * (1.0 - r2 * r2)
    w2 = abs(cx(w)) ** 2
    if strict:
        return r1 < 1.0 and r2 < 1.0 and w2 < bound
    return r1 <= 1.0 and r2 <= 1.0 and w2 <= bound


# Coordinate projections of a 2x2 matrix onto the four domains.

def pi_hexa(A: Mat2) -> tuple[complex, complex, complex, complex]:
    """(a21, a11, a22, det A)."""
    return (A.a21, A.a11, A.a22, A.det)


def pi_tetra(A: Mat2) -> tuple[complex, complex, complex]:
    """(a11, a22, det A)."""
    return (A.a11, A.a22, A.det)


def pi_penta(A: Mat2) -> tuple[complex, complex, complex]:
    """(a21, tr A, det A)."""
    return (A.a21, A.trace, A.det)


def pi_gamma(A: Mat2) -> tuple[complex, complex]:
    """(tr A, det A)."""
    return (A.trace, A.det)


def lift_point(p) -> Mat2:
    """The unique 2x2 matrix with pi_hexa(A) = (a, x1, x2, x3); needs a != 0."""
    a, x1, x2, x3 = (cx(t) for t in p)
    if abs(a) <= _TINY:
        raise DomainError("no unique lift: first coordinate vanishes")
    return Mat2(x1, (x1 * x2 - x3) / a, a, x2)


# ---------------------------------------------------------------------------
# Disc automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscAut:
    """Automorphism ``xi * B_z`` of the unit disc, B_z(t) = (t-z)/(conj(z)t-1).

    The pair (xi, z) with |xi| = 1 and |z| < 1 is unique for a given map;
    the identity map is (-1) * B_0.
    """

    xi: complex
    z: complex

    def __post_init__(self):
        xi = cx(self.xi)
        z = cx(self.z)
        if abs(abs(xi) - 1.0) > 1e-9:
            raise DomainError(f"|xi| = {abs(xi)} is not 1")
        if abs(z) >= 1.0:
            raise DomainError(f"|z| = {abs(z)} is not < 1")
        object.__setattr__(self, "xi", xi / abs(xi))
        object.__setattr__(self, "z", z)

    @classmethod
    def identity(cls) -> "DiscAut":
        return cls(-1.0, 0.0)

    def __call__(self, lam: complex) -> complex:
        lam = cx(lam)
        return self.xi * (lam - self.z) / (self.z.conjugate() * lam - 1.0)

    def compose(self, other: "DiscAut") -> "DiscAut":
        """Normal form of self o other."""
        x1, z1 = self.xi, self.z
        x2, z2 = other.xi, other.z
        num = 1.0 - x2.conjugate() * z1 * z2.conjugate()
        den = 1.0 - x2 * z1.conjugate() * z2
        xi = -x1 * x2 * num / den
        z = x2.conjugate() * (z1 - z2 * x2) / (z1 * z2.conjugate() * x2.conjugate() - 1.0)
        return DiscAut(xi, z)

    def invert(self) -> "DiscAut":
        return DiscAut(self.xi.conjugate(), self.xi * self.z)

    def star(self) -> "DiscAut":
        """The involution xi*B_z -> xi*B_{conj(xi)conj(z)}."""
        return DiscAut(self.xi, self.xi.conjugate() * self.z.conjugate())

    def approx_eq(self, other: "DiscAut", tol: float = 1e-10) -> bool:
        return abs(self.xi - other.xi) <= tol and abs(self.z - other.z) <= tol


def disc_aut_eval(v: DiscAut, lam: complex) -> complex:
    return v(lam)


def disc_aut_compose(v1: DiscAut, v2: DiscAut) -> DiscAut:
    return v1.compose(v2)


def disc_aut_invert(v: DiscAut) -> DiscAut:
    return v.invert()


def disc_aut_star(v: DiscAut) -> DiscAut:
    return v.star()


# ---------------------------------------------------------------------------
# Polynomials with a declared degree bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Polynomial with ascending coefficients and a declared degree bound n.

    The bound matters: reflection conjugates coefficient n-k into slot k, so
    the same coefficient list reflects differently under different bounds.
    """

    coeffs: np.ndarray
    n: int

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
        if c.ndim != 1:
            raise DomainError("coefficients must be one-dimensional")
        if not np.all(np.isfinite(c)):
            raise DomainError("non-finite polynomial coefficient")
        n = int(self.n)
        if n < 0:
            raise DomainError("degree bound must be nonnegative")
        if len(c) > n + 1:
            if np.max(np.abs(c[n + 1:])) > 0.0:
                raise DomainError(f"degree exceeds declared bound {n}")
            c = c[: n + 1]
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "n", n)

    @classmethod
    def const(cls, value: complex, n: int = 0) -> "Poly":
        return cls(np.array([cx(value)]), n)

    @classmethod
    def from_roots(cls, roots, lead: complex = 1.0, n: int | None = None) -> "Poly":
        c = np.array([cx(lead)])
        for r in roots:
            c = np.convolve(c, np.array([-cx(r), 1.0]))
        if n is None:
            n = len(c) - 1
        return cls(c, n)

    @property
    def degree(self) -> int:
        """Actual degree (index of last nonzero coefficient; -1 for zero)."""
        nz = np.nonzero(np.abs(self.coeffs) > 0.0)[0]
        return int(nz[-1]) if len(nz) else -1

    def __call__(self, lam):
        return np.polynomial.polynomial.polyval(lam, self.coeffs)

    def padded(self) -> np.ndarray:
        out = np.zeros(self.n + 1, dtype=complex)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def reflect(self) -> "Poly":
        """g~n with g~n(t) = t**n * conj(g(1/conj(t)))."""
        return Poly(np.conj(self.padded()[::-1]), self.n)

    def mul(self, other: "Poly", n: int | None = None) -> "Poly":
        c = np.convolve(self.coeffs, other.coeffs)
        if n is None:
            n = self.n + other.n
        return Poly(c, n)

    def scale(self, factor: complex) -> "Poly":
        return Poly(self.coeffs * cx(factor), self.n)

    def with_bound(self, n: int) -> "Poly":
        return Poly(self.coeffs, n)

    def roots(self) -> np.ndarray:
        d = self.degree
        if d <= 0:
            return np.array([], dtype=complex)
        return np.roots(self.coeffs[: d + 1][::-1])


def poly_reflect(g: Poly, n: int) -> Poly:
    """Reflect g at the declared bound n (error if deg g > n)."""
    if g.degree > n:
        raise DomainError(f"deg(g) = {g.degree} exceeds reflection bound {n}")
    return g.with_bound(n).reflect()


# ---------------------------------------------------------------------------
# Finite Blaschke products
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlaschkeProduct:
    """phase * prod (t - z_i)/(conj(z_i) t - 1), zeros z_i in the open disc."""

    phase: complex = 1.0
    zeros: tuple = ()

    def __post_init__(self):
        phase = cx(self.phase)
        if abs(abs(phase) - 1.0) > 1e-9:
            raise DomainError("Blaschke phase must be unimodular")
        zeros = tuple(cx(z) for z in self.zeros)
        for z in zeros:
            if abs(z) >= 1.0:
                raise DomainError(f"Blaschke zero |{z}| >= 1")
        object.__setattr__(self, "phase", phase / abs(phase))
        object.__setattr__(self, "zeros", zeros)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=complex)
        out = np.full(lam.shape, self.phase, dtype=complex)
        for z in self.zeros:
            out = out * (lam - z) / (np.conj(z) * lam - 1.0)
        return out if out.shape else complex(out)

    def as_rational(self) -> tuple[Poly, Poly]:
        """(numerator, denominator) polynomials of the product."""
        num = Poly.const(self.phase)
        den = Poly.const(1.0)
        for z in self.zeros:
            num = num.mul(Poly(np.array([-z, 1.0]), 1))
            den = den.mul(Poly(np.array([-1.0, z.conjugate()]), 1))
        return num, den


# ---------------------------------------------------------------------------
# Trigonometric polynomials and Fejer-Riesz factorization
# ---------------------------------------------------------------------------

def trig_eval(coeffs, lam):
    """Evaluate sum a_k lam^k, k = -n..n, for |lam| = 1; coeffs ascending."""
    c = np.asarray(coeffs, dtype=complex)
    n = (len(c) - 1) // 2
    lam = np.asarray(lam, dtype=complex)
    out = np.zeros(lam.shape, dtype=complex)
    for k in range(-n, n + 1):
        out = out + c[k + n] * lam ** k
    return out


def poly_abs2_trig(p: Poly) -> np.ndarray:
    """Laurent coefficients of |p|^2 on the circle, ordered a_{-m}..a_m."""
    c = p.coeffs
    m = len(c) - 1
    out = np.zeros(2 * m + 1, dtype=complex)
    for k in range(-m, m + 1):
        s = 0.0 + 0.0j
        for j in range(len(c)):
            if 0 <= j + k <= m:
                s += c[j + k] * c[j].conjugate()
        out[k + m] = s
    return out


def trig_sub(f, g) -> np.ndarray:
    """Difference of two trig polynomials, aligning the symmetric index."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    nf = (len(f) - 1) // 2
    ng = (len(g) - 1) // 2
    n = max(nf, ng)
    out = np.zeros(2 * n + 1, dtype=complex)
    out[n - nf: n + nf + 1] = f
    out[n - ng: n + ng + 1] -= g
    return out


def fejer_riesz(coeffs, strict: bool = False, tol: float = 1e-9,
                degeneracy_tol: float = 1e-10, pair_tol: float = 1e-8) -> Poly:
    """Spectral factor of a nonnegative trigonometric polynomial.

    Parameters
    ----------
    coeffs : array of length 2n+1
        Laurent coefficients a_{-n}..a_n of f; Hermitian (a_{-k} = conj(a_k))
        so that f is real on the circle.
    strict : bool
        Require min f on the circle to exceed `degeneracy_tol`, guaranteeing
        the factor is zero-free on the closed disc.

    Returns
    -------
    Poly
        D with deg D <= n, D != 0 on the open disc, |D|^2 = f on the circle,
        leading nonzero coefficient real positive.

    Raises
    ------
    DomainError
        If f is not Hermitian, goes negative on the circle, or (strict mode)
        comes within `degeneracy_tol` of zero there.

    The factorization roots q(t) = t^n f(t), pairs roots (r, 1/conj(r)) and
    assigns the representative of modulus >= 1 of each pair to D.
    """
    c = np.asarray(coeffs, dtype=complex)
    if len(c) % 2 != 1:
        raise DomainError("trig polynomial needs an odd number of coefficients")
    n = (len(c) - 1) // 2
    scale = float(np.max(np.abs(c))) if len(c) else 0.0
    if scale == 0.0:
        return Poly.const(0.0, 0)
    if np.max(np.abs(c - np.conj(c[::-1]))) > 1e-8 * scale:
        raise DomainError("trig polynomial is not real on the circle")

    samples = np.exp(2j * np.pi * np.arange(2048) / 2048)
    vals = trig_eval(c, samples).real
    fmin = float(np.min(vals))
    if fmin < -max(tol, 1e-10) * scale:
        raise DomainError(f"trig polynomial negative on the circle (min {fmin:.3e})")
    if strict and fmin <= degeneracy_tol * scale:
        raise DomainError("circle value too close to zero for the strict factorization")

    # Trim vanishing extreme coefficients: they only lower the true degree.
    while n > 0 and abs(c[0]) <= 1e-13 * scale and abs(c[-1]) <= 1e-13 * scale:
        c = c[1:-1]
        n -= 1
    if n == 0:
        val = max(c[0].real, 0.0)
        return Poly.const(math.sqrt(val), 0)

    q = c  # ascending coefficients of t^n f(t), degree 2n, q(0) = a_{-n} != 0
    roots = np.roots(q[::-1])

    order = np.argsort(-np.abs(roots))
    used = np.zeros(len(roots), dtype=bool)
    outside = []
    for i in order:
        if used[i]:
            continue
        used[i] = True
        target = 1.0 / roots[i].conjugate()
        best, best_d = -1, np.inf
        for j in range(len(roots)):
            if used[j]:
                continue
            d = abs(roots[j] - target)
            if d < best_d:
                best, best_d = j, d
        if best < 0:
            raise ConsistencyError("unpaired root in spectral factorization")
        if best_d > max(pair_tol, pair_tol * abs(target)) * 1e4:
            # generous cap: genuine pairing failures are caught by the
            # reconstruction check below
            pass
        used[best] = True
        # average the two estimates of the outside representative
        rho = 0.5 * (roots[i] + 1.0 / roots[best].conjugate())
        if abs(rho) < 1.0:
            if strict:
                raise DomainError("paired root fell inside the disc in strict mode")
            rho = rho / abs(rho) if abs(rho) > 0 else 1.0
        outside.append(rho)

    lead = abs(q[-1])
    amp = math.sqrt(lead / float(np.prod([abs(r) for r in outside])))
    D = Poly.from_roots(outside, lead=amp, n=n)

    # rotate so the leading nonzero coefficient is real positive
    d = D.coeffs.copy()
    top = d[D.degree]
    D = Poly(d * (abs(top) / top), n)

    recon = np.abs(D(samples)) ** 2
    err = float(np.max(np.abs(recon - vals)))
    if err > 1e-7 * max(scale, 1.0):
        raise ConsistencyError(f"spectral factor reconstruction error {err:.3e}")
    return D


# ---------------------------------------------------------------------------
# Matricial Mobius transform
# ---------------------------------------------------------------------------

def _sqrtm2_psd(H: np.ndarray) -> np.ndarray:
    """Principal square root of a 2x2 positive semidefinite Hermitian matrix."""
    t = (H[0, 0] + H[1, 1]).real
    d = (H[0, 0] * H[1, 1] - H[0, 1] * H[1, 0]).real
    s = math.sqrt(max(d, 0.0))
    denom = math.sqrt(max(t + 2.0 * s, 0.0))
    if denom <= _TINY:
        return np.zeros((2, 2), dtype=complex)
    return (H + s * np.eye(2)) / denom


def _inv2(M: np.ndarray) -> np.ndarray:
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(det) <= _TINY:
        raise DomainError("singular 2x2 matrix inversion")
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=complex) / det


def matricial_mobius(Z: Mat2, X: Mat2) -> Mat2:
    """M_Z(X) = (I-ZZ*)^(-1/2) (X-Z) (I-Z*X)^(-1) (I-Z*Z)^(1/2); needs |Z| < 1."""
    if op_norm(Z) >= 1.0:
        raise DomainError("matricial Mobius centre must be a strict contraction")
    Za = Z.to_array()
    Xa = X.to_array()
    I = np.eye(2)
    left = _inv2(_sqrtm2_psd(I - Za @ Za.conj().T))
    right = _sqrtm2_psd(I - Za.conj().T @ Za)
    out = left @ (Xa - Za) @ _inv2(I - Za.conj().T @ Xa) @ right
    return Mat2.from_array(out)
