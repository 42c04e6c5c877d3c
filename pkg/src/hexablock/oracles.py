"""Independent brute-force references: grid suprema of |psi|, the
definitional tetrablock test, and a sweep-based structured singular value.

These deliberately share no code path with the closed-form implementations
they are used to test.  All grids are deterministic functions of a GridSpec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import Mat2, cx, op_norm


@dataclass(frozen=True)
class GridSpec:
    radial_points: int = 14
    angular_points: int = 28
    refinement_levels: int = 3
    seed: int = 0


def disc_grid(spec: GridSpec, rmax: float = 0.995) -> np.ndarray:
    """Deterministic polar grid of the disc of radius rmax, centre included."""
    radii = np.linspace(0.0, rmax, spec.radial_points + 1)[1:]
    angles = np.linspace(0.0, 2.0 * math.pi, spec.angular_points, endpoint=False)
    pts = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    return np.concatenate([[0.0 + 0.0j], pts])


def _kappa_abs(z1: np.ndarray, z2: np.ndarray, x) -> np.ndarray:
    x1, x2, x3 = (cx(t) for t in x)
    t1 = 1.0 - np.abs(z1) ** 2
    t2 = 1.0 - np.abs(z2) ** 2
    ok = (t1 > 0.0) & (t2 > 0.0)
    den = 1.0 - x1 * z1 - x2 * z2 + x3 * z1 * z2
    out = np.zeros(np.broadcast(z1, z2).shape)
    np.divide(np.sqrt(np.clip(t1 * t2, 0.0, None)), np.abs(den),
              out=out, where=ok & (np.abs(den) > 1e-300))
    return out


def _corner_fan(x, spec: GridSpec):
    """Best |kappa| along approach fans into torus zeros of the denominator.

    On the boundary of the tetrablock the supremum can be a limit at a
    point of the torus where 1 - x1 z1 - x2 z2 + x3 z1 z2 vanishes; plain
    product grids converge to such corner values only at a square-root
    rate.  This scans the torus for zeros, then sweeps z = w(1 - d e^(i p))
    fans over log-spaced depths, depth ratios and small phases, polishing
    the depth ratio by golden section (the phase dependence is flat to
    second order at the optimum).
    """
    x1, x2, x3 = (cx(t) for t in x)

    def pair_of(theta):
        u1 = complex(math.cos(theta), math.sin(theta))
        den = x2 - x3 * u1
        if abs(den) < 1e-12:
            return u1, None, math.inf
        u2 = (1.0 - x1 * u1) / den
        return u1, u2, abs(abs(u2) - 1.0)

    th = np.linspace(0.0, 2.0 * math.pi, 4096, endpoint=False)
    w1 = np.exp(1j * th)
    den = x2 - x3 * w1
    ok = np.abs(den) > 1e-12
    w2 = np.full(w1.shape, np.inf, dtype=complex)
    w2[ok] = (1.0 - x1 * w1[ok]) / den[ok]
    gap = np.abs(np.abs(w2) - 1.0)
    gold = 0.5 * (math.sqrt(5.0) - 1.0)
    corners = []
    for k in np.nonzero((gap < 1e-3) & ok)[0]:
        # golden refinement of the torus zero (the gap typically touches
        # zero tangentially, so sign-based bisection does not apply)
        a_, b_ = float(th[k]) - 2e-3, float(th[k]) + 2e-3
        c_ = b_ - gold * (b_ - a_)
        d_ = a_ + gold * (b_ - a_)
        fc, fd = pair_of(c_)[2], pair_of(d_)[2]
        for _ in range(60):
            if fc < fd:
                b_, d_, fd = d_, c_, fc
                c_ = b_ - gold * (b_ - a_)
                fc = pair_of(c_)[2]
            else:
                a_, c_, fc = c_, d_, fd
                d_ = a_ + gold * (b_ - a_)
                fd = pair_of(d_)[2]
        c1, c2, residual = pair_of(0.5 * (a_ + b_))
        if c2 is None or residual > 1e-8:
            continue
        c2 /= abs(c2)
        if all(abs(c1 - e1) + abs(c2 - e2) > 1e-3 for e1, e2 in corners):
            corners.append((c1, c2))
        if len(corners) >= 16:
            break
    best = 0.0
    arg = None
    phases = np.array([-0.5, -0.25, 0.0, 0.25, 0.5])
    ratios = np.geomspace(1e-3, 1e3, 241)
    for c1, c2 in corners:
        for d2 in np.geomspace(1e-8, 3e-2, 12):
            d1 = np.clip(ratios * d2, 1e-14, 0.5)
            z1 = c1 * (1.0 - d1[:, None, None]
                       * np.exp(1j * phases)[None, :, None])
            z2 = c2 * (1.0 - d2 * np.exp(1j * phases)[None, None, :])
            Z1, Z2 = np.broadcast_arrays(z1, z2)
            vals = _kappa_abs(Z1, Z2, x)
            flat = int(np.argmax(vals))
            if float(vals.ravel()[flat]) > best:
                best = float(vals.ravel()[flat])
                idx = np.unravel_index(flat, vals.shape)
                arg = (complex(Z1[idx]), complex(Z2[idx]))
        # golden-section polish of the depth ratio; the base depth balances
        # O(d) truncation against O(eps/d) cancellation noise
        d2 = 1e-8
        gold = 0.5 * (math.sqrt(5.0) - 1.0)
        lo, hi = math.log(1e-4), math.log(1e4)

        def fval(lt):
            d1 = math.exp(lt) * d2
            if not 0.0 < d1 < 0.5:
                return 0.0
            return float(_kappa_abs(np.array(c1 * (1.0 - d1)),
                                    np.array(c2 * (1.0 - d2)), x))

        a_, b_ = lo, hi
        c_ = b_ - gold * (b_ - a_)
        d_ = a_ + gold * (b_ - a_)
        fc, fd = fval(c_), fval(d_)
        for _ in range(80):
            if fc > fd:
                b_, d_, fd = d_, c_, fc
                c_ = b_ - gold * (b_ - a_)
                fc = fval(c_)
            else:
                a_, c_, fc = c_, d_, fd
                d_ = a_ + gold * (b_ - a_)
                fd = fval(d_)
        lt = 0.5 * (a_ + b_)
        cand = fval(lt)
        if cand > best:
            best = cand
            arg = (complex(c1 * (1.0 - math.exp(lt) * d2)),
                   complex(c2 * (1.0 - d2)))
    return best, arg


def grid_sup_kappa(x, spec: GridSpec = GridSpec()):
    """(sup estimate, argmax) of |kappa(., x)| over the open bidisc.

    A polar product grid is refined around the running argmax for
    `refinement_levels` rounds; the estimate is monotone non-decreasing in
    the refinement level by construction (the incumbent stays a candidate).
    Corner fans into torus zeros of the denominator capture boundary-limit
    suprema that product grids approach too slowly.  Ties break toward the
    lexicographically first grid index.
    """
    pts = disc_grid(spec)
    Z1 = pts[:, None]
    Z2 = pts[None, :]
    vals = _kappa_abs(Z1, Z2, x)
    flat = int(np.argmax(vals))
    best = float(vals.ravel()[flat])
    i, j = np.unravel_index(flat, vals.shape)
    b1, b2 = complex(pts[i]), complex(pts[j])

    spacing = 1.0 / max(spec.radial_points, 1)
    window = 2.5 * spacing
    for _ in range(spec.refinement_levels):
        off = np.linspace(-window, window, 11)
        g1 = (b1 + off[:, None, None, None] + 1j * off[None, :, None, None])
        g2 = (b2 + off[None, None, :, None] + 1j * off[None, None, None, :])
        r1 = np.maximum(np.abs(g1), 1e-300)
        r2 = np.maximum(np.abs(g2), 1e-300)
        g1 = np.where(r1 >= 1.0, g1 / r1 * 0.999999, g1)
        g2 = np.where(r2 >= 1.0, g2 / r2 * 0.999999, g2)
        vals = _kappa_abs(g1, g2, x)
        flat = int(np.argmax(vals))
        cand = float(vals.ravel()[flat])
        idx = np.unravel_index(flat, vals.shape)
        # the sup estimate is monotone; the centre always follows the
        # finer grid's argmax, which tracks the flat top better
        b1 = complex(np.broadcast_to(g1, vals.shape)[idx])
        b2 = complex(np.broadcast_to(g2, vals.shape)[idx])
        best = max(best, cand)
        window *= 0.20
    corner, corner_arg = _corner_fan(x, spec)
    if corner > best and corner_arg is not None:
        best = corner
        b1, b2 = corner_arg
    return best, (b1, b2)


def grid_sup_psi(p, spec: GridSpec = GridSpec()):
    """(sup estimate, argmax) of |psi_{z1,z2}(p)| over the open bidisc."""
    a = abs(cx(p[0]))
    sup, arg = grid_sup_kappa(p[1:], spec)
    return a * sup, arg


def tetra_definitional(x, spec: GridSpec = GridSpec(), tol: float = 1e-9):
    """Definitional tetrablock probe: minimum of |1 - x1 z1 - x2 z2 + x3 z1 z2|
    over a closed-bidisc grid.

    Returns (candidate_flag, min_abs).  A positive minimum on a finite grid
    only *suggests* closure membership; a small minimum robustly certifies
    non-membership, which is what the cross-checks rely on.
    """
    x1, x2, x3 = (cx(t) for t in x)
    pts = disc_grid(spec, rmax=1.0)
    Z1 = pts[:, None]
    Z2 = pts[None, :]
    den = np.abs(1.0 - x1 * Z1 - x2 * Z2 + x3 * Z1 * Z2)
    flat = int(np.argmin(den))
    best = float(den.ravel()[flat])
    i, j = np.unravel_index(flat, den.shape)
    b1, b2 = complex(pts[i]), complex(pts[j])

    spacing = 1.0 / max(spec.radial_points, 1)
    window = 2.5 * spacing
    for _ in range(spec.refinement_levels):
        off = np.linspace(-window, window, 9)
        g1 = (b1 + off[:, None, None, None] + 1j * off[None, :, None, None])
        g2 = (b2 + off[None, None, :, None] + 1j * off[None, None, None, :])
        r1 = np.maximum(np.abs(g1), 1e-300)
        r2 = np.maximum(np.abs(g2), 1e-300)
        g1 = np.where(r1 > 1.0, g1 / r1, g1)
        g2 = np.where(r2 > 1.0, g2 / r2, g2)
        den = np.abs(1.0 - x1 * g1 - x2 * g2 + x3 * g1 * g2)
        flat = int(np.argmin(den))
        cand = float(den.ravel()[flat])
        if cand < best:
            best = cand
            idx = np.unravel_index(flat, den.shape)
            b1 = complex(np.broadcast_to(g1, den.shape)[idx])
            b2 = complex(np.broadcast_to(g2, den.shape)[idx])
        window *= 0.28
    return best > tol, best


def _tri_norms(z1: np.ndarray, z2: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Operator norms of [[z1, w], [0, z2]], vectorized closed form."""
    f = np.abs(z1) ** 2 + np.abs(z2) ** 2 + np.abs(w) ** 2
    d = np.abs(z1 * z2)
    disc = np.clip(f * f - 4.0 * d * d, 0.0, None)
    return np.sqrt(0.5 * (f + np.sqrt(disc)))


def mu_bruteforce(A: Mat2, spec: GridSpec = GridSpec()) -> float:
    """Structured singular value for the upper-triangular structure by sweep.

    For X = [[z1, w], [0, z2]], det(I - AX) = 0 is linear in w whenever
    a21 != 0, so the sweep ranges over (z1, z2), solves for w, evaluates
    ||X|| by the closed 2x2 form and returns 1/min.  The search radius
    1/|a21| is valid because X(0, 0) already has norm 1/|a21|.  When
    a21 = 0 the determinant no longer involves w, and the zero set is the
    curve 1 - a11 z1 - a22 z2 + det(A) z1 z2 = 0 swept with w = 0.

    Returns 0 when no structured X with det(I - AX) = 0 exists.
    """
    a21 = A.a21
    a11, a22, dA = A.a11, A.a22, A.det

    if abs(a21) > 1e-13:

        def cost(Z1, Z2):
            W = (1.0 - a11 * Z1 - a22 * Z2 + dA * Z1 * Z2) / a21
            return _tri_norms(Z1, Z2, W)

        def sweep(R, fine=False):
            # linear radii resolve the target scale, log radii bridge the
            # gap when the initial radius overshoots by orders of magnitude
            mult = 2 if fine else 1
            lin = np.linspace(0.0, R, mult * spec.radial_points + 1)[1:]
            logr = np.geomspace(R * 1e-3, R, spec.radial_points // 2)
            radii = np.unique(np.concatenate([lin, logr]))
            angles = np.linspace(0.0, 2.0 * math.pi,
                                 mult * spec.angular_points, endpoint=False)
            pts = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
            pts = np.concatenate([[0.0 + 0.0j], pts])
            vals = cost(pts[:, None], pts[None, :])
            flat = int(np.argmin(vals))
            i, j = np.unravel_index(flat, vals.shape)
            return float(vals.ravel()[flat]), complex(pts[i]), complex(pts[j])

        def curve_candidates(R):
            # the determinant curve w = 0 is a thin valley of the sweep cost
            # when |a21| is small; parametrize it directly.  ||X|| >= 1/||A||
            # for any feasible X, giving a rigorous radial floor.
            floor = 0.5 / max(op_norm(A), 1e-13)
            radii = np.geomspace(min(floor, R), R,
                                 8 * spec.radial_points)
            angles = np.linspace(0.0, 2.0 * math.pi, 4 * spec.angular_points,
                                 endpoint=False)
            ring = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
            best_c = math.inf
            arg = (0.0 + 0.0j, 0.0 + 0.0j)
            for first in (True, False):
                num = 1.0 - (a22 if first else a11) * ring
                den = (a11 - dA * ring) if first else (a22 - dA * ring)
                ok = np.abs(den) > 1e-13
                if not np.any(ok):
                    continue
                other = num[ok] / den[ok]
                z1 = other if first else ring[ok]
                z2 = ring[ok] if first else other
                vals = cost(z1, z2)
                k = int(np.argmin(vals))
                if float(vals[k]) < best_c:
                    best_c = float(vals[k])
                    arg = (complex(z1[k]), complex(z2[k]))
            return best_c, arg[0], arg[1]

        # X(0, 0) is feasible with norm 1/|a21|, so the minimizer satisfies
        # max(|z1|, |z2|) <= ||X|| <= incumbent; shrinking the sweep radius
        # to the running best concentrates resolution where it matters
        R = 1.0001 / abs(a21)
        best, b1, b2 = sweep(R)
        cand, c1, c2 = curve_candidates(R)
        if cand < best:
            best, b1, b2 = cand, c1, c2
        for _ in range(10):
            R_new = min(R, 1.02 * best)
            if R_new > 0.9 * R:
                break
            R = R_new
            cand, c1, c2 = sweep(R)
            if cand < best:
                best, b1, b2 = cand, c1, c2
        cand, c1, c2 = sweep(min(R, 1.02 * best), fine=True)
        if cand < best:
            best, b1, b2 = cand, c1, c2
        cand, c1, c2 = curve_candidates(min(R, 1.02 * best))
        if cand < best:
            best, b1, b2 = cand, c1, c2

        window = max(2.5 * best / max(2 * spec.radial_points, 1), 1e-9)
        for _ in range(max(spec.refinement_levels, 3) + 5):
            off = np.linspace(-window, window, 9)
            g1 = b1 + off[:, None, None, None] + 1j * off[None, :, None, None]
            g2 = b2 + off[None, None, :, None] + 1j * off[None, None, None, :]
            vals = cost(g1, g2)
            flat = int(np.argmin(vals))
            cand = float(vals.ravel()[flat])
            if cand < best:
                best = cand
                idx = np.unravel_index(flat, vals.shape)
                b1 = complex(np.broadcast_to(g1, vals.shape)[idx])
                b2 = complex(np.broadcast_to(g2, vals.shape)[idx])
            window *= 0.35
        return 1.0 / best if best > 1e-13 else 0.0

    # a21 = 0: minimize max(|z1|, |z2|) on the determinant curve, w = 0
    best = math.inf
    R = 1.0e3
    radii = np.linspace(0.0, R, 4 * spec.radial_points + 1)[1:]
    angles = np.linspace(0.0, 2.0 * math.pi, 2 * spec.angular_points,
                         endpoint=False)
    pts = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    pts = np.concatenate([[0.0 + 0.0j], pts])
    for solve_first in (True, False):
        # fix one coordinate on the grid, solve the other linearly
        num = 1.0 - (a22 if solve_first else a11) * pts
        den = (a11 - dA * pts) if solve_first else (a22 - dA * pts)
        ok = np.abs(den) > 1e-13
        other = np.full(pts.shape, np.inf, dtype=complex)
        other[ok] = num[ok] / den[ok]
        cost = np.maximum(np.abs(pts), np.abs(other))
        m = float(np.min(cost))
        best = min(best, m)
    if not math.isfinite(best) or best > R:
        return 0.0
    # local refinement on the better parametrization
    for _ in range(40):
        shrunk = False
        for solve_first in (True, False):
            t = np.linspace(0, 2 * math.pi, 720, endpoint=False)
            ring = best * np.exp(1j * t)
            num = 1.0 - (a22 if solve_first else a11) * ring
            den = (a11 - dA * ring) if solve_first else (a22 - dA * ring)
            ok = np.abs(den) > 1e-13
            other = np.full(ring.shape, np.inf, dtype=complex)
            other[ok] = num[ok] / den[ok]
            cost = np.maximum(np.abs(ring), np.abs(other))
            m = float(np.min(cost))
            if m < best * (1.0 - 1e-6):
                best = m
                shrunk = True
        if not shrunk:
            break
    return 1.0 / best if best > 1e-13 else 0.0
