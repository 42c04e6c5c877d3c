import math

import numpy as np
import pytest

from hexablock.numerics import DiscAut, Mat2, op_norm, pi_tetra
from hexablock.autos import HexaAut
from hexablock.psi import k_star, tetra_interior_margin


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def rand_complex(rng, scale=1.0):
    return complex(*rng.normal(0.0, scale, 2))


def rand_unit(rng):
    t = rng.uniform(0.0, 2.0 * math.pi)
    return complex(math.cos(t), math.sin(t))


def rand_disc(rng, r=0.8):
    while True:
        z = complex(*rng.uniform(-r, r, 2))
        if abs(z) < r:
            return z


def rand_mat(rng, scale=1.0):
    return Mat2(*(rand_complex(rng, scale) for _ in range(4)))


def rand_contraction(rng, norm_cap=0.9):
    A = rand_mat(rng)
    target = rng.uniform(0.15, 1.0) * norm_cap
    return A.scaled(target / max(op_norm(A), 1e-12))


def rand_tetra_point(rng, norm_cap=0.9, min_margin=0.0):
    """pi_E of a random strict contraction, optionally with a margin floor."""
    while True:
        x = pi_tetra(rand_contraction(rng, norm_cap))
        if tetra_interior_margin(x) > min_margin:
            return x


def rand_hexa_point(rng, norm_cap=0.9, slack=0.85):
    """Random point of the open hexablock with comfortable margin."""
    x = rand_tetra_point(rng, norm_cap, min_margin=0.02)
    a = rand_unit(rng) * rng.uniform(0.0, slack) / k_star(x)
    return (a, *x)


def rand_discaut(rng, r=0.7):
    return DiscAut(rand_unit(rng), rand_disc(rng, r))


def rand_hexaaut(rng, flip=None, r=0.6):
    if flip is None:
        flip = bool(rng.integers(0, 2))
    return HexaAut(rand_discaut(rng, r), rand_discaut(rng, r),
                   rand_unit(rng), flip)


def rand_be_point(rng, x2_cap=0.95):
    """Random point of the distinguished boundary of E (non-triangular a.s.)."""
    x2 = rand_disc(rng, x2_cap)
    x3 = rand_unit(rng)
    return (x2.conjugate() * x3, x2, x3)
