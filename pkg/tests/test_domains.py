import math

import numpy as np
import pytest

from hexablock.numerics import DiscAut, DomainError, pi_tetra
from hexablock.psi import Psi_eval
from hexablock.domains import (Region, bE_generator_params, diamond,
                               embed_biball, embed_g2, embed_penta,
                               embed_tetra, g2_classify, penta_classify,
                               penta_hn_witness, penta_radius,
                               penta_radius_minus, retract_g2, retract_penta,
                               retract_tetra, solve_beta, tau_of,
                               tetra_classify)
from hexablock.hexa import h_member, hn_member
from hexablock.oracles import GridSpec, tetra_definitional
from hexablock.autos import TetraAut, tetra_aut_apply

from conftest import (rand_be_point, rand_contraction, rand_disc,
                      rand_discaut, rand_tetra_point, rand_unit)


# ---------------------------------------------------------------------------
# Symmetrized bidisc
# ---------------------------------------------------------------------------

def test_g2_origin_interior():
    assert g2_classify(0, 0).region is Region.INTERIOR


def test_g2_royal_corner():
    assert g2_classify(2, 1).region is Region.DISTINGUISHED_BOUNDARY


def test_g2_zero_one_distinguished():
    assert g2_classify(0, 1).region is Region.DISTINGUISHED_BOUNDARY


def test_g2_exterior():
    assert g2_classify(3, 0).region is Region.EXTERIOR


def test_g2_matches_definitional(rng):
    # interior iff (s, p) = (z1 + z2, z1 z2) for z1, z2 in the open disc
    for _ in range(300):
        z1 = rand_disc(rng, 0.97)
        z2 = rand_disc(rng, 0.97)
        v = g2_classify(z1 + z2, z1 * z2)
        assert v.region is Region.INTERIOR


def test_g2_beta_witness(rng):
    for _ in range(100):
        z1 = rand_disc(rng, 0.9)
        z2 = rand_disc(rng, 0.9)
        s, p = z1 + z2, z1 * z2
        beta = solve_beta(s, p)
        assert beta is not None
        assert beta + beta.conjugate() * p == pytest.approx(s, abs=1e-10)


# ---------------------------------------------------------------------------
# Tetrablock
# ---------------------------------------------------------------------------

def test_tetra_axis_family():
    for alpha in (0.0, 0.5, -0.7j, 0.9):
        assert tetra_classify((0, 0, alpha)).region is Region.INTERIOR


def test_tetra_iii_exterior():
    assert tetra_classify((1j, 1j, 1j)).region is Region.EXTERIOR


def test_tetra_face_point_boundary_not_distinguished():
    for r in (0.2, 0.5, 0.8):
        v = tetra_classify((r, 0, 1 - r))
        assert v.region is Region.BOUNDARY


def test_tetra_distinguished(rng):
    for _ in range(50):
        v = tetra_classify(rand_be_point(rng))
        assert v.region is Region.DISTINGUISHED_BOUNDARY
    # triangular corner
    assert tetra_classify((1, 1, 1)).region is Region.DISTINGUISHED_BOUNDARY


def test_tetra_from_contractions(rng):
    for _ in range(300):
        x = pi_tetra(rand_contraction(rng, 0.98))
        assert tetra_classify(x).region is Region.INTERIOR


def test_tetra_definitional_oracle_agreement(rng):
    spec = GridSpec(radial_points=10, angular_points=20, refinement_levels=2)
    checked = 0
    for _ in range(120):
        x = tuple(complex(*rng.uniform(-1.0, 1.0, 2)) for _ in range(3))
        v = tetra_classify(x)
        margin = min(v.margins["closure_beta"], v.margins["closure_part4"])
        if abs(margin) < 1e-3:
            continue
        ok, dmin = tetra_definitional(x, spec, tol=1e-3)
        if v.region is Region.EXTERIOR:
            # grids certify non-membership robustly
            assert dmin < 0.05 or not ok
        else:
            assert ok
        checked += 1
    assert checked > 60


def test_tetra_consistency_sweep(rng):
    # equivalent criteria must agree pairwise on a box sample
    for _ in range(2000):
        x = tuple(complex(*rng.uniform(-1.2, 1.2, 2)) for _ in range(3))
        tetra_classify(x)  # raises ConsistencyError on disagreement


# ---------------------------------------------------------------------------
# Pentablock
# ---------------------------------------------------------------------------

def test_penta_origin():
    assert penta_classify(0, 0, 0).region is Region.INTERIOR


def test_penta_triangle_vertex_distinguished():
    v = penta_classify(1, 0, -1)
    assert v.region is Region.DISTINGUISHED_BOUNDARY


def test_penta_surface_point_boundary():
    v = penta_classify(1, 0, 0.5)
    assert v.region is Region.BOUNDARY


def test_penta_root_swap_invariance(rng):
    for _ in range(100):
        l1 = rand_disc(rng, 0.95)
        l2 = rand_disc(rng, 0.95)
        a = complex(*rng.normal(0, 0.4, 2))
        r1 = penta_radius(l1 + l2, l1 * l2)
        # swapping the roots leaves the closed-form radius unchanged
        direct = 0.5 * abs(1 - l1.conjugate() * l2) + 0.5 * math.sqrt(
            (1 - abs(l1) ** 2) * (1 - abs(l2) ** 2))
        assert r1 == pytest.approx(direct, rel=1e-9)


def test_penta_hexa_bridge(rng):
    # (a, s, p) in P iff (a, s/2, s/2, p) in H
    for _ in range(400):
        a, s, p = (complex(*rng.uniform(-1.1, 1.1, 2)) for _ in range(3))
        v = penta_classify(a, s, p)
        if abs(v.margins.get("closure", 1.0)) < 1e-5:
            continue
        inside, margin = h_member((a, s / 2, s / 2, p))
        if abs(margin) < 1e-5:
            continue
        assert inside == v.in_interior


# ---------------------------------------------------------------------------
# Diamond action and tau
# ---------------------------------------------------------------------------

def test_diamond_identity_action(rng):
    ident = (0, 0, -1)  # tau of the identity automorphism
    for _ in range(20):
        x = rand_tetra_point(rng)
        assert diamond(ident, x) == pytest.approx(x, abs=1e-12)


def test_diamond_absorbs_zero():
    x = (0.2 + 0.1j, 0.3, 0.05)
    assert diamond(x, (0, 0, 0)) == pytest.approx((x[0], 0, 0))


def test_diamond_composition_law(rng):
    for _ in range(50):
        x = rand_tetra_point(rng, 0.95)
        y = rand_tetra_point(rng, 0.9)
        xy = diamond(x, y)
        for _ in range(8):
            z = rand_disc(rng, 0.9)
            lhs = Psi_eval(Psi_eval(z, y), x)
            rhs = Psi_eval(z, xy)
            assert lhs == pytest.approx(rhs, abs=1e-10)


def test_diamond_singularity():
    with pytest.raises(DomainError):
        diamond((0, 1.0, 0), (1.0, 0, 0))


def test_tau_of(rng):
    assert tau_of(DiscAut.identity()) == pytest.approx((0, 0, -1))
    for _ in range(50):
        v = rand_discaut(rng)
        t = tau_of(v)
        # normal form -xi B_z maps to (-xi z, conj(z), -xi)
        assert t == pytest.approx((v.xi * v.z, v.z.conjugate(), v.xi))
        for _ in range(4):
            lam = rand_disc(rng, 0.95)
            assert Psi_eval(lam, t) == pytest.approx(v(lam), abs=1e-11)
        assert tetra_classify(t).region in (Region.BOUNDARY,
                                            Region.DISTINGUISHED_BOUNDARY)


# ---------------------------------------------------------------------------
# Embeddings and retractions
# ---------------------------------------------------------------------------

def test_retract_embed_identity(rng):
    for _ in range(50):
        a, s, p = (complex(*rng.normal(0, 0.4, 2)) for _ in range(3))
        assert retract_penta(embed_penta(a, s, p)) == pytest.approx((a, s, p))
        assert retract_g2(embed_g2(s, p)) == pytest.approx((s, p))
        x = rand_tetra_point(rng)
        assert retract_tetra(embed_tetra(x)) == pytest.approx(x)


def test_biball_slice(rng):
    # (a, x) in B2 iff (a, x, 0, 0) in H
    for _ in range(200):
        a, x = (complex(*rng.uniform(-0.8, 0.8, 2)) for _ in range(2))
        inside, margin = h_member(embed_biball(a, x))
        expect = abs(a) ** 2 + abs(x) ** 2 < 1.0
        if abs(abs(a) ** 2 + abs(x) ** 2 - 1.0) < 1e-6:
            continue
        assert inside == expect


def test_embed_tetra_into_hexa(rng):
    for alpha in (0.1, 0.5j, -0.8):
        inside, _ = h_member(embed_tetra((0, 0, alpha)))
        assert inside


def test_penta_hn_witness(rng):
    count_shift = 0
    for _ in range(200):
        A = rand_contraction(rng, 0.95)
        a, s, p = A.a21, A.trace, A.det
        if not penta_classify(a, s, p).in_interior:
            continue
        w = penta_hn_witness(a, s, p)
        inside, margin = hn_member(w)
        assert inside, (w, margin)
        assert retract_penta(w) == pytest.approx((a, s, p), abs=1e-10)
        if abs(w[1] - w[2]) > 1e-10:
            count_shift += 1
    # both branches of the witness construction should occur
    assert count_shift > 0


def test_penta_hn_witness_symmetric_branch():
    # c_- < |a| < c_+ keeps the symmetric point
    a, s, p = 0.3, 0.2, 0.1
    cm, cp = penta_radius_minus(s, p), penta_radius(s, p)
    assert cm < abs(a) < cp
    w = penta_hn_witness(a, s, p)
    assert w == pytest.approx((a, s / 2, s / 2, p))
    assert penta_hn_witness(0, 0, 0) == pytest.approx((0, 0, 0, 0))


def test_penta_hn_witness_shifted_branch():
    # small |a| <= c_- needs the zeta shift
    s, p = 1.0, 0.21  # real distinct roots 0.7 and 0.3
    cm = penta_radius_minus(s, p)
    assert cm > 0.01
    a = 0.5 * cm
    w = penta_hn_witness(a, s, p)
    assert abs(w[1] - w[2]) > 1e-6
    inside, _ = hn_member(w)
    assert inside


# ---------------------------------------------------------------------------
# Distinguished boundary generation
# ---------------------------------------------------------------------------

def test_be_orbit_classifies_distinguished(rng):
    for _ in range(100):
        t = TetraAut(rand_discaut(rng), rand_discaut(rng), False)
        for base in ((0, 0, 1), (1, 1, 1)):
            img = tetra_aut_apply(t, base)
            assert tetra_classify(img).region is Region.DISTINGUISHED_BOUNDARY


def test_be_generator_recovery(rng):
    from hexablock.autos import _chi_from_params, _v_from_params
    for _ in range(200):
        x = rand_be_point(rng)
        kind, xi1, z1, xi2, z2 = bE_generator_params(x)
        t = TetraAut(_v_from_params(xi1, z1), _chi_from_params(xi2, z2), False)
        base = (1, 1, 1) if kind == "triangular" else (0, 0, 1)
        img = tetra_aut_apply(t, base)
        assert img == pytest.approx(x, abs=1e-8)
    for _ in range(30):
        x1, x2 = rand_unit(rng), rand_unit(rng)
        kind, *params = bE_generator_params((x1, x2, x1 * x2))
        assert kind == "triangular"
