from fractions import Fraction as Q

import pytest

from hopfhomology.bialgebroid import unit_left_iso
from hopfhomology.ce import ce_resolution
from hopfhomology.homology import TorGroup, ext, tor
from hopfhomology.instances import (
    bimodule_a,
    bimodule_a_right,
    lie_abelian,
    lie_nonabelian2,
)
from hopfhomology.linalg import Matrix
from hopfhomology.pbw import LieModule
from hopfhomology.products import CEProducts, transport_cochain, transport_cycle


@pytest.fixture(scope="module")
def ab2():
    g = lie_abelian(2)
    res = ce_resolution(g)
    return g, res, CEProducts(res)


def test_cup_unit_class_acts_as_identity(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    e0 = ext(res, triv, 0)
    unit = e0.basis_cocycles()[0]
    e1 = ext(res, triv, 1)
    for psi in e1.basis_cocycles():
        c, tm = pr.cup(0, 1, unit, psi, triv, triv)
        assert e1.class_of(c) == e1.class_of(psi)


def test_cup_exterior_algebra_structure(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    e1 = ext(res, triv, 1)
    e2 = ext(res, triv, 2)
    xi0, xi1 = e1.basis_cocycles()
    c01, _ = pr.cup(1, 1, xi0, xi1, triv, triv)
    c10, _ = pr.cup(1, 1, xi1, xi0, triv, triv)
    c00, _ = pr.cup(1, 1, xi0, xi0, triv, triv)
    assert any(e2.class_of(c01))
    assert e2.class_of(c00) == [Q(0)]
    assert e2.class_of(c01) == [-x for x in e2.class_of(c10)]


def test_cup_well_defined_under_coboundary_perturbation(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    e1 = ext(res, triv, 1)
    e2 = ext(res, triv, 2)
    xi0, xi1 = e1.basis_cocycles()
    from hopfhomology.homology import cochain_matrix

    delta0 = cochain_matrix(res, triv, 0)
    # perturb xi0 by the coboundary of an arbitrary 0-cochain
    pert = [a + b for a, b in zip(xi0, delta0.apply([Q(5)]))]
    c_orig, _ = pr.cup(1, 1, xi0, xi1, triv, triv)
    c_pert, _ = pr.cup(1, 1, pert, xi1, triv, triv)
    assert e2.class_of(c_orig) == e2.class_of(c_pert)


def test_yoneda_with_identity_is_identity(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    e0 = ext(res, triv, 0)
    unit = e0.basis_cocycles()[0]
    e1 = ext(res, triv, 1)
    for phi in e1.basis_cocycles():
        # psi o phi with psi the unit class of Ext^0
        y = pr.yoneda(1, 0, phi, unit, triv)
        assert e1.class_of(y) == e1.class_of(phi)
        # and phi o unit
        y2 = pr.yoneda(0, 1, unit, phi, triv)
        assert e1.class_of(y2) == e1.class_of(phi)


def test_yoneda_associative(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    e1 = ext(res, triv, 1)
    xi0, xi1 = e1.basis_cocycles()
    e2 = ext(res, triv, 2)
    # (xi1 o xi0) needs a degree 2 target; compose three degree <= 1 maps
    y01 = pr.yoneda(1, 1, xi0, xi1, triv)
    # associativity against the unit on both sides
    e0 = ext(res, triv, 0)
    unit = e0.basis_cocycles()[0]
    lhs = pr.yoneda(2, 0, y01, unit, triv)
    assert e2.class_of(lhs) == e2.class_of(y01)


def test_suarez_sign_rule_ce(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    groups = {n: ext(res, triv, n) for n in range(3)}
    for m in range(3):
        for n in range(3 - m):
            for phi in groups[m].basis_cocycles():
                for psi in groups[n].basis_cocycles():
                    y = pr.yoneda(m, n, phi, psi, triv)
                    c1, _ = pr.cup(m, n, phi, psi, triv, triv)
                    c2, _ = pr.cup(n, m, psi, phi, triv, triv)
                    target = groups[m + n]
                    assert target.class_of(y) == target.class_of(c1)
                    assert target.class_of(c1) == [
                        Q(-1) ** (m * n) * x for x in target.class_of(c2)
                    ]


def test_bullet_unit_is_identity(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    trivr = LieModule.trivial(g, side="right")
    e0 = ext(res, triv, 0)
    unit = e0.basis_cocycles()[0]
    for n in range(3):
        tg = tor(res, trivr, n)
        for z in tg.basis_cycles():
            b = pr.bullet(0, unit, z, n, trivr)
            assert tg.class_of(b) == tg.class_of(z)


def test_bullet_kills_boundaries(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    trivr = LieModule.trivial(g, side="right")
    from hopfhomology.homology import chain_matrix

    e1 = ext(res, triv, 1)
    phi = e1.basis_cocycles()[0]
    d2 = chain_matrix(res, trivr, 2)
    boundary = d2.apply([Q(1)])
    tg = tor(res, trivr, 0)
    b = pr.bullet(1, phi, boundary, 1, trivr)
    assert tg.class_of(b) == [Q(0)] * tg.dim or all(x == 0 for x in tg.class_of(b))


def test_cap_unit_case_is_canonical_identification(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    trivr = LieModule.trivial(g, side="right")
    e0 = ext(res, triv, 0)
    unit = e0.basis_cocycles()[0]
    for n in range(3):
        tg = tor(res, trivr, n)
        for z in tg.basis_cycles():
            c, tm = pr.cap(0, unit, z, n, triv, trivr)
            out = TorGroup(res, tm, n)
            assert out.class_of(c) == tg.class_of(z)


def test_cap_bullet_agree_ce_instances():
    for g in (lie_abelian(2), lie_nonabelian2()):
        res = ce_resolution(g, validate=False)
        pr = CEProducts(res)
        triv = LieModule.trivial(g)
        trivr = LieModule.trivial(g, side="right")
        groups = {n: ext(res, triv, n) for n in range(3)}
        for m in range(3):
            for n in range(m, 3):
                tg = tor(res, trivr, n)
                for phi in groups[m].basis_cocycles():
                    for z in tg.basis_cycles():
                        b = pr.bullet(m, phi, z, n, trivr)
                        cp, tm = pr.cap(m, phi, z, n, triv, trivr)
                        tout = tor(res, trivr, n - m)
                        tout2 = TorGroup(res, tm, n - m)
                        assert tout.class_of(b) == tout2.class_of(cp)


def test_cap_degree_bookkeeping(ab2):
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    trivr = LieModule.trivial(g, side="right")
    e1 = ext(res, triv, 1)
    t2 = tor(res, trivr, 2)
    phi = e1.basis_cocycles()[0]
    z = t2.basis_cycles()[0]
    c, tm = pr.cap(1, phi, z, 2, triv, trivr)
    assert len(c) == res.rank(1) * tm.dim


def test_cap_functorial_in_coefficients(ab2):
    # naturality against the inclusion of a trivial summand
    g, res, pr = ab2
    triv = LieModule.trivial(g)
    trivr = LieModule.trivial(g, side="right")
    two = LieModule(g, 2, "right", [Matrix.zeros(2, 2) for _ in range(2)], name="triv2")
    e1 = ext(res, triv, 1)
    phi = e1.basis_cocycles()[0]
    t2 = tor(res, trivr, 2)
    z = t2.basis_cycles()[0]
    # include z into the first summand of the rank two module
    z_inc = []
    for k in range(res.rank(2)):
        z_inc.extend([z[k], Q(0)])
    c1, tm1 = pr.cap(1, phi, z, 2, triv, trivr)
    c2, tm2 = pr.cap(1, phi, z_inc, 2, triv, two)
    # the image under the induced inclusion must match componentwise
    expect = []
    for k in range(res.rank(1)):
        expect.extend([c1[k], Q(0)])
    assert c2 == expect


def test_lifted_class_satisfies_shifted_chain_identity(env_qeps, env_qeps_bar, env_qeps_products):
    # d f_j = (-1)^m f_{j-1} d: the lifted class realizes the shifted
    # differential, which is where the composition sign originates
    bar = env_qeps_bar
    A = bimodule_a(env_qeps.data)
    from hopfhomology.homology import ext as ext_

    for m in (1, 2):
        phi = ext_(bar, A, m).basis_cocycles()[0]
        lifts = env_qeps_products.lift_class(m, phi)
        for j in range(1, len(lifts)):
            lhs = bar.chain_matrix(j) @ lifts[j]
            rhs = (lifts[j - 1] @ bar.chain_matrix(m + j)).scale(Q(-1) ** m)
            assert lhs == rhs


def test_suarez_and_suarez2_on_hochschild_instance(env_qeps, env_qeps_hopf, env_qeps_bar, env_qeps_products):
    data = env_qeps.data
    pr = env_qeps_products
    bar = env_qeps_bar
    A = bimodule_a(data)
    Ar = bimodule_a_right(data)
    groups = {n: ext(bar, A, n) for n in range(4)}
    for m in range(4):
        for n in range(4 - m):
            for phi in groups[m].basis_cocycles():
                for psi in groups[n].basis_cocycles():
                    y = pr.yoneda(m, n, phi, psi, A)
                    c1, tm1 = pr.cup(m, n, phi, psi, A, A)
                    c2, tm2 = pr.cup(n, m, psi, phi, A, A)
                    iso = unit_left_iso(data, A, tm1)
                    target = groups[m + n]
                    cls_y = target.class_of(y)
                    cls_1 = target.class_of(
                        transport_cochain(bar.rank(m + n), iso, c1, tm1.space.dim)
                    )
                    cls_2 = target.class_of(
                        transport_cochain(bar.rank(m + n), iso, c2, tm2.space.dim)
                    )
                    assert cls_y == cls_1
                    assert cls_1 == [Q(-1) ** (m * n) * x for x in cls_2]
    for m in range(3):
        for n in range(m, 3):
            tg = tor(bar, Ar, n)
            for phi in groups[m].basis_cocycles():
                for z in tg.basis_cycles():
                    b = pr.bullet(m, phi, z, n, Ar)
                    cp, tm = pr.cap(m, phi, z, n, A, Ar)
                    tout = tor(bar, Ar, n - m)
                    iso = unit_left_iso(data, Ar, tm)
                    moved = transport_cycle(bar.rank(n - m), iso, cp, tm.space.dim)
                    assert tout.class_of(moved) == tout.class_of(b)


def test_odd_square_vanishes_rationally(env_qeps, env_qeps_bar, env_qeps_products):
    # graded commutativity makes odd squares 2-torsion, so they vanish
    # over the rationals; cross-checked against the brute force cochain
    # cup in the oracle tests
    data = env_qeps.data
    A = bimodule_a(data)
    bar = env_qeps_bar
    groups = {n: ext(bar, A, n) for n in range(3)}
    gen = groups[1].basis_cocycles()[0]
    sq, tm = env_qeps_products.cup(1, 1, gen, gen, A, A)
    iso = unit_left_iso(data, A, tm)
    moved = transport_cochain(bar.rank(2), iso, sq, tm.space.dim)
    assert groups[2].class_of(moved) == [Q(0)]


def test_even_times_odd_product_is_nonzero(env_qeps, env_qeps_bar, env_qeps_products):
    data = env_qeps.data
    A = bimodule_a(data)
    bar = env_qeps_bar
    groups = {n: ext(bar, A, n) for n in range(4)}
    odd = groups[1].basis_cocycles()[0]
    even = groups[2].basis_cocycles()[0]
    c, tm = env_qeps_products.cup(1, 2, odd, even, A, A)
    iso = unit_left_iso(data, A, tm)
    moved = transport_cochain(bar.rank(3), iso, c, tm.space.dim)
    assert any(groups[3].class_of(moved))
