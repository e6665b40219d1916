from fractions import Fraction as Q
from math import comb

import pytest

from hopfhomology.algebras import ModuleRep
from hopfhomology.bialgebroid import galois_map
from hopfhomology.ce import CEResolution
from hopfhomology.duality import (
    bullet_omega_underived,
    cap_omega_underived,
    delta_chain_check_ug,
    delta_underived,
    detect_duality_ug,
    dual_bases,
    duality_isomorphism_ug,
)
from hopfhomology.errors import NotDualityError, NotProjectiveError
from hopfhomology.homology import tor
from hopfhomology.instances import (
    cyclic_group_algebra,
    lie_abelian,
    lie_nonabelian2,
    s3_modules,
)
from hopfhomology.linalg import Matrix
from hopfhomology.oracles import lie_cohomology_dims, lie_homology_dims
from hopfhomology.pbw import LieModule, tensor_right_lie
from hopfhomology.products import CEProducts


def _right_version(data, left):
    inv = data.group_inverse
    return ModuleRep(data.U, left.dim, "right", [left.action[inv[i]] for i in range(data.U.dim)])


@pytest.fixture(scope="module")
def qs3_dual(qs3):
    return dual_bases(qs3.data, s3_modules(qs3.data)["trivial"], generators=[[Q(1)]])


def test_dual_basis_regular_module():
    data = cyclic_group_algebra(2)
    reg = ModuleRep.regular_left(data.U)
    db = dual_bases(data, reg, generators=[[Q(1), Q(0)]])
    # e^1 is the identity of Hom(U, U), omega is 1 (x) 1
    assert db.duals[0] == Matrix.identity(2)


def test_dual_basis_qs3_symmetrizer(qs3, qs3_dual):
    mat = qs3_dual.duals[0]
    assert mat == Matrix([[Q(1, 6)] for _ in range(6)])


def test_dual_system_identity(qs3, qs3_dual):
    # checked internally at construction; re-assert through the public data
    mods = s3_modules(qs3.data)
    triv = mods["trivial"]
    for a in range(triv.dim):
        acc = Q(0)
        for i, g in enumerate(qs3_dual.generators):
            u_val = qs3_dual.duals[i].col(a)
            acc += triv.act(u_val).apply(g)[0]
        assert acc == Q(1)


def test_omega_independent_of_generating_set(qs3, qs3_dual):
    mods = s3_modules(qs3.data)
    db2 = dual_bases(qs3.data, mods["trivial"], generators=[[Q(1)], [Q(2)]])
    assert db2.omega == qs3_dual.omega
    db3 = dual_bases(qs3.data, mods["trivial"], generators=[[Q(3)]])
    assert db3.omega == qs3_dual.omega


def test_not_projective_raises():
    # A is not projective over A (x) A^op when A has nonzero Hochschild
    # cohomology in positive degrees
    from hopfhomology.instances import enveloping_instance, dual_numbers, bimodule_a

    env = enveloping_instance(dual_numbers(), "env-qeps")
    with pytest.raises(NotProjectiveError):
        dual_bases(env, bimodule_a(env))


def test_delta_underived_bijective_all_modules(qs3, qs3_dual):
    mods = s3_modules(qs3.data)
    for name in ("trivial", "sign", "std2"):
        Mr = _right_version(qs3.data, mods[name])
        fwd, inv, src, tgt = delta_underived(qs3_dual, Mr)
        assert src.dim == tgt.dim
        if src.dim:
            assert (fwd @ inv) == Matrix.identity(tgt.dim)


def test_bullet_omega_underived_bijective(qs3, qs3_dual):
    # the evaluation phi -> sum_i e^i (x) phi(e_i) against the degree
    # zero class, bijective for every semisimple coefficient module
    mods = s3_modules(qs3.data)
    for name, want in (("trivial", 1), ("sign", 0), ("std2", 0), ("regular", 1)):
        fwd, src, tgt = bullet_omega_underived(qs3_dual, mods[name])
        assert src.dim == tgt.dim == want


def test_cap_omega_underived_bijective_all_modules(qs3, qs3_dual):
    h = galois_map(qs3.data)
    mods = s3_modules(qs3.data)
    expected_dims = {"trivial": 1, "sign": 0, "std2": 0}
    for name, want in expected_dims.items():
        fwd, src, tgt, tm = cap_omega_underived(h, mods[name], qs3_dual)
        assert src.dim == tgt.dim == want


def test_detect_duality_all_lie_instances():
    for g, want_weights in (
        (lie_abelian(1), [Q(0)]),
        (lie_abelian(2), [Q(0), Q(0)]),
        (lie_nonabelian2(), [Q(1), Q(0)]),
    ):
        dd = detect_duality_ug(g, bound=4)
        assert dd.dimension == g.dim
        assert dd.weights == want_weights
        assert dd.report.ok
        assert dd.astar.dim == 1


def test_detect_duality_rejects_truncated_complex():
    # a complex that is not a resolution: drop the top ce term
    g = lie_abelian(2)

    class Truncated(CEResolution):
        def rank(self, n):
            return 0 if n >= 2 else super().rank(n)

        def diff_cols(self, n):
            return [] if n >= 2 else super().diff_cols(n)

    res = Truncated(g, validate=False)
    import hopfhomology.duality as dual_mod

    orig = dual_mod.CEResolution
    dual_mod.CEResolution = lambda gg, validate=True: res
    try:
        with pytest.raises(NotDualityError):
            detect_duality_ug(g, bound=3)
    finally:
        dual_mod.CEResolution = orig


def test_delta_chain_check(qs3):
    for g in (lie_abelian(2), lie_nonabelian2()):
        dd = detect_duality_ug(g, bound=3)
        assert delta_chain_check_ug(dd, LieModule.trivial(g, side="right"))
        assert delta_chain_check_ug(dd, dd.astar)


def test_fundamental_class_is_nontrivial_cycle():
    g = lie_nonabelian2()
    dd = detect_duality_ug(g, bound=4)
    tg = tor(dd.resolution, dd.astar, dd.dimension)
    assert tg.dim == 1
    assert any(tg.class_of(dd.omega))


def test_duality_isomorphism_abelian2_binomial_profile():
    g = lie_abelian(2)
    dd = detect_duality_ug(g, bound=4)
    pr = CEProducts(dd.resolution)
    triv = LieModule.trivial(g)
    for m in range(3):
        mat, eg, tg = duality_isomorphism_ug(pr, dd, triv, m)
        assert eg.dim == comb(2, m)
        assert tg.dim == comb(2, 2 - m)


def test_duality_isomorphism_nonabelian_profile_and_oracle():
    g = lie_nonabelian2()
    dd = detect_duality_ug(g, bound=4)
    pr = CEProducts(dd.resolution)
    triv = LieModule.trivial(g)
    ext_dims = []
    tor_dims = []
    for m in range(3):
        mat, eg, tg = duality_isomorphism_ug(pr, dd, triv, m)
        ext_dims.append(eg.dim)
        tor_dims.append(tg.dim)
    assert ext_dims == [1, 1, 0]
    assert tor_dims == [1, 1, 0]
    # the independent classical-formula oracle confirms both profiles
    assert lie_cohomology_dims(g, triv, 2) == [1, 1, 0]
    twisted = tensor_right_lie(g, triv, dd.astar)
    hdims = lie_homology_dims(g, twisted, 2)
    assert [hdims[2 - m] for m in range(3)] == [1, 1, 0]


def test_duality_isomorphism_adjoint_coefficients():
    for g in (lie_abelian(2), lie_nonabelian2()):
        dd = detect_duality_ug(g, bound=4)
        pr = CEProducts(dd.resolution)
        adj = LieModule.adjoint(g)
        for m in range(g.dim + 1):
            mat, eg, tg = duality_isomorphism_ug(pr, dd, adj, m)
            assert eg.dim == tg.dim


def test_duality_sl2_unimodular_whitehead_profile():
    from hopfhomology.instances import lie_sl2

    g = lie_sl2()
    dd = detect_duality_ug(g, bound=3)
    assert dd.dimension == 3
    assert dd.weights == [Q(0), Q(0), Q(0)]  # unimodular
    assert dd.report.ok
    pr = CEProducts(dd.resolution)
    triv = LieModule.trivial(g)
    dims = []
    for m in range(4):
        mat, eg, tg = duality_isomorphism_ug(pr, dd, triv, m)
        assert eg.dim == tg.dim
        dims.append(eg.dim)
    assert dims == [1, 0, 0, 1]


def test_duality_certificates_stable_under_larger_window():
    dd4 = detect_duality_ug(lie_nonabelian2(), bound=4)
    dd6 = detect_duality_ug(lie_nonabelian2(), bound=6)
    assert dd4.weights == dd6.weights
    assert dd4.report.ok and dd6.report.ok


def test_underived_duality_semisimple_hochschild():
    from hopfhomology.instances import bimodule_a, enveloping_instance, q_times_q

    env = enveloping_instance(q_times_q(), "env-qxq")
    h = galois_map(env)
    A = bimodule_a(env)
    db = dual_bases(env, A)
    fwd, src, tgt, tm = cap_omega_underived(h, A, db)
    assert src.dim == tgt.dim == 2


def test_ext_into_the_ring_concentrates_in_top_degree():
    # dimension 1: the dual complex has Ext^0(k, U) = 0 and a rank one
    # cokernel at the top; checked here through the public detector
    dd = detect_duality_ug(lie_abelian(1), bound=5)
    assert dd.report.checks["ext_vanishing_below_top"]
    assert dd.report.checks["dualizing_module_rank_one"]
    assert dd.report.checks["double_dual_trivial"]
