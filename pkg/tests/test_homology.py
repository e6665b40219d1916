import pytest

from hopfhomology.algebras import ModuleRep, hom_over, tensor_over
from hopfhomology.errors import WindowExceededError
from hopfhomology.homology import (
    ext,
    ext_dims,
    resolution_independence,
    tor,
    tor_dims,
)
from hopfhomology.instances import (
    bimodule_a,
    bimodule_a_right,
    cyclic_group_algebra,
    enveloping_instance,
    q_times_q,
    s3_modules,
    _right_trivial_group,
)
from hopfhomology.linalg import Matrix
from hopfhomology.oracles import hochschild_cohomology_dims, hochschild_homology_dims
from hopfhomology.resolutions import bar_resolution


def test_ext0_group_trivial_is_one_dimensional():
    data = cyclic_group_algebra(3)
    bar = bar_resolution(data, 2)
    triv = ModuleRep(data.U, 1, "left", [Matrix([[1]])] * 3)
    assert ext(bar, triv, 0).dim == 1


def test_tor0_group_trivial():
    data = cyclic_group_algebra(2)
    bar = bar_resolution(data, 2)
    trivr = ModuleRep(data.U, 1, "right", [Matrix([[1]])] * 2)
    assert tor(bar, trivr, 0).dim == 1


def test_qs3_ext_vanishes_positive_degrees(qs3, qs3_bar):
    mods = s3_modules(qs3.data)
    assert ext_dims(qs3_bar, mods["trivial"], 3) == [1, 0, 0, 0]


def test_qs3_tor_vanishes_positive_degrees(qs3, qs3_bar):
    assert tor_dims(qs3_bar, _right_trivial_group(qs3.data), 3) == [1, 0, 0, 0]


def test_hochschild_matches_oracle_for_dual_numbers(env_qeps, env_qeps_bar):
    M = bimodule_a(env_qeps.data)
    N = bimodule_a_right(env_qeps.data)
    up = [ext(env_qeps_bar, M, n).dim for n in range(4)]
    down = [tor(env_qeps_bar, N, n).dim for n in range(4)]
    oracle_up = hochschild_cohomology_dims(env_qeps.data.A, 3)
    oracle_down = hochschild_homology_dims(env_qeps.data.A, 3)
    assert oracle_up == [2, 1, 1, 1]
    assert oracle_down == [2, 1, 1, 1]
    assert up == oracle_up
    assert down == oracle_down


def test_hochschild_semisimple_q_times_q():
    env = enveloping_instance(q_times_q(), "env-qxq")
    bar = bar_resolution(env, 3)
    M = bimodule_a(env)
    assert ext_dims(bar, M, 2) == [2, 0, 0]
    assert hochschild_cohomology_dims(env.A, 2) == [2, 0, 0]


def test_sweedler_ext_tor_period_two(sweedler):
    # the trivial module over Sweedler's algebra has two-periodic
    # (co)homology: dims 1, 0, 1, 0
    from hopfhomology.instances import sweedler_modules, sweedler_right_modules

    bar = bar_resolution(sweedler.data, 4)
    triv = sweedler_modules(sweedler.data)["trivial"]
    trivr = sweedler_right_modules(sweedler.data)["trivial"]
    assert ext_dims(bar, triv, 3) == [1, 0, 1, 0]
    assert tor_dims(bar, trivr, 3) == [1, 0, 1, 0]


def test_ext0_equals_hom_and_tor0_equals_tensor(env_qeps, env_qeps_bar):
    data = env_qeps.data
    M = bimodule_a(data)
    homs = hom_over(data.U, data.a_module(), M)
    assert ext(env_qeps_bar, M, 0).dim == homs.dim
    N = bimodule_a_right(data)
    t = tensor_over(data.U, N, data.a_module())
    assert tor(env_qeps_bar, N, 0).dim == t.dim


def test_window_exceeded(env_qeps_bar):
    M = bimodule_a(env_qeps_bar.data)
    with pytest.raises(WindowExceededError):
        ext(env_qeps_bar, M, 4)
    with pytest.raises(WindowExceededError):
        tor(env_qeps_bar, bimodule_a_right(env_qeps_bar.data), 4)


def test_classes_carry_cocycle_representatives(env_qeps, env_qeps_bar):
    M = bimodule_a(env_qeps.data)
    eg = ext(env_qeps_bar, M, 2)
    from hopfhomology.homology import cochain_matrix

    delta = cochain_matrix(env_qeps_bar, M, 2)
    for v in eg.basis_cocycles():
        assert all(x == 0 for x in delta.apply(v))
        assert not eg.is_coboundary(v)


def test_resolution_independence_same_resolution(env_qeps, env_qeps_bar):
    M = bimodule_a(env_qeps.data)
    iso = resolution_independence(env_qeps_bar, env_qeps_bar, M, 1)
    assert iso.forward == Matrix.identity(1)


def test_resolution_independence_round_trip(env_qeps, env_qeps_bar):
    M = bimodule_a(env_qeps.data)
    other = bar_resolution(env_qeps.data, 4)
    for n in range(3):
        iso = resolution_independence(env_qeps_bar, other, M, n)
        assert iso.bijective
        assert (iso.forward @ iso.backward) == Matrix.identity(iso.forward.nrows)
