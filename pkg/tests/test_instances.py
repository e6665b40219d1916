import json

from fractions import Fraction as Q

from hopfhomology.algebras import FinDimAlgebra, ModuleRep
from hopfhomology.instances import dual_numbers


def test_catalog_contents(catalog):
    names = set(catalog)
    assert {"kz2", "kz3", "qs3", "sweedler", "env-qeps", "env-qxq", "env-upper2",
            "monoid01", "lie-abelian1", "lie-abelian2", "lie-nonabelian2", "lie-sl2"} <= names


def test_catalog_kinds_and_flags(catalog):
    assert catalog["monoid01"].expect_hopf is False
    for name in ("kz2", "qs3", "sweedler", "env-qeps"):
        assert catalog[name].expect_hopf
    for name, inst in catalog.items():
        assert inst.kind in ("findim", "lie", "control")


def test_group_inverse_tables(catalog):
    for name in ("kz2", "kz3", "qs3"):
        data = catalog[name].data
        inv = data.group_inverse
        U = data.U
        for g in range(U.dim):
            prod = U.multiply([Q(1) if i == g else Q(0) for i in range(U.dim)],
                              [Q(1) if i == inv[g] else Q(0) for i in range(U.dim)])
            assert prod == U.unit


def test_modules_validate(catalog):
    for name, inst in catalog.items():
        for mod in inst.modules.values():
            assert isinstance(mod, ModuleRep)
        for mod in inst.right_modules.values():
            assert mod.side == "right"


def test_algebra_json_round_trip():
    A = dual_numbers()
    blob = json.dumps(A.to_json(), sort_keys=True)
    back = FinDimAlgebra.from_json(json.loads(blob))
    assert back.mult == A.mult
    assert back.unit == A.unit


def test_module_json_round_trip():
    A = dual_numbers()
    reg = ModuleRep.regular_left(A)
    blob = json.dumps(reg.to_json(), sort_keys=True)
    back = ModuleRep.from_json(A, json.loads(blob))
    assert back.action == reg.action


def test_bialgebroid_json_round_trip(catalog):
    from hopfhomology.bialgebroid import BialgebroidData, check_takeuchi

    for name in ("sweedler", "env-upper2"):
        data = catalog[name].data
        blob = json.dumps(data.to_json(), sort_keys=True)
        back = BialgebroidData.from_json(json.loads(blob), name=name)
        assert back.delta == data.delta
        assert back.eps == data.eps
        assert check_takeuchi(back).ok


def test_sweedler_structure(catalog):
    U = catalog["sweedler"].data.U
    g = [Q(0), Q(1), Q(0), Q(0)]
    x = [Q(0), Q(0), Q(1), Q(0)]
    assert U.multiply(g, g) == [Q(1), Q(0), Q(0), Q(0)]
    assert U.multiply(x, x) == [Q(0)] * 4
    gx = U.multiply(g, x)
    xg = U.multiply(x, g)
    assert gx == [Q(0), Q(0), Q(0), Q(1)]
    assert xg == [Q(0), Q(0), Q(0), Q(-1)]
