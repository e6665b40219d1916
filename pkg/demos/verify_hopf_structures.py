"""Axiom sweeps over the instance catalog, and one honest failure.

Every finite dimensional instance is checked against the full list of
structure axioms (the base map is an algebra homomorphism, the four
base actions commute, the coproduct is balanced, coassociative,
counital and multiplicative, and its image sits in the Takeuchi
centralizer).  Then the Galois map is assembled and inverted exactly,
and the translation identities are swept over the whole basis.

The catalog deliberately contains one structure that is a bialgebra but
not Hopf: the monoid algebra of ({1, 0}, *).  Its Galois map has rank 3
on a 4 dimensional space, and the engine refuses to invert it.
"""

from hopfhomology.bialgebroid import check_schauenburg, check_takeuchi, galois_map
from hopfhomology.errors import NotInvertibleError
from hopfhomology.instances import builtin_instances
from hopfhomology.pbw import ug_hopf_report


def main():
    catalog = builtin_instances()
    for name, inst in sorted(catalog.items()):
        if inst.kind == "findim":
            rep = check_takeuchi(inst.data)
            h = galois_map(inst.data)
            srep = check_schauenburg(h)
            print(f"{name:16s} axioms: {'ok' if rep.ok else rep.failures}"
                  f"  translation identities: {'ok' if srep.ok else srep.failures}")
        elif inst.kind == "lie":
            checks = ug_hopf_report(inst.data, bound=3)
            verdict = "ok" if all(checks.values()) else checks
            print(f"{name:16s} identities on monomials of degree <= 3: {verdict}")

    print()
    print("negative control:")
    try:
        galois_map(catalog["monoid01"].data)
    except NotInvertibleError as e:
        print(f"  monoid01: Galois map has rank {e.rank} on dimensions {e.dims}, not Hopf")


if __name__ == "__main__":
    main()
