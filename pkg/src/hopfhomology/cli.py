"""Command line front end: run computations, emit deterministic JSON.

Subcommands: instances list, verify-hopf, ext, tor, cup, cap, duality,
oracle hochschild.  Reports go to standard output as JSON with sorted
keys and rationals rendered as strings, so identical inputs produce
byte-identical output.  Exit codes: 0 success, 1 a verification check
failed (the report carries the witness), 2 usage or input errors, 3 a
certified window was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bialgebroid import check_schauenburg, check_takeuchi, galois_map
from .ce import ce_resolution
from .duality import (
    cap_omega_underived,
    delta_chain_check_ug,
    detect_duality_ug,
    dual_bases,
    duality_isomorphism_ug,
)
from .errors import NotInvertibleError, WindowExceededError
from .homology import ext, tor
from .instances import builtin_instances, dual_numbers, q_times_q, upper_triangular2
from .linalg import frac_str
from .oracles import hochschild_cohomology_dims, hochschild_homology_dims
from .pbw import LieModule, ug_hopf_report
from .products import BarProducts, CEProducts
from .resolutions import bar_resolution


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _fail_usage(msg):
    sys.stderr.write(msg + "\n")
    return 2


def _get_instance(name):
    cat = builtin_instances()
    if name in cat:
        return cat[name]
    import os

    from .bialgebroid import BialgebroidData
    from .instances import Instance
    from .algebras import ModuleRep

    if os.path.exists(name):
        try:
            with open(name) as fh:
                blob = json.load(fh)
            data = BialgebroidData.from_json(blob, name=os.path.basename(name))
        except (KeyError, ValueError) as e:
            sys.stderr.write(f"could not load instance file {name!r}: {e}\n")
            return None
        modules = {"A": data.a_module(), "U": ModuleRep.regular_left(data.U)}
        return Instance(data.name, "findim", data, modules, {}, f"loaded from {name}")
    return None


def _lie_modules(inst):
    g = inst.data
    return {
        "trivial": LieModule.trivial(g),
        "adjoint": LieModule.adjoint(g),
    }


def _lie_right_modules(inst):
    g = inst.data
    return {"trivial": LieModule.trivial(g, side="right")}


def cmd_instances(args):
    cat = builtin_instances()
    if args.action == "list":
        rows = [
            {"name": k, "kind": v.kind, "description": v.description, "expect_hopf": v.expect_hopf}
            for k, v in sorted(cat.items())
        ]
        _emit({"command": "instances list", "instances": rows})
        return 0
    # export: the finite dimensional data in the documented JSON format
    if args.name is None or args.name not in cat:
        return _fail_usage("instances export needs a catalog name")
    inst = cat[args.name]
    if inst.kind == "lie":
        return _fail_usage("universal envelope instances have no finite JSON form")
    _emit(inst.data.to_json())
    return 0


def cmd_verify_hopf(args):
    inst = _get_instance(args.instance)
    if inst is None:
        return _fail_usage(f"unknown instance {args.instance!r}")
    if inst.kind == "lie":
        checks = ug_hopf_report(inst.data, bound=args.pbw_bound)
        report = {
            "command": "verify-hopf",
            "instance": inst.name,
            "window": {"pbw_degree": args.pbw_bound},
            "checks": checks,
        }
        _emit(report)
        return 0 if all(checks.values()) else 1
    tak = check_takeuchi(inst.data)
    checks = dict(tak.checks)
    witnesses = list(tak.failures)
    hopf = None
    sch = {}
    try:
        h = galois_map(inst.data)
        hopf = True
        srep = check_schauenburg(h)
        sch = dict(srep.checks)
        witnesses += list(srep.failures)
    except NotInvertibleError as e:
        hopf = False
        witnesses.append(f"galois map not bijective: rank {e.rank} of {e.dims}")
    report = {
        "command": "verify-hopf",
        "instance": inst.name,
        "checks": checks,
        "schauenburg": sch,
        "galois_invertible": hopf,
        "witnesses": witnesses,
    }
    _emit(report)
    ok = all(checks.values()) and hopf and all(sch.values())
    return 0 if ok else 1


def _resolve(inst, resolution, depth):
    if inst.kind == "lie":
        if resolution == "bar":
            return None
        return ce_resolution(inst.data, validate=False)
    return bar_resolution(inst.data, depth)


def cmd_ext_tor(args, which):
    inst = _get_instance(args.instance)
    if inst is None:
        return _fail_usage(f"unknown instance {args.instance!r}")
    resolution = args.resolution
    if resolution is None:
        resolution = "ce" if inst.kind == "lie" else "bar"
    if inst.kind == "lie" and resolution == "bar":
        from .ce import UgBarComplex

        if which != "ext":
            return _fail_usage("the truncated bar model over a universal envelope serves ext only")
        if inst.name == "lie-sl2":
            return _fail_usage("lie-sl2 is certified for the Koszul resolution only")
        mods = _lie_modules(inst)
        if args.module not in mods:
            return _fail_usage(f"unknown module {args.module!r}")
        bar = UgBarComplex(inst.data, args.pbw_bound)
        try:
            dims = bar.ext_dims(mods[args.module], args.max_degree)
        except WindowExceededError as e:
            sys.stderr.write(str(e) + "\n")
            return 3
        rows = [
            {"degree": n, "dim": dims[n], "resolution": "bar", "window": args.pbw_bound}
            for n in range(args.max_degree + 1)
        ]
        _emit({"command": which, "instance": inst.name, "module": args.module, "rows": rows})
        return 0
    if inst.kind == "lie":
        res = ce_resolution(inst.data, validate=False)
        mods = _lie_modules(inst) if which == "ext" else _lie_right_modules(inst)
        window = None  # a complete resolution certifies every degree
    else:
        depth = args.depth or args.max_degree + 1
        res = bar_resolution(inst.data, depth)
        mods = inst.modules if which == "ext" else inst.right_modules
        window = depth
    if args.module not in mods:
        return _fail_usage(f"unknown module {args.module!r}")
    M = mods[args.module]
    rows = []
    try:
        for n in range(args.max_degree + 1):
            grp = ext(res, M, n) if which == "ext" else tor(res, M, n)
            rows.append({"degree": n, "dim": grp.dim, "resolution": resolution, "window": window})
    except WindowExceededError as e:
        sys.stderr.write(str(e) + "\n")
        return 3
    _emit({"command": which, "instance": inst.name, "module": args.module, "rows": rows})
    return 0


def cmd_cup(args):
    inst = _get_instance(args.instance)
    if inst is None:
        return _fail_usage(f"unknown instance {args.instance!r}")
    tables = []
    try:
        if inst.kind == "lie":
            res = ce_resolution(inst.data, validate=False)
            pr = CEProducts(res)
            triv = LieModule.trivial(inst.data)
            groups = {n: ext(res, triv, n) for n in range(args.max_total + 1)}
            for m in range(args.max_total + 1):
                for n in range(args.max_total + 1 - m):
                    table = []
                    for phi in groups[m].basis_cocycles():
                        row = []
                        for psi in groups[n].basis_cocycles():
                            c, _ = pr.cup(m, n, phi, psi, triv, triv)
                            row.append([frac_str(x) for x in groups[m + n].class_of(c)])
                        table.append(row)
                    tables.append({"op": "cup", "m": m, "n": n, "table": table})
        else:
            if "A" in inst.modules:
                M = inst.modules["A"]
            else:
                M = inst.modules["trivial"]
            data = inst.data
            h = galois_map(data)
            bar = bar_resolution(data, args.max_total + 1)
            pr = BarProducts(h, bar, args.max_total)
            from .bialgebroid import unit_left_iso
            from .products import transport_cochain

            groups = {n: ext(bar, M, n) for n in range(args.max_total + 1)}
            for m in range(args.max_total + 1):
                for n in range(args.max_total + 1 - m):
                    table = []
                    for phi in groups[m].basis_cocycles():
                        row = []
                        for psi in groups[n].basis_cocycles():
                            c, tm = pr.cup(m, n, phi, psi, M, M)
                            iso = unit_left_iso(data, M, tm)
                            moved = transport_cochain(bar.rank(m + n), iso, c, tm.space.dim)
                            row.append([frac_str(x) for x in groups[m + n].class_of(moved)])
                        table.append(row)
                    tables.append({"op": "cup", "m": m, "n": n, "table": table})
    except WindowExceededError as e:
        sys.stderr.write(str(e) + "\n")
        return 3
    _emit({"command": "cup", "instance": inst.name, "tables": tables})
    return 0


def cmd_cap(args):
    inst = _get_instance(args.instance)
    if inst is None:
        return _fail_usage(f"unknown instance {args.instance!r}")
    if inst.kind != "lie":
        return _fail_usage("cap tables are emitted for universal envelope instances")
    g = inst.data
    res = ce_resolution(g, validate=False)
    pr = CEProducts(res)
    triv = LieModule.trivial(g)
    trivr = LieModule.trivial(g, side="right")
    from .homology import TorGroup

    tables = []
    try:
        for m in range(args.max_degree + 1):
            eg = ext(res, triv, m)
            for n in range(m, args.max_degree + 1):
                tg = tor(res, trivr, n)
                table = []
                for phi in eg.basis_cocycles():
                    row = []
                    for z in tg.basis_cycles():
                        c, tm = pr.cap(m, phi, z, n, triv, trivr)
                        out = TorGroup(res, tm, n - m)
                        row.append([frac_str(x) for x in out.class_of(c)])
                    table.append(row)
                tables.append({"op": "cap", "m": m, "n": n, "table": table})
    except WindowExceededError as e:
        sys.stderr.write(str(e) + "\n")
        return 3
    _emit({"command": "cap", "instance": inst.name, "tables": tables})
    return 0


def cmd_duality(args):
    inst = _get_instance(args.instance)
    if inst is None:
        return _fail_usage(f"unknown instance {args.instance!r}")
    if inst.kind == "lie":
        g = inst.data
        dd = detect_duality_ug(g, bound=args.pbw_bound)
        pr = CEProducts(dd.resolution)
        mods = _lie_modules(inst)
        if args.module not in mods:
            return _fail_usage(f"unknown module {args.module!r}")
        M = mods[args.module]
        table = []
        ok = True
        for m in range(dd.dimension + 1):
            mat, eg, tg = duality_isomorphism_ug(pr, dd, M, m)
            bij = eg.dim == tg.dim and (eg.dim == 0 or mat.rank() == eg.dim)
            ok = ok and bij
            table.append({"m": m, "ext_dim": eg.dim, "tor_dim": tg.dim, "bijective": bij})
        report = {
            "command": "duality",
            "instance": inst.name,
            "module": args.module,
            "d": dd.dimension,
            "Astar_dim": dd.astar.dim,
            "Astar_weights": [frac_str(w) for w in dd.weights],
            "omega": [frac_str(x) for x in dd.omega],
            "window": {"pbw_degree": dd.bound},
            "checks": dd.report.checks,
            "delta_chain_check": delta_chain_check_ug(dd, dd.astar),
            "table": table,
        }
        _emit(report)
        return 0 if ok and dd.report.ok else 1
    # finite dimensional: the semisimple, dimension zero route
    data = inst.data
    if args.module not in inst.modules:
        return _fail_usage(f"unknown module {args.module!r}")
    M = inst.modules[args.module]
    trivial_like = inst.modules.get("trivial") or inst.modules.get("A")
    h = galois_map(data)
    db = dual_bases(data, trivial_like)
    fwd, src, target, tm = cap_omega_underived(h, M, db)
    report = {
        "command": "duality",
        "instance": inst.name,
        "module": args.module,
        "d": 0,
        "Astar_dim": db.astar_module.dim,
        "omega": [frac_str(x) for x in db.omega],
        "table": [
            {"m": 0, "ext_dim": src.dim, "tor_dim": target.dim, "bijective": True}
        ],
    }
    _emit(report)
    return 0


def cmd_oracle(args):
    if args.kind != "hochschild":
        return _fail_usage("only the hochschild oracle is exposed")
    algebras = {
        "qeps": dual_numbers,
        "qxq": q_times_q,
        "upper2": upper_triangular2,
    }
    if args.algebra not in algebras:
        return _fail_usage(f"unknown algebra {args.algebra!r}; choose from {sorted(algebras)}")
    A = algebras[args.algebra]()
    up = hochschild_cohomology_dims(A, args.max_degree)
    down = hochschild_homology_dims(A, args.max_degree)
    _emit(
        {
            "command": "oracle hochschild",
            "algebra": args.algebra,
            "cohomology": up,
            "homology": down,
        }
    )
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="hopfhomology")
    sub = p.add_subparsers(dest="cmd")

    pi = sub.add_parser("instances")
    pi.add_argument("action", choices=["list", "export"])
    pi.add_argument("name", nargs="?", default=None)

    pv = sub.add_parser("verify-hopf")
    pv.add_argument("instance")
    pv.add_argument("--pbw-bound", type=int, default=3)

    for name in ("ext", "tor"):
        pe = sub.add_parser(name)
        pe.add_argument("instance")
        pe.add_argument("--module", default="trivial")
        pe.add_argument("--max-degree", type=int, default=2)
        pe.add_argument("--resolution", choices=["bar", "ce"], default=None)
        pe.add_argument("--depth", type=int, default=None)
        pe.add_argument("--pbw-bound", type=int, default=4)

    pc = sub.add_parser("cup")
    pc.add_argument("instance")
    pc.add_argument("--max-total", type=int, default=2)

    pk = sub.add_parser("cap")
    pk.add_argument("instance")
    pk.add_argument("--max-degree", type=int, default=2)

    pd = sub.add_parser("duality")
    pd.add_argument("instance")
    pd.add_argument("--module", default="trivial")
    pd.add_argument("--pbw-bound", type=int, default=4)

    po = sub.add_parser("oracle")
    po.add_argument("kind", choices=["hochschild"])
    po.add_argument("algebra")
    po.add_argument("--max-degree", type=int, default=3)
    return p


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.cmd is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.cmd == "instances":
            return cmd_instances(args)
        if args.cmd == "verify-hopf":
            return cmd_verify_hopf(args)
        if args.cmd == "ext":
            return cmd_ext_tor(args, "ext")
        if args.cmd == "tor":
            return cmd_ext_tor(args, "tor")
        if args.cmd == "cup":
            return cmd_cup(args)
        if args.cmd == "cap":
            return cmd_cap(args)
        if args.cmd == "duality":
            return cmd_duality(args)
        if args.cmd == "oracle":
            return cmd_oracle(args)
    except WindowExceededError as e:
        sys.stderr.write(str(e) + "\n")
        return 3
    return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
