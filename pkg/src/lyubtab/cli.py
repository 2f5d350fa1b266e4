"""Command line front end.

Exit codes: 0 success, 1 bad input, 2 internal consistency failure
(computations disagree with an oracle or an invariant broke), 3 a
verification check or fixture expectation failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fixtures import (EXPECTED, FIXTURE_NAMES, load_fixture, parse_ideal_data,
                       run_fixture)
from .invariants import (DeficiencyProfile, LyubeznikTable, gamma_components,
                         lyubeznik_table, verify_report)
from .linalg import FieldSpec
from .resolution import ConsistencyError, minimal_resolution
from .squarefree import alexander_dual, complex_of_ideal

CLI_VAR_LIMIT = 20


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lyubtab",
        description="Lyubeznik tables of Stanley-Reisner rings, with verification.")
    top.add_argument("--field", default="Q", metavar="F",
                     help="coefficient field, Q or GF(p) (default Q)")
    top.add_argument("--json", action="store_true", help="machine readable output")
    top.add_argument("--no-oracle", action="store_true",
                     help="skip the independent Betti cross-check on resolutions")
    top.add_argument("--force", action="store_true",
                     help="lift size guards (large n can be very slow)")
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", help="Lyubeznik table of R/I")
    p.add_argument("ideal", help="JSON file describing the ideal")

    p = sub.add_parser("betti", help="finely graded Betti numbers")
    p.add_argument("ideal", help="JSON file describing the ideal")
    p.add_argument("--dual", action="store_true",
                   help="resolve the Alexander dual instead of the ideal itself")

    p = sub.add_parser("props", help="depth, deficiency dims, CM-type levels")
    p.add_argument("ideal", help="JSON file describing the ideal")

    p = sub.add_parser("gamma", help="facet intersection graph components")
    p.add_argument("ideal", help="JSON file describing the ideal")
    p.add_argument("--t", type=int, required=True, metavar="T",
                   help="height threshold for edges")

    p = sub.add_parser("verify", help="run all applicable identity checks")
    p.add_argument("ideal", help="JSON file describing the ideal")
    p.add_argument("--inject-table", metavar="FILE", help=argparse.SUPPRESS)

    p = sub.add_parser("fixtures", help="bundled examples")
    fsub = p.add_subparsers(dest="fixture_verb", required=True)
    fsub.add_parser("list", help="list bundled fixture names")
    fr = fsub.add_parser("run", help="recompute fixtures over Q and GF(2)")
    fr.add_argument("name", nargs="?", help="run a single fixture")

    return top


def _load_ideal(path: str, force: bool):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    ideal, names = parse_ideal_data(data)
    if ideal.n > CLI_VAR_LIMIT and not force:
        raise ValueError(
            f"{ideal.n} variables exceeds the guard of {CLI_VAR_LIMIT}; pass --force")
    return ideal, names


def _emit_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _deg_names(deg, names):
    return [names[v - 1] for v in sorted(deg)]


def _cmd_table(args, field):
    ideal, _ = _load_ideal(args.ideal, args.force)
    table = lyubeznik_table(ideal, field, check=not args.no_oracle, force=args.force)
    if args.json:
        _emit_json(table.to_jsonable())
    else:
        print(table.render_text())
    return 0


def _cmd_betti(args, field):
    ideal, names = _load_ideal(args.ideal, args.force)
    target = alexander_dual(ideal) if args.dual else ideal
    res = minimal_resolution(target, field, check=not args.no_oracle, force=args.force)
    betti = res.betti()
    if args.json:
        _emit_json({
            "dual": bool(args.dual),
            "fine": [[j, _deg_names(deg, names), c]
                     for (j, deg), c in betti.items_sorted()],
            "coarse": [[j, size, c]
                       for (j, size), c in sorted(betti.coarse().items())],
        })
        return 0
    label = "alexander dual" if args.dual else "ideal"
    print(f"betti numbers of the {label}, resolution length {res.length}")
    for (j, deg), c in betti.items_sorted():
        print(f"  step {j}  {{{','.join(_deg_names(deg, names))}}}  {c}")
    print("coarse:")
    for (j, size), c in sorted(betti.coarse().items()):
        print(f"  step {j}  size {size}  {c}")
    return 0


def _cmd_props(args, field):
    ideal, _ = _load_ideal(args.ideal, args.force)
    delta = complex_of_ideal(ideal)
    if delta.is_void:
        raise ValueError("the unit ideal has no face ring")
    prof = DeficiencyProfile.compute(delta, field)
    equi = delta.is_equidimensional()
    if args.json:
        _emit_json({
            "d": prof.d,
            "depth": prof.depth,
            "deficiency_dims": list(prof.dims),
            "is_cm": prof.is_cm,
            "is_generalized_cm": prof.is_generalized_cm,
            "serre_max": prof.serre_max,
            "cm_codim_min": prof.cm_codim_min,
            "equidimensional": equi,
        })
        return 0
    yn = {True: "yes", False: "no"}
    print(f"d = {prof.d}")
    print(f"depth = {prof.depth}")
    print(f"deficiency dims = {list(prof.dims)}")
    print(f"cohen-macaulay = {yn[prof.is_cm]}")
    print(f"generalized cm = {yn[prof.is_generalized_cm]}")
    print(f"serre level = {prof.serre_max}")
    print(f"cm codimension level = {prof.cm_codim_min}")
    print(f"equidimensional = {yn[equi]}")
    return 0


def _cmd_gamma(args, field):
    if args.t < 0:
        raise ValueError("--t must be nonnegative")
    ideal, names = _load_ideal(args.ideal, args.force)
    delta = complex_of_ideal(ideal)
    if delta.is_void:
        raise ValueError("the unit ideal has no face ring")
    graph = gamma_components(delta, args.t)
    if args.json:
        _emit_json({
            "t": graph.t,
            "facets": [_deg_names(f, names) for f in graph.facets],
            "edges": [list(e) for e in graph.edges],
            "components": graph.n_components,
        })
        return 0
    print(f"facet graph at t = {graph.t}")
    print(f"  facets: {len(graph.facets)}")
    print(f"  edges: {len(graph.edges)}")
    print(f"  components: {graph.n_components}")
    return 0


def _cmd_verify(args, field):
    ideal, _ = _load_ideal(args.ideal, args.force)
    override = None
    if args.inject_table:
        with open(args.inject_table, encoding="utf-8") as fh:
            override = LyubeznikTable.from_jsonable(json.load(fh))
    report = verify_report(ideal, field, check=not args.no_oracle,
                           force=args.force, table_override=override)
    if args.json:
        _emit_json(report.to_jsonable())
    else:
        print(report.render_text())
    return 0 if report.ok else 3


def _cmd_fixtures(args, field):
    if args.fixture_verb == "list":
        if args.json:
            _emit_json({"fixtures": [
                {"name": name, "n": EXPECTED[name]["n"], "d": EXPECTED[name]["d"]}
                for name in FIXTURE_NAMES]})
            return 0
        for name in FIXTURE_NAMES:
            want = EXPECTED[name]
            print(f"{name}  n={want['n']}  d={want['d']}")
        return 0

    names = [args.name] if args.name else list(FIXTURE_NAMES)
    for name in names:
        if name not in FIXTURE_NAMES:
            raise ValueError(f"unknown fixture {name!r}; have {', '.join(FIXTURE_NAMES)}")
    worst = 0
    results = []
    for name in names:
        for f in (FieldSpec(0), FieldSpec(2)):
            out = run_fixture(name, f, check=not args.no_oracle)
            ok = not out["failures"] and out["report"].ok
            results.append({"name": name, "field": repr(f), "ok": ok,
                            "failures": out["failures"]})
            if not args.json:
                print(f"{name} over {f!r}: {'PASS' if ok else 'FAIL'}")
                for line in out["failures"]:
                    print(f"    {line}")
            if not ok:
                worst = 3
    if args.json:
        _emit_json({"results": results, "ok": worst == 0})
    return worst


_DISPATCH = {
    "table": _cmd_table,
    "betti": _cmd_betti,
    "props": _cmd_props,
    "gamma": _cmd_gamma,
    "verify": _cmd_verify,
    "fixtures": _cmd_fixtures,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        field = FieldSpec.parse(args.field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _DISPATCH[args.verb](args, field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
