"""Command-line front end.

    surfsing classify --an "3,3"
    surfsing delta --en 3 3
    surfsing fundcycle graph.json
    surfsing zariski lattice.json --pairings=-1,1 --square 2
    surfsing check scenario.json
    surfsing tables [--json]
    surfsing enumerate -n 8 -w 6 [--certify] [--jobs 4]

Exit status: 0 on success, 1 on bad input, 2 when a computed invariant or
table comparison fails. Output is deterministic; rationals print as "p/q".
"""

import argparse
import json
import sys

from . import atlas, tables
from .criterion import CriterionError, DivisorData, freeness_verdict
from .cycles import SMOOTH, classify, fundamental_cycle
from .graph import GraphError, graph_from_dict, make_An, make_Dn, make_En, parse_graph
from .lattice import LatticeError, as_rational, format_rational
from .zariski import (
    CurveLattice,
    DivisorClass,
    NoZariskiDecompositionError,
    zariski_decompose,
)

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _ints(text, what):
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise InputError(f"{what}: empty list")
    return vals


def _rationals(text, what):
    try:
        return [as_rational(x) for x in text.split(",") if x.strip()]
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"{what}: expected comma-separated rationals, got {text!r}") from None


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None


def _emit(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def _fr(q):
    return format_rational(q)


# -- graph sources ------------------------------------------------------------

def _add_graph_source(p, allow_smooth=False):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("graph", nargs="?", help="graph JSON file ('-' for stdin)")
    src.add_argument("--an", metavar="W1,W2,...", help="chain with these weights")
    src.add_argument("--dn", metavar="W1,...,Wk",
                     help="chain C1..Ck with two leaves on Ck (weights via --leaves)")
    src.add_argument("--en", nargs=2, type=int, metavar=("TYPE", "MU"),
                     help="star-shaped E-type 1..15 with central weight MU")
    if allow_smooth:
        src.add_argument("--smooth", action="store_true", help="a smooth point")
    p.add_argument("--leaves", default="2,2", metavar="W',W''",
                   help="leaf weights for --dn (default 2,2)")


def _graph_from_args(args):
    if getattr(args, "smooth", False):
        return SMOOTH
    if args.an is not None:
        return make_An(_ints(args.an, "--an"))
    if args.dn is not None:
        leaves = _ints(args.leaves, "--leaves")
        if len(leaves) != 2:
            raise InputError("--leaves needs exactly two weights")
        return make_Dn(_ints(args.dn, "--dn"), *leaves)
    if args.en is not None:
        return make_En(*args.en)
    return parse_graph(_read(args.graph))


def _cycle_dict(c):
    return {k: _fr(v) for k, v in c.as_dict().items()}


# -- subcommands --------------------------------------------------------------

def cmd_classify(args):
    sc = classify(_graph_from_args(args))
    if args.json:
        doc = {"kind": sc.kind.value, "delta_x": _fr(sc.delta_x)}
        if sc.discrepancy is not None:
            doc["discrepancy"] = _cycle_dict(sc.discrepancy)
            doc["fundamental_cycle"] = _cycle_dict(sc.fundamental_cycle)
        _emit(doc)
    else:
        print(sc)
    return EXIT_OK


def cmd_delta(args):
    sc = classify(_graph_from_args(args))
    if args.json:
        _emit({"delta_x": _fr(sc.delta_x)})
    else:
        print(_fr(sc.delta_x))
    return EXIT_OK


def cmd_fundcycle(args):
    Z = fundamental_cycle(_graph_from_args(args))
    if args.json:
        _emit({"fundamental_cycle": _cycle_dict(Z)})
    else:
        print(" ".join(f"{k}:{_fr(v)}" for k, v in Z.as_dict().items()))
    return EXIT_OK


def cmd_zariski(args):
    doc = _load_json(args.lattice)
    if not isinstance(doc, dict) or "ids" not in doc or "matrix" not in doc:
        raise InputError('lattice file needs "ids" and "matrix"')
    lattice = CurveLattice.from_dict(doc)
    if (args.pairings is None) == (args.coefficients is None):
        raise InputError("give exactly one of --pairings or --coefficients")
    if args.coefficients is not None:
        coeffs = _rationals(args.coefficients, "--coefficients")
        if len(coeffs) != lattice.n:
            raise InputError(f"--coefficients: expected {lattice.n} values")
        D = DivisorClass.from_vector(coeffs, lattice)
    else:
        pairs = _rationals(args.pairings, "--pairings")
        if len(pairs) != lattice.n:
            raise InputError(f"--pairings: expected {lattice.n} values")
        square = None if args.square is None else _rationals(args.square, "--square")[0]
        D = DivisorClass.from_pairings(pairs, square)
    try:
        zd = zariski_decompose(D, lattice)
    except NoZariskiDecompositionError as exc:
        raise InputError(str(exc)) from None
    ids = lattice.ids
    out = {
        "N": {i: _fr(c) for i, c in zip(ids, zd.N)},
        "P_pairings": {i: _fr(c) for i, c in zip(ids, zd.P_pairings)},
        "support": sorted(ids[i] for i in zd.support),
    }
    if zd.P is not None:
        out["P"] = {i: _fr(c) for i, c in zip(ids, zd.P)}
    if zd.P_square is not None:
        out["P_square"] = _fr(zd.P_square)
    if args.json:
        _emit(out)
        return EXIT_OK
    for key in ("N", "P", "P_pairings"):
        if key in out:
            print(f"{key}: " + " ".join(f"{i}={v}" for i, v in out[key].items()))
    print("support: " + (" ".join(out["support"]) or "(empty)"))
    if "P_square" in out:
        print(f"P^2: {out['P_square']}")
    return EXIT_OK


def _scenario(doc):
    if not isinstance(doc, dict):
        raise InputError("scenario must be a JSON object")
    for key in ("point", "D2", "curves", "through_x"):
        if key not in doc:
            raise InputError(f"scenario is missing {key!r}")
    point = doc["point"]
    if point == "smooth":
        g = SMOOTH
    elif isinstance(point, dict) and "graph" in point:
        g = graph_from_dict(point["graph"])
    else:
        raise InputError('"point" must be "smooth" or {"graph": ...}')
    curves = CurveLattice.from_dict(doc["curves"])
    D = DivisorData(doc["D2"], doc.get("pairings", {}))
    bound = doc.get("bound", 10)
    if not isinstance(bound, int) or isinstance(bound, bool):
        raise InputError('"bound" must be an integer')
    return classify(g), D, curves, doc["through_x"], bound


def cmd_check(args):
    point, D, curves, through_x, bound = _scenario(_load_json(args.scenario))
    if args.bound is not None:
        bound = args.bound
    try:
        v = freeness_verdict(point, D, curves, through_x, bound)
    except KeyError as exc:
        raise InputError(f"unknown curve id {exc.args[0]!r}") from None
    witnesses = [
        {"E": {c: e for c, e in w.E if e}, "DE": _fr(w.DE), "E2": _fr(w.E2)}
        for w in v.witnesses
    ]
    if args.json:
        _emit({"status": v.status, "kind": point.kind.value, "delta_x": _fr(v.delta_x),
               "bound": v.bound, "caveat": v.caveat, "witnesses": witnesses})
        return EXIT_OK
    print(f"{v.status} ({point.kind.value}, delta_x = {_fr(v.delta_x)})")
    print(f"  {v.caveat}")
    for w in witnesses:
        e = " + ".join(f"{c}*{k}" if c != 1 else k for k, c in w["E"].items())
        print(f"  witness E = {e}: D.E = {w['DE']}, E^2 = {w['E2']}")
    return EXIT_OK


def cmd_tables(args):
    cells = tables.report()
    failed = [c for c in cells if not c.passed]
    if args.json:
        _emit({
            "cells": [{"table": c.table, "key": c.key, "expected": c.expected,
                       "computed": c.computed, "pass": c.passed} for c in cells],
            "passed": len(cells) - len(failed),
            "failed": len(failed),
        })
    else:
        for c in cells:
            print(c.line())
        print(f"{len(cells) - len(failed)}/{len(cells)} cells pass")
    return EXIT_INVARIANT if failed else EXIT_OK


def cmd_enumerate(args):
    shapes = tuple(s for s in args.shapes.split(",") if s) if args.shapes else atlas.SHAPES
    try:
        spec = atlas.EnumerationSpec(args.max_vertices, args.max_weight, shapes)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.jobs < 1:
        raise InputError("--jobs must be >= 1")
    if not args.certify:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                atlas.write_csv(spec, fh)
        else:
            atlas.write_csv(spec, sys.stdout)
        return EXIT_OK
    rep = atlas.certify_prop1(spec, jobs=args.jobs)
    if args.json:
        _emit({
            "counts": dict(sorted(rep.counts.items())),
            "graphs": rep.total,
            "equality_cases": rep.equality_cases,
            "violations": [{"graph": g.label(), "shape": g.shape, "delta_x": _fr(d)}
                           for g, d in rep.violations],
        })
    else:
        print(rep.summary())
        for g, d in rep.violations:
            print(f"VIOLATION {g.shape} {g.label()} delta_x = {_fr(d)}")
    return EXIT_OK if rep.ok else EXIT_INVARIANT


def build_parser():
    p = _Parser(prog="surfsing", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, helptext, smooth in [
        ("classify", cmd_classify, "kind of the point and delta_x", True),
        ("delta", cmd_delta, "delta_x only", True),
        ("fundcycle", cmd_fundcycle, "fundamental cycle (Laufer)", False),
    ]:
        sp = sub.add_parser(name, help=helptext)
        _add_graph_source(sp, allow_smooth=smooth)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("zariski", help="Zariski decomposition over a declared lattice")
    sp.add_argument("lattice", help='JSON {"ids": [...], "matrix": [[...]]}')
    sp.add_argument("--pairings", help="D.C_i for each lattice curve, comma-separated (write --pairings=-1,1 when the list starts with a minus sign)")
    sp.add_argument("--square", help="D^2, when D is given by pairings")
    sp.add_argument("--coefficients", help="D as a combination of the lattice curves")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_zariski)

    sp = sub.add_parser("check", help="exclusion search for a base point scenario")
    sp.add_argument("scenario", help="scenario JSON file ('-' for stdin)")
    sp.add_argument("--bound", type=int, help="override the coefficient bound")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("tables", help="recompute the delta_x tables cell by cell")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("enumerate", help="chain/fork/star atlas as CSV, or certify delta_x <= 2")
    sp.add_argument("-n", "--max-vertices", type=int, default=6)
    sp.add_argument("-w", "--max-weight", type=int, default=4)
    sp.add_argument("--shapes", help="comma-separated subset of chain,fork,star3")
    sp.add_argument("--certify", action="store_true",
                    help="check delta_x <= 2 with equality only for all-(-2) graphs")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="CSV destination (default stdout)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, LatticeError, CriterionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TypeError, ValueError, KeyError, ZeroDivisionError) as exc:
        # malformed values inside otherwise valid JSON documents
        print(f"error: bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
