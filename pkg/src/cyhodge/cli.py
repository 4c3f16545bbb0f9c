"""Command line entry point: ``cyhodge <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import borcea as bc
from . import gx_family as gx
from .checks import DEFAULT_SEED, VerifyConfig, jsonable, report, run_checks
from .errors import CyHodgeError, UnknownSelector
from .matrices import mat_from_json, mat_to_json
from .rings import scalar_from_json


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _verify(args) -> int:
    config = VerifyConfig(seed=args.seed, samples=args.samples)
    try:
        results = run_checks(args.selector, config)
    except UnknownSelector as exc:
        print(f"unknown check selector: {exc.args[0]}", file=sys.stderr)
        return 2
    rep = report(results, config)
    if args.format == "json":
        _emit(rep, args.out)
    else:
        lines = [f"{r.status.upper():5} {r.id}  ({r.elapsed_ms:.1f} ms)" for r in results]
        s = rep["summary"]
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['error']} errors (seed {config.seed})")
        text = "\n".join(lines)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    return 0 if rep["summary"]["fail"] == 0 and rep["summary"]["error"] == 0 else 1


def _gx_derive(args) -> int:
    _emit(gx.derive_constraints().to_json())
    return 0


def _gx_instantiate(args) -> int:
    x = scalar_from_json(json.loads(args.x)) if args.x else gx.DEFAULT_X
    rep = gx.instance_report(x)
    G = gx.instantiate(x)
    _emit({"ok": rep.ok, "report": jsonable(asdict(rep)),
           "basis": [mat_to_json(b) for b in G.basis]})
    return 0 if rep.ok else 1


def _gx_nilpotent(args) -> int:
    rep = gx.nilpotent_square_report(gx.instantiate())
    _emit({"ok": rep.ok, "report": jsonable(asdict(rep))})
    return 0 if rep.ok else 1


def _borcea_nilpotent(args) -> int:
    r, s, t = (scalar_from_json(v) for v in (args.r, args.s, args.t))
    _emit(mat_to_json(bc.borcea_nilpotent(r, s, t)))
    return 0


def _borcea_max(args) -> int:
    r, s, t = (scalar_from_json(v) for v in (args.r, args.s, args.t))
    ok = bc.max_unipotent_check(bc.borcea_nilpotent(r, s, t))
    _emit({"max_unipotent": ok})
    return 0


def _sym3_of(args) -> int:
    M = mat_from_json(json.loads(args.matrix))
    _emit(mat_to_json(bc.sym3_matrix(M)))
    return 0


def _sym3_identities(args) -> int:
    out = bc.sym3_polynomial_identities()
    _emit({"ok": out.ok, "details": out.details})
    return 0 if out.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyhodge", description="Exact Hodge-theoretic checks in sp(4).")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run registered checks")
    v.add_argument("selector", nargs="?", default="all", help="'all' or an id prefix such as 'lie.'")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--out")
    v.set_defaults(fn=_verify)

    g = sub.add_parser("gx", help="the G_x family").add_subparsers(dest="gx_command", required=True)
    g.add_parser("derive", help="closure constraints on x, y").set_defaults(fn=_gx_derive)
    gi = g.add_parser("instantiate", help="build G_x at a given x")
    gi.add_argument("--x", help='JSON scalar, e.g. \'{"c": ["0", "0", "2/3", "0"]}\' for 2/sqrt3')
    gi.set_defaults(fn=_gx_instantiate)
    g.add_parser("nilpotent-check", help="no element squares to zero").set_defaults(fn=_gx_nilpotent)

    b = sub.add_parser("borcea", help="triple Legendre monodromy").add_subparsers(
        dest="borcea_command", required=True)
    for name, fn, default in (("nilpotent", _borcea_nilpotent, "1"), ("max-unipotent", _borcea_max, "1")):
        sp = b.add_parser(name)
        for k in ("r", "s", "t"):
            sp.add_argument(f"--{k}", default=default, help="rational, e.g. 1 or 2/3")
        sp.set_defaults(fn=fn)

    s = sub.add_parser("sym3", help="third symmetric power of 2x2 matrices").add_subparsers(
        dest="sym3_command", required=True)
    so = s.add_parser("of")
    so.add_argument("matrix", help="JSON nested list, e.g. '[[1, 2], [0, 1]]'")
    so.set_defaults(fn=_sym3_of)
    s.add_parser("identities").set_defaults(fn=_sym3_identities)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (CyHodgeError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
