"""Command-line front end.

Exit codes: 0 success, 1 a verification or witness check failed, 2 bad
input (usage, parse or domain errors).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import abelian
from .errors import JenningsError
from .series import INFINITE, commutator, compose, format_series, inverse, parse_series, series_to_json
from .structure import c_bound
from .verify import SUITES, run_suites
from .witness import check_witness, lemma_witness, word_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_K = 25


class UsageError(Exception):
    pass


def max_k() -> int:
    raw = os.environ.get("JENNINGSLAB_MAX_K")
    if raw is None:
        return DEFAULT_MAX_K
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"JENNINGSLAB_MAX_K must be an integer, got {raw!r}")


def _emit_series(f, as_json: bool):
    print(json.dumps(series_to_json(f)) if as_json else format_series(f))


def cmd_compose(args) -> int:
    f, g = parse_series(args.f, args.trunc), parse_series(args.g, args.trunc)
    _emit_series(compose(f, g), args.json)
    return EXIT_OK


def cmd_inverse(args) -> int:
    _emit_series(inverse(parse_series(args.f, args.trunc)), args.json)
    return EXIT_OK


def cmd_commutator(args) -> int:
    f, g = parse_series(args.f, args.trunc), parse_series(args.g, args.trunc)
    _emit_series(commutator(f, g), args.json)
    return EXIT_OK


def _check_k(k: int):
    top = max_k()
    if not 2 <= k <= top:
        raise UsageError(f"k must lie in 2..{top}, got {k}")


def cmd_witness(args) -> int:
    _check_k(args.k)
    w = lemma_witness(args.k, args.l, args.alpha)
    out = {"k": args.k, "l": args.l, "alpha": str(args.alpha), "word": word_to_json(w)}
    code = EXIT_OK
    if args.check:
        r = check_witness(w, args.k, args.l + 1)
        good = r.valid and r.target_degree == args.l and r.target_coefficient == args.alpha
        out["check"] = {
            "valid": good,
            "leading": None if r.target_degree == INFINITE else f"{r.target_coefficient}*x^{r.target_degree}",
            "value": format_series(r.value),
        }
        if r.reason:
            out["check"]["reason"] = r.reason
        code = EXIT_OK if good else EXIT_FAIL
    if args.json:
        print(json.dumps(out))
    else:
        print(json.dumps(out["word"]))
        if args.check:
            c = out["check"]
            print(f"{'valid' if c['valid'] else 'INVALID'}, leading {c['leading']}")
    return code


def cmd_abelianize(args) -> int:
    _check_k(args.k)
    rep = abelian.report(args.k)
    if args.json:
        print(json.dumps(rep))
    else:
        s = abelian.abelianization(args.k)
        flag = "matches theorem" if rep["matches_theorem"] else "DOES NOT match theorem"
        print(f"{s} [{flag}]")
        orders = " ".join(f"{i}:{o}" for i, o in rep["generator_orders"].items())
        print(f"generator orders (degree:order): {orders}")
    return EXIT_OK if rep["matches_theorem"] else EXIT_FAIL


def cmd_verify(args) -> int:
    reports = run_suites(args.suite, seed=args.seed, trials=args.trials)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:10]:
                print("  failure:", json.dumps(f))
            if "discrepancies" in r.notes:
                print(f"  printed-table entries checked: {r.notes['printed_entries_checked']},"
                      f" discrepancies: {len(r.notes['discrepancies'])}")
                for d in r.notes["discrepancies"]:
                    print("  discrepancy:", json.dumps(d))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jenningslab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def series_cmd(name, nargs, func, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("f", help="series text, e.g. 'x + 2*x^3 (mod x^8)', or JSON")
        if nargs == 2:
            s.add_argument("g")
        s.add_argument("--trunc", type=int, help="truncation order N (work mod x^N)")
        s.add_argument("--json", action="store_true")
        s.set_defaults(func=func)

    series_cmd("compose", 2, cmd_compose, "f o g")
    series_cmd("inverse", 1, cmd_inverse, "compositional inverse")
    series_cmd("commutator", 2, cmd_commutator, "f o g o f^-1 o g^-1")

    w = sub.add_parser("witness", help="commutator word for x + alpha x^l + ...")
    w.add_argument("--k", type=int, required=True)
    w.add_argument("--l", type=int, required=True)
    w.add_argument("--alpha", type=int, default=1)
    w.add_argument("--check", action="store_true")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_witness)

    a = sub.add_parser("abelianize", help="H_1(J_k(Z)) by Smith normal form")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_abelianize)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (JenningsError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
