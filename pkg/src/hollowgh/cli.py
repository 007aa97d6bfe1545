"""Command-line surface: construction, verification and series computation.

Exit codes: 0 all checks pass, 1 a verification failed, 2 malformed
arguments, 3 a resource cap was exceeded.  JSON output is sorted and
byte-stable across identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import golden
from .bitab import straighten
from .ghmod import (
    annihilation_check,
    basis,
    graded_character,
    harmonic_series,
    hilbert_closed,
    verify_independence,
)
from .latticediag import HollowGamma, delta, render_cells
from .tableaux import Filling, ResourceCapError

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_CAP = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hollowgh",
        description="Exact constructions and checks for hollow diagram modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, gamma=True):
        if gamma:
            p.add_argument("--gamma", required=True, help="m1,m2:k1,k2:p1,p2")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--cap-n", type=int, default=6)
        p.add_argument("--cap-basis", type=int, default=2000)
        p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    p = sub.add_parser("delta", help="print the diagram determinant")
    add_common(p)

    p = sub.add_parser("hilbert", help="closed-form vs brute-force Hilbert series")
    add_common(p)
    p.add_argument(
        "--level",
        choices=("monomials", "elementary", "complete"),
        default="complete",
    )
    p.add_argument("--trunc", default=None, help="R,S truncation bidegree")

    p = sub.add_parser("basis", help="list basis elements with statistics")
    add_common(p)
    p.add_argument("--kind", choices=("biperm", "h_extended", "e_extended"), default="biperm")
    p.add_argument("--bound", default=None, help="R,S bidegree bound (e_extended)")

    p = sub.add_parser("verify", help="independence and annihilation suite")
    add_common(p)

    p = sub.add_parser("character", help="per-shape multiplicity tables")
    add_common(p)
    p.add_argument("--mode", choices=("formula", "bruteforce", "both"), default="both")

    p = sub.add_parser("straighten", help="expand a bitableau inline")
    add_common(p, gamma=False)
    p.add_argument("--mode", choices=("det", "per"), required=True)
    p.add_argument("--left", required=True, help="integer filling, rows bottom-first")
    p.add_argument(
        "--right",
        required=True,
        help="entry filling, rows bottom-first; use --right=-1,0;2 for leading minus",
    )

    p = sub.add_parser("examples", help="replay the worked-example corpus")
    add_common(p, gamma=False)
    return parser


def _parse_trunc(text):
    if text is None:
        return None
    try:
        r, s = text.split(",")
        return (int(r), int(s))
    except ValueError:
        raise ValueError(f"truncation {text!r} must be R,S with integers") from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        return _dispatch(args)
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def _dispatch(args) -> int:
    if args.command == "delta":
        gamma = HollowGamma.parse(args.gamma)
        poly = delta(gamma.cells(), cap=max(args.cap_n, 7))
        payload = {
            "gamma": gamma.render(),
            "cells": render_cells(gamma.cells()),
            "delta": poly.render(),
            "terms": len(poly.terms),
        }
        _emit(args, payload, [f"cells: {payload['cells']}", f"delta: {payload['delta']}"])
        return EXIT_OK

    if args.command == "hilbert":
        gamma = HollowGamma.parse(args.gamma)
        trunc = _parse_trunc(args.trunc)
        closed = hilbert_closed(gamma, level=args.level, trunc=trunc, cap_n=args.cap_n)
        if args.level == "complete":
            brute = harmonic_series(gamma, cap_n=args.cap_n)
        else:
            from .ghmod import quotient_series

            if trunc is None:
                raise ValueError(f"level {args.level} needs --trunc R,S")
            brute = quotient_series(gamma, args.level, trunc, cap_n=args.cap_n)
        match = closed == brute
        diff = sorted(
            k
            for k in set(closed.entries) | set(brute.entries)
            if closed.coeff(*k) != brute.coeff(*k)
        )
        payload = {
            "gamma": gamma.render(),
            "level": args.level,
            "closed": closed.json_triples(),
            "bruteforce": brute.json_triples(),
            "diff": [list(k) for k in diff],
            "match": match,
        }
        _emit(
            args,
            payload,
            [
                f"closed:      {closed.render()}",
                f"brute force: {brute.render()}",
                f"match: {match}",
            ],
        )
        return EXIT_OK if match else EXIT_VERIFY

    if args.command == "basis":
        gamma = HollowGamma.parse(args.gamma)
        bound = _parse_trunc(args.bound)
        elems = basis(
            gamma, args.kind, bound=bound, cap_n=args.cap_n, cap_basis=args.cap_basis
        )
        rows = [
            {"element": e.render(), "bidegree": list(e.bidegree())} for e in elems
        ]
        payload = {
            "gamma": gamma.render(),
            "kind": args.kind,
            "count": len(elems),
            "elements": rows,
        }
        lines = [f"{r['element']}  bidegree {tuple(r['bidegree'])}" for r in rows]
        lines.append(f"count: {len(elems)}")
        _emit(args, payload, lines)
        return EXIT_OK

    if args.command == "verify":
        gamma = HollowGamma.parse(args.gamma)
        ind = verify_independence(gamma, cap_n=args.cap_n, cap_basis=args.cap_basis)
        ann = annihilation_check(gamma, cap_n=args.cap_n)
        ok = ind.passed and ann.passed
        payload = {
            "gamma": gamma.render(),
            "independence": ind.to_json(),
            "annihilation": ann.to_json(),
            "pass": ok,
        }
        lines = [f"independence: rank {ind.rank}/{ind.size} "
                 f"{'PASS' if ind.passed else 'FAIL'}"]
        for c in ann.checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name} ({c.detail})")
        lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
        _emit(args, payload, lines)
        return EXIT_OK if ok else EXIT_VERIFY

    if args.command == "character":
        gamma = HollowGamma.parse(args.gamma)
        out = {}
        ok = True
        modes = ("formula", "bruteforce") if args.mode == "both" else (args.mode,)
        tables = {m: graded_character(gamma, m, cap_n=args.cap_n) for m in modes}
        shapes = sorted(next(iter(tables.values())).keys(), reverse=True)
        lines = []
        for lam in shapes:
            key = ",".join(map(str, lam))
            out[key] = {m: tables[m][lam].json_triples() for m in modes}
            if len(modes) == 2 and tables["formula"][lam] != tables["bruteforce"][lam]:
                ok = False
            shown = tables[modes[0]][lam].render()
            lines.append(f"shape {key}: {shown}")
        if len(modes) == 2:
            lines.append(f"modes agree: {ok}")
        payload = {"gamma": gamma.render(), "characters": out, "match": ok}
        _emit(args, payload, lines)
        return EXIT_OK if ok else EXIT_VERIFY

    if args.command == "straighten":
        left = Filling.parse(args.left)
        right = Filling.parse(args.right, axis=True)
        terms = straighten(args.mode, left, right)
        payload = {
            "mode": args.mode,
            "input": f"[{left.render()} | {right.render()}]",
            "terms": [
                {"left": bt.left.render(), "right": bt.right.render(), "coeff": c}
                for bt, c in terms
            ],
        }
        lines = [
            f"{c:+d} * [{bt.left.render()} | {bt.right.render()}]" for bt, c in terms
        ] or ["0"]
        _emit(args, payload, lines)
        return EXIT_OK

    if args.command == "examples":
        results = golden.run_all()
        ok = all(r.passed for r in results)
        payload = {
            "results": [
                {"name": r.name, "pass": r.passed, "detail": r.detail} for r in results
            ],
            "pass": ok,
        }
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}"
            + (f"  ({r.detail})" if r.detail else "")
            for r in results
        ]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} examples pass")
        _emit(args, payload, lines)
        return EXIT_OK if ok else EXIT_VERIFY

    raise ValueError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
