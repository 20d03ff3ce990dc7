"""Command-line interface: ``pipedreams <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import col_weight, row_weight
from .guards import GuardExceeded, size_guard
from .maximal import ir_sequence, k_move_weights, max_pipedream
from .perm import Permutation, PermutationError, invcode, parse_permutation
from .pipedream import bottom_pipedream, enumerate_pd
from .poly import degree_component, grothendieck_double, grothendieck_single, top_degree
from .render import render_left_snow, render_pipedream, render_rothe, render_snow
from .stats import movecode, rajcode, rajcode_inv, reg
from .verify import CLAIMS, UnknownClaim, verify

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from exc


def _summary(w: Permutation) -> dict:
    P, trace = max_pipedream(w)
    return {
        "one_line": list(w.one_line),
        "invcode": list(invcode(w)),
        "rajcode": list(rajcode(w)),
        "rajcode_inv": list(rajcode_inv(w)),
        "movecode": list(movecode(w)),
        "reg": reg(w),
        "ir": [list(m) for m in ir_sequence(w)],
        "max_pipedream": [list(cell) for cell in P.crosses],
        "k_weights": [list(a) for a in k_move_weights(trace)],
    }


def _fmt(seq) -> str:
    return "(" + ", ".join(map(str, seq)) + ")"


def cmd_stats(args) -> int:
    w = _perm(args.perm)
    if args.json:
        print(json.dumps(_summary(w)))
        return EXIT_OK
    print(f"w            {w}")
    print(f"invcode      {invcode(w)}")
    print(f"rajcode      {rajcode(w)}")
    print(f"rajcode_inv  {rajcode_inv(w)}")
    print(f"movecode     {movecode(w)}")
    print(f"reg          {reg(w)}")
    print(f"IR           {ir_sequence(w)}")
    return EXIT_OK


def cmd_maximal(args) -> int:
    w = _perm(args.perm)
    P, trace = max_pipedream(w)
    if args.json:
        out = _summary(w)
        if args.trace:
            out["trace"] = trace.to_json()
        print(json.dumps(out))
        return EXIT_OK
    if args.trace:
        print("start:")
        print(render_pipedream(bottom_pipedream(w)))
        for step in trace.steps:
            print()
            print(step.to_text())
            if step.moves:
                print(render_pipedream(step.after, w.n))
        print()
    print(render_pipedream(P))
    print(f"cells        {[tuple(c) for c in P.crosses]}")
    print(f"row weight   {row_weight(P.crosses)}")
    print(f"col weight   {col_weight(P.crosses)}")
    print(f"K weights    {' '.join(str(a) for a in k_move_weights(trace)) or '-'}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    w = _perm(args.perm)
    pds = sorted(enumerate_pd(w), key=lambda P: (len(P), P.crosses.sorted_cells()))
    if args.count:
        print(len(pds))
        return EXIT_OK
    for P in pds:
        print(" ".join(f"({r},{c})" for r, c in P.crosses) or "-")
    return EXIT_OK


def cmd_poly(args) -> int:
    w = _perm(args.perm)
    p = grothendieck_single(w) if args.single else grothendieck_double(w)
    if args.top:
        p = top_degree(p)
    if args.degree is not None:
        p = degree_component(p, args.degree)
    print(json.dumps(p.to_json()) if args.json else p)
    return EXIT_OK


def cmd_ir(args) -> int:
    w = _perm(args.perm)
    for m in ir_sequence(w):
        print(_fmt(m))
    return EXIT_OK


def cmd_render(args) -> int:
    w = _perm(args.perm)
    view = args.view or "rothe"
    if view == "rothe":
        print(render_rothe(w))
    elif view == "snow":
        print(render_snow(w))
    elif view == "left-snow":
        print(render_left_snow(w))
    elif view == "bottom":
        print(render_pipedream(bottom_pipedream(w)))
    else:
        print(render_pipedream(max_pipedream(w)[0]))
    return EXIT_OK


def cmd_verify(args) -> int:
    claims = args.claims or None
    sizes = range(1, args.n + 1) if args.upto else [args.n]
    reports = []
    for n in sizes:
        try:
            selected = claims or [c for c in CLAIMS if not args.upto or size_guard(CLAIMS[c].max_n) >= n]
            report = verify(n, selected, jobs=args.jobs, progress=lambda m: print(m, file=sys.stderr))
        except UnknownClaim as exc:
            raise UsageError(f"unknown claim {exc.args[0]!r}; known: {', '.join(CLAIMS)}") from exc
        reports.append(report)
    if args.json:
        print(json.dumps([r.to_json() for r in reports] if args.upto else reports[0].to_json()))
    else:
        for r in reports:
            print(r.to_text())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pipedreams", description="Maximal pipedreams and permutation statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="invcode, rajcode, rajcode of the inverse, movecode, reg, IR")
    p.add_argument("perm")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("maximal", help="construct the maximal pipedream")
    p.add_argument("perm")
    p.add_argument("--trace", action="store_true", help="show every column sweep")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("enumerate", help="list all pipedreams of a permutation")
    p.add_argument("perm")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poly", help="Grothendieck polynomial")
    p.add_argument("perm")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--double", action="store_true", help="x and y variables (default)")
    kind.add_argument("--single", action="store_true", help="x variables only")
    p.add_argument("--top", action="store_true", help="top-degree component only")
    p.add_argument("--degree", type=int, help="homogeneous component of this degree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("ir", help="IR monomial sequence")
    p.add_argument("perm")
    p.set_defaults(func=cmd_ir)

    p = sub.add_parser("render", help="ASCII diagrams")
    p.add_argument("perm")
    view = p.add_mutually_exclusive_group()
    for name in ("rothe", "snow", "left-snow", "bottom", "maximal"):
        view.add_argument(f"--{name}", dest="view", action="store_const", const=name)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="exhaustively check the results over S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--claims", nargs="+", metavar="ID", help=f"subset of: {', '.join(CLAIMS)}")
    p.add_argument("--upto", action="store_true", help="run every size 1..n (claims past their guard are skipped)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
