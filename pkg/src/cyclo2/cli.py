"""Command-line front-end.

Subcommands: eval | height | factor | idempotents.  Results go to stdout,
diagnostics to stderr.  Exit status 0 on success, 1 on user error
(syntax / membership / zero / level budget), 2 on internal verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraSpec, idempotents, verify_system
from .errors import (
    ElementSyntaxError,
    LevelBudgetExceeded,
    NotAMember,
    SpecMismatch,
    VerificationError,
    ZeroArgument,
)
from .expr import parse_element, render_element
from .factor import binomial_poly, expand_product, factorize
from .roots import height
from .tower import DEFAULT_MAX_LEVEL, Tower, is_member

_USER_ERRORS = (
    ElementSyntaxError,
    ZeroDivisionError,
    NotAMember,
    SpecMismatch,
    ZeroArgument,
    LevelBudgetExceeded,
    ValueError,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclo2",
        description=(
            "Factor x^(2^n) - a over 2-power cyclotomic towers and construct "
            "the minimal idempotents of the algebra K[x]/(x^(2^n) - a)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_n in (
        ("eval", False),
        ("height", True),
        ("factor", True),
        ("idempotents", True),
    ):
        p = sub.add_parser(name)
        p.add_argument("--field", choices=["real", "full"], default="real")
        p.add_argument("--a", required=True, metavar="EXPR", help="element expression")
        if needs_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.add_argument("--verify", action="store_true")
        p.add_argument("--max-level", type=int, default=DEFAULT_MAX_LEVEL)
    return parser


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _run(args) -> int:
    tower = Tower.REAL if args.field == "real" else Tower.FULL
    ml = args.max_level
    a = parse_element(args.a, ml)
    payload: dict = {"command": args.command, "field": args.field}
    if args.command != "eval":
        payload["n"] = args.n
        if args.n < 1:
            raise ValueError(f"n must be >= 1, got {args.n}")
        if a.is_zero():
            raise ZeroArgument("a must be nonzero")
        if not is_member(a, tower):
            raise NotAMember("a is not a member of the real tower")
    payload["a"] = render_element(a)

    if args.command == "eval":
        lines = [render_element(a)]
        if args.verify:
            verified = parse_element(render_element(a), ml) == a
            payload["verified"] = verified
            lines.append(f"verified = {str(verified).lower()}")
        _emit(args, payload, lines)
        return 0

    h = height(a, args.n, tower, ml)
    payload["s"] = h.s
    payload["kind"] = h.kind.value
    payload["witness"] = render_element(h.witness)

    if args.command == "height":
        lines = [
            f"s = {h.s}",
            f"kind = {h.kind.value}",
            f"witness = {render_element(h.witness)}",
        ]
        if args.verify:
            target = a if h.kind.value == "first" else -a
            verified = h.witness ** (1 << h.s) == target
            payload["verified"] = verified
            lines.append(f"verified = {str(verified).lower()}")
        _emit(args, payload, lines)
        return 0

    fct = factorize(args.n, a, tower, ml)
    payload["case"] = fct.case.value
    payload["s"] = fct.height.s
    payload["kind"] = fct.height.kind.value
    payload["witness"] = render_element(fct.height.witness)

    if args.command == "factor":
        payload["factors"] = [
            [render_element(c) for c in f.coeffs] for f in fct.factors
        ]
        lines = [
            f"case = {fct.case.value}",
            f"s = {fct.height.s}",
            f"kind = {fct.height.kind.value}",
            f"witness = {render_element(fct.height.witness)}",
        ]
        for i, f in enumerate(fct.factors, start=1):
            rendered = ", ".join(render_element(c) for c in f.coeffs)
            lines.append(f"factor {i}: [{rendered}]")
        if args.verify:
            verified = expand_product(list(fct.factors)) == binomial_poly(
                1 << args.n, a
            )
            payload["verified"] = verified
            lines.append(f"verified = {str(verified).lower()}")
        _emit(args, payload, lines)
        return 0

    # idempotents
    iset = idempotents(AlgebraSpec(args.n, a, tower), ml)
    payload["idempotents"] = [
        {"label": label, "coeffs": [render_element(c) for c in e.coeffs]}
        for label, e in iset.members
    ]
    lines = [f"case = {iset.case.value}"]
    for label, e in iset.members:
        rendered = ", ".join(render_element(c) for c in e.coeffs)
        lines.append(f"{label} = [{rendered}]")
    if args.verify:
        report = verify_system(iset, fct, ml)
        payload["verified"] = report.ok()
        lines.extend(
            [
                f"idempotency = {str(report.idempotency).lower()}",
                f"orthogonality = {str(report.orthogonality).lower()}",
                f"completeness = {str(report.completeness).lower()}",
                f"count_matches_case = {str(report.count_matches_case).lower()}",
                f"factor_annihilation = {str(report.factor_annihilation).lower()}",
                f"dimensions = {list(report.dimensions)}",
                f"dimensions_match_degrees = {str(report.dimensions_match_degrees).lower()}",
                f"verified = {str(report.ok()).lower()}",
            ]
        )
    _emit(args, payload, lines)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except VerificationError as exc:
        print(f"cyclo2: internal verification failure: {exc}", file=sys.stderr)
        return 2
    except _USER_ERRORS as exc:
        print(f"cyclo2: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
