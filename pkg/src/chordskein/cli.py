"""Command-line front end.

Exit status is 0 on success, 1 when a comparison or verification fails and 2
for usage, input and parse errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys

from .algebra import bar
from .classical import classicalize
from .curves import delta_closed, delta_subset, eta, gamma_minus, gamma_plus
from .expr import ParseError, format_element, parse_element
from .rewrite import enumerate_basis, equal_mod_relations, normalize
from .sphere import export_relations
from .verification import SUITES, run_suite


class InputError(Exception):
    pass


def _count(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("need at least two punctures")
    return n


def _emit(args, elem, out) -> None:
    if args.q1:
        elem = classicalize(elem)
    if args.json:
        print(json.dumps(elem.to_json()), file=out)
    else:
        print(format_element(elem), file=out)


def _parse(src: str, n: int):
    try:
        return parse_element(src, n)
    except ParseError as exc:
        raise InputError(f"parse error in {src!r}: {exc}") from exc


def cmd_normalize(args, out):
    _emit(args, normalize(_parse(args.expr, args.n)), out)
    return 0


def cmd_eq(args, out):
    same = equal_mod_relations(_parse(args.e1, args.n), _parse(args.e2, args.n))
    print("equal" if same else "not equal", file=out)
    return 0 if same else 1


def cmd_gamma(args, out):
    parts = args.parts
    sign = "+"
    if len(parts) == 3:
        sign, *parts = parts
    if len(parts) != 2 or sign not in ("+", "-"):
        raise InputError("usage: gamma [+|-] i j")
    try:
        i, j = (int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"vertex labels must be integers: {parts}") from exc
    f = gamma_plus if sign == "+" else gamma_minus
    _emit(args, normalize(f(i, j, args.n)), out)
    return 0


def cmd_delta(args, out):
    if args.method == "closed":
        elem = delta_closed(args.n)
    else:
        elem = delta_subset(range(1, args.n + 1), args.n)
    _emit(args, elem, out)
    return 0


def cmd_eta(args, out):
    _emit(args, normalize(eta(args.i, args.k, args.j, args.n)), out)
    return 0


def cmd_bar(args, out):
    _emit(args, normalize(bar(_parse(args.expr, args.n))), out)
    return 0


def cmd_export(args, out):
    export_relations(args.n, args.output)
    print(f"wrote {args.output}", file=out)
    return 0


def cmd_verify(args, out):
    fails = run_suite(args.suite, args.n)
    for msg in fails:
        print(f"FAIL {msg}", file=out)
    if fails:
        return 1
    print(f"PASS {args.suite} (n={args.n})", file=out)
    return 0


def cmd_basis(args, out):
    if args.d < 0:
        raise InputError("degree must be nonnegative")
    words = enumerate_basis(args.n, args.d)
    if args.count:
        print(len(words), file=out)
    else:
        for w in words:
            print("*".join(map(str, w)) or "1", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordskein", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, printing=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("-n", type=_count, required=True, help="number of punctures")
        if printing:
            p.add_argument("--json", action="store_true", help="print JSON instead of text")
            p.add_argument("--q1", action="store_true", help="specialize to q = 1 first")
        p.set_defaults(func=func)
        return p

    add("normalize", cmd_normalize, "print the normal form", True).add_argument("expr")
    p = add("eq", cmd_eq, "exit 0 iff two expressions are equal")
    p.add_argument("e1")
    p.add_argument("e2")
    add("gamma", cmd_gamma, "outer arc between two punctures", True).add_argument(
        "parts", nargs="+", metavar="[+|-] i j")
    add("delta", cmd_delta, "loop around all punctures", True).add_argument(
        "--method", choices=("closed", "inversion"), default="closed")
    p = add("eta", cmd_eta, "arc leaving the polygon before k", True)
    for name in ("i", "k", "j"):
        p.add_argument(name, type=int)
    add("bar", cmd_bar, "apply the bar involution", True).add_argument("expr")
    add("export-relations", cmd_export, "write the ideal generators as JSON").add_argument(
        "-o", "--output", required=True)
    add("verify", cmd_verify, "run verification suites").add_argument(
        "--suite", choices=SUITES + ("all",), default="all")
    p = add("basis", cmd_basis, "list or count basis words")
    p.add_argument("-d", type=int, required=True, help="degree")
    p.add_argument("--count", action="store_true")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except (InputError, ValueError, IndexError, OSError) as exc:
        print(f"chordskein {args.command}: error: {exc}", file=err)
        return 2


def run_command(argv) -> tuple[int, str, str]:
    """Run the CLI in-process and return ``(status, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
