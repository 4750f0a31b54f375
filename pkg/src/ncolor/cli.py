"""Command-line front end: ``seq``, ``list``, ``map`` and ``check``.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 method not available for the constraint, 4 enumeration cap exceeded,
5 input outside a bijection's domain.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bij
from .core import (
    format_composition,
    format_regular,
    parse_composition,
    parse_constraint,
    parse_regular,
    render_tiling,
)
from .enumeration import count_colored, enumerate_colored
from .errors import CapExceeded, DomainError, NoClosedForm, ParseError
from .formulas import closed_form
from .recurrences import recurrence_for
from .verify import load_grid, run_all

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_METHOD = 3
EXIT_CAP = 4
EXIT_DOMAIN = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def sequence(constraint, n, method):
    """a(0..n) by the chosen method; ``auto`` tries formula, then recurrence."""
    if method in ("formula", "auto"):
        try:
            _, f = closed_form(constraint)
            return [f(k) for k in range(n + 1)]
        except NoClosedForm:
            if method == "formula":
                raise
    if method in ("rec", "auto"):
        try:
            return list(recurrence_for(constraint, n).values)
        except TypeError:
            if method == "rec":
                raise NoClosedForm(f"no recurrence for {constraint.text}")
    return [count_colored(k, constraint) for k in range(n + 1)]


def cmd_seq(args):
    constraint = parse_constraint(args.constraint)
    values = sequence(constraint, args.n, args.method)
    if args.json:
        print(json.dumps(values))
    else:
        print("\n".join(str(v) for v in values))
    return 0


def cmd_list(args):
    constraint = parse_constraint(args.constraint)
    comps = enumerate_colored(args.n, constraint, parts=args.parts)
    if args.format == "json":
        print(json.dumps([c.to_json() for c in comps]))
    else:
        render = render_tiling if args.format == "tiling" else format_composition
        for comp in comps:
            print(render(comp))
    return 0


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParseError(f"{args.name} needs {' '.join(missing)}")


def _apply_map(args):
    name, fwd, text = args.name, args.direction == "fwd", args.input
    if name == "prop5-minparts":
        _need(args, "c")
        if fwd:
            return format_regular(bij.single_color_to_min_parts(parse_composition(text), args.c))
        return format_composition(bij.min_parts_to_single_color(parse_regular(text, tagged=False), args.c))
    if name == "prop5-onec":
        _need(args, "c")
        if args.c == 1:
            if fwd:
                return format_regular(bij.single_color_to_tagged_ones(parse_composition(text)))
            return format_composition(bij.tagged_ones_to_single_color(parse_regular(text, tagged=True)))
        if fwd:
            return format_regular(bij.single_color_to_one_c(parse_composition(text), args.c))
        return format_composition(bij.one_c_to_single_color(parse_regular(text, tagged=False), args.c))
    if name == "prop7-typed":
        _need(args, "b", "c")
        if fwd:
            return format_regular(bij.two_colors_to_typed(parse_composition(text), args.b, args.c))
        return format_composition(bij.typed_to_two_colors(parse_regular(text, tagged=True), args.b, args.c))
    if name == "prop7-mixed":
        _need(args, "b", "c")
        if fwd:
            return format_regular(bij.two_colors_to_mixed(parse_composition(text), args.b, args.c))
        reg = parse_regular(text, tagged=args.b == 1)
        return format_composition(bij.mixed_to_two_colors(reg, args.b, args.c))
    if name == "prop11":
        _need(args, "d")
        if fwd:
            return format_regular(bij.prohibit_prefix_to_regular(parse_composition(text), args.d))
        return format_composition(bij.regular_to_prohibit_prefix(parse_regular(text, tagged=False), args.d))
    if name == "prop12-rect":
        if fwd:
            return format_composition(bij.rectangle_to_no_color2(bij.MarkedRectangle.parse(text)))
        return str(bij.no_color2_to_rectangle(parse_composition(text)))
    if name == "prop13-mod3":
        if fwd:
            return format_regular(bij.no_color2_to_mod3(parse_composition(text)))
        return format_composition(bij.mod3_to_no_color2(parse_regular(text, tagged=False)))
    if name == "prop14-binary":
        _need(args, "m", "i")
        if fwd:
            return bij.modular_to_binary(parse_composition(text), args.m, args.i)
        bits = text.strip()
        if set(bits) - {"0", "1"}:
            raise ParseError(f"expected a bit string, got {text!r}", 0)
        return format_composition(bij.binary_to_modular(bits, args.m, args.i))
    if name == "prop15-odd":
        comp = parse_composition(text)
        if fwd:
            n = comp.n if args.n is None else args.n
            return format_composition(bij.no_one_one_to_odd(comp, n))
        source, flag = bij.odd_to_no_one_one(comp)
        return f"{format_composition(source)}\nflag={flag}"
    raise ParseError(f"unknown bijection {name!r}")


MAP_NAMES = (
    "prop5-minparts",
    "prop5-onec",
    "prop7-typed",
    "prop7-mixed",
    "prop11",
    "prop12-rect",
    "prop13-mod3",
    "prop14-binary",
    "prop15-odd",
)


def cmd_map(args):
    print(_apply_map(args))
    return 0


def cmd_check(args):
    grid = load_grid(args.grid) if args.grid else None
    report = run_all(args.max_n, grid)
    print(report.dumps() if args.json else report.summary())
    return 0 if report.overall else EXIT_FAIL


def build_parser():
    parser = _Parser(prog="ncolor", description="Color-restricted n-color compositions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("seq", help="print a(0..n)")
    p.add_argument("--constraint", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("enum", "rec", "formula", "auto"), default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("list", help="list every composition of n")
    p.add_argument("--constraint", default="all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", "--parts", dest="parts", type=int)
    p.add_argument("--format", choices=("text", "json", "tiling"), default="text")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("name", choices=MAP_NAMES)
    p.add_argument("direction", choices=("fwd", "inv"))
    p.add_argument("input")
    for flag in ("b", "c", "d", "m", "i", "n"):
        p.add_argument(f"--{flag}", type=int)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("check", help="run the cross-validation harness")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--grid", help="JSON grid file (list of {constraint, formula})")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"ncolor: domain violation: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CapExceeded as exc:
        print(f"ncolor: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NoClosedForm as exc:
        print(f"ncolor: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except (ParseError, ValueError) as exc:
        print(f"ncolor: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run():
    sys.exit(main())
