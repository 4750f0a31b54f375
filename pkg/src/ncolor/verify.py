"""Cross-validation harness.

``run_matrix`` compares enumeration, recurrence and closed form for each
constraint in a declarative grid; ``run_bijections`` checks every map
exhaustively (both round trips plus image coverage). Both return a
``CheckReport`` that serializes to JSON with a stable key order.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import bijections as bij
from .core import Modular, NoPartOneOne, ProhibitedSet, Unrestricted, parse_constraint
from .enumeration import (
    count_colored,
    enumerate_binary_strings,
    enumerate_colored,
    enumerate_regular,
)
from .errors import NColorError
from .formulas import (
    count_allow_prefix,
    count_by_parts,
    count_no_color2,
    count_prohibit_prefix,
    count_single_color,
    count_two_colors,
    count_unrestricted,
)
from .recurrences import recurrence_for, seq_modular, seq_prohibited, seq_prohibited_run

REPORT_VERSION = 1
MOD3_MAX_N = 10
BIJECTION_MAX_N = 12


def _default_grid():
    grid = [{"constraint": "all", "formula": None}]
    grid += [{"constraint": f"allow={c}", "formula": "single-color"} for c in range(1, 6)]
    grid += [
        {"constraint": f"allow={b},{c}", "formula": "two-colors"}
        for b, c in itertools.combinations(range(1, 6), 2)
    ]
    grid += [
        {"constraint": "allow=" + ",".join(map(str, range(1, c + 1))), "formula": "allow-prefix"}
        for c in range(1, 5)
    ]
    grid += [
        {"constraint": "forbid=" + ",".join(map(str, range(1, d + 1))), "formula": "prohibit-prefix"}
        for d in range(1, 4)
    ]
    grid += [
        {"constraint": "forbid=2", "formula": "no-color-2"},
        {"constraint": "mod=2:1", "formula": None},
        {"constraint": "mod=2:2", "formula": None},
        {"constraint": "mod=3:1", "formula": None},
        {"constraint": "mod=3:2,3", "formula": None},
        {"constraint": "no11", "formula": None},
    ]
    return grid


DEFAULT_GRID = _default_grid()


def formula_by_name(name, constraint) -> Callable[[int], int]:
    if name == "single-color":
        (c,) = constraint.colors
        return lambda n: count_single_color(c, n)
    if name == "two-colors":
        b, c = constraint.colors
        return lambda n: count_two_colors(b, c, n)
    if name == "allow-prefix":
        return lambda n: count_allow_prefix(constraint.max_color, n)
    if name == "prohibit-prefix":
        return lambda n: count_prohibit_prefix(constraint.max_color, n)
    if name == "no-color-2":
        return count_no_color2
    if name == "by-parts":
        return count_unrestricted
    raise ValueError(f"unknown formula {name!r}")


@dataclass(frozen=True)
class Cell:
    constraint: str
    n: int
    enum: int
    rec: int
    formula: Optional[int]
    agree: bool

    def to_json(self):
        return {
            "constraint": self.constraint,
            "n": self.n,
            "enum": self.enum,
            "rec": self.rec,
            "formula": self.formula,
            "agree": self.agree,
        }


@dataclass(frozen=True)
class Identity:
    name: str
    n: int
    lhs: int
    rhs: int

    @property
    def holds(self):
        return self.lhs == self.rhs

    def to_json(self):
        return {"name": self.name, "n": self.n, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class BijectionResult:
    name: str
    params: str
    n: int
    domain_size: int
    image_size: int
    round_trip_failures: int
    covers_image: bool

    @property
    def ok(self):
        return self.round_trip_failures == 0 and self.covers_image

    def to_json(self):
        return {
            "name": self.name,
            "params": self.params,
            "n": self.n,
            "domainSize": self.domain_size,
            "imageSize": self.image_size,
            "roundTripFailures": self.round_trip_failures,
            "coversImage": self.covers_image,
        }


@dataclass
class CheckReport:
    cells: list = field(default_factory=list)
    identities: list = field(default_factory=list)
    bijections: list = field(default_factory=list)

    @property
    def overall(self):
        return (
            all(c.agree for c in self.cells)
            and all(i.holds for i in self.identities)
            and all(b.ok for b in self.bijections)
        )

    def merge(self, other):
        return CheckReport(
            self.cells + other.cells,
            self.identities + other.identities,
            self.bijections + other.bijections,
        )

    def to_json(self):
        return {
            "version": REPORT_VERSION,
            "overall": self.overall,
            "cells": [c.to_json() for c in self.cells],
            "identities": [i.to_json() for i in self.identities],
            "bijections": [b.to_json() for b in self.bijections],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)

    def summary(self):
        lines = [f"{'constraint':<14} {'n':>5} {'enum=rec':>9} {'formula':>9}  status"]
        by_constraint = {}
        for c in self.cells:
            by_constraint.setdefault(c.constraint, []).append(c)
        for name, cells in by_constraint.items():
            ok = all(c.agree for c in cells)
            has_formula = any(c.formula is not None for c in cells)
            lines.append(
                f"{name:<14} {'0..' + str(max(c.n for c in cells)):>5} "
                f"{sum(c.enum == c.rec for c in cells):>4}/{len(cells):<4} "
                f"{'yes' if has_formula else '-':>9}  {'ok' if ok else 'FAIL'}"
            )
        ids = {}
        for i in self.identities:
            ids.setdefault(i.name, []).append(i)
        for name, items in ids.items():
            bad = sum(not i.holds for i in items)
            lines.append(f"identity {name}: {len(items)} checks, {bad} failures")
        bjs = {}
        for b in self.bijections:
            bjs.setdefault((b.name, b.params), []).append(b)
        for (name, params), items in bjs.items():
            bad = sum(not b.ok for b in items)
            size = sum(b.domain_size for b in items)
            label = f"{name}({params})" if params else name
            lines.append(f"bijection {label}: {size} objects, {bad} failing n")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def load_grid(path):
    with open(path) as fh:
        grid = json.load(fh)
    for entry in grid:
        parse_constraint(entry["constraint"])
    return grid


def run_matrix(max_n, grid=None, cap=None) -> CheckReport:
    grid = DEFAULT_GRID if grid is None else grid
    report = CheckReport()
    for entry in grid:
        constraint = parse_constraint(entry["constraint"])
        rec = recurrence_for(constraint, max_n).values
        formula = formula_by_name(entry["formula"], constraint) if entry.get("formula") else None
        for n in range(max_n + 1):
            e = count_colored(n, constraint, cap=cap)
            f = formula(n) if formula else None
            agree = e == rec[n] and (f is None or f == e)
            report.cells.append(Cell(constraint.text, n, e, rec[n], f, agree))

    for n in range(max_n + 1):
        for m in range(n + 1):
            report.identities.append(
                Identity("parts-binomial", n, count_colored(n, Unrestricted(), parts=m, cap=cap), count_by_parts(n, m))
            )

    b = [count_colored(n, NoPartOneOne(), cap=cap) for n in range(max_n + 1)]
    for n in range(max_n + 1):
        odd = count_colored(n, Modular(2, [1]), cap=cap)
        report.identities.append(Identity("odd=b(n)+b(n-1)", n, odd, b[n] + (b[n - 1] if n else 0)))

    for entry in grid:
        constraint = parse_constraint(entry["constraint"])
        if isinstance(constraint, ProhibitedSet):
            ds = constraint.colors
            if ds == tuple(range(ds[0], ds[-1] + 1)):
                run = seq_prohibited_run(ds[0], len(ds) - 1, max_n).values
                full = seq_prohibited(ds, max_n).values
                for n in range(max_n + 1):
                    report.identities.append(Identity(f"run-recurrence {constraint.text}", n, run[n], full[n]))

    base = seq_modular(1, [1], max_n).values
    for m in range(2, 5):
        every = seq_modular(m, range(1, m + 1), max_n).values
        for n in range(max_n + 1):
            report.identities.append(Identity(f"mod={m}:all", n, every[n], base[n]))
    return report


# -- bijections --------------------------------------------------------------


@dataclass(frozen=True)
class BijectionCase:
    name: str
    params: str
    domain: Callable
    target: Callable
    forward: Callable
    inverse: Callable
    min_n: int = 0
    max_n: Optional[int] = None


def _rectangles(n):
    for k in range(n // 2 + 1):
        for marks in itertools.combinations(range(1, n + k + 1), 3 * k):
            yield bij.MarkedRectangle(n + k, marks)


def _no_one_one_sources(n):
    yield from ((x, n) for x in enumerate_colored(n, NoPartOneOne()))
    if n >= 1:
        yield from ((x, n - 1) for x in enumerate_colored(n - 1, NoPartOneOne()))


def _allow(*colors):
    return parse_constraint("allow=" + ",".join(map(str, colors)))


def bijection_cases():
    cases = []
    for c in range(1, 6):
        cases.append(BijectionCase(
            "prop5-minparts", f"c={c}",
            lambda n, c=c: enumerate_colored(n, _allow(c)),
            lambda n, c=c: enumerate_regular(n, "prop5-minparts", c=c),
            lambda x, n, c=c: bij.single_color_to_min_parts(x, c),
            lambda y, n, c=c: bij.min_parts_to_single_color(y, c),
        ))
    cases.append(BijectionCase(
        "prop5-onec", "c=1",
        lambda n: enumerate_colored(n, _allow(1)),
        lambda n: enumerate_regular(n - 1, "prop5-onec-tagged"),
        lambda x, n: bij.single_color_to_tagged_ones(x),
        lambda y, n: bij.tagged_ones_to_single_color(y),
        min_n=1,
    ))
    for c in range(2, 6):
        cases.append(BijectionCase(
            "prop5-onec", f"c={c}",
            lambda n, c=c: enumerate_colored(n, _allow(c)),
            lambda n, c=c: enumerate_regular(n, "prop5-onec", c=c),
            lambda x, n, c=c: bij.single_color_to_one_c(x, c),
            lambda y, n, c=c: bij.one_c_to_single_color(y, c),
        ))
    for b, c in itertools.combinations(range(1, 6), 2):
        cases.append(BijectionCase(
            "prop7-typed", f"b={b},c={c}",
            lambda n, b=b, c=c: enumerate_colored(n, _allow(b, c)),
            lambda n, b=b, c=c: enumerate_regular(n, "prop7-typed", b=b, c=c),
            lambda x, n, b=b, c=c: bij.two_colors_to_typed(x, b, c),
            lambda y, n, b=b, c=c: bij.typed_to_two_colors(y, b, c),
        ))
        cases.append(BijectionCase(
            "prop7-mixed", f"b={b},c={c}",
            lambda n, b=b, c=c: enumerate_colored(n, _allow(b, c)),
            lambda n, b=b, c=c: enumerate_regular(n, "prop7-mixed", b=b, c=c),
            lambda x, n, b=b, c=c: bij.two_colors_to_mixed(x, b, c),
            lambda y, n, b=b, c=c: bij.mixed_to_two_colors(y, b, c),
        ))
    for d in (1, 2, 3):
        cases.append(BijectionCase(
            "prop11", f"d={d}",
            lambda n, d=d: enumerate_colored(n + d, ProhibitedSet(range(1, d + 1))),
            lambda n, d=d: enumerate_regular(n, "prop11", d=d),
            lambda x, n, d=d: bij.prohibit_prefix_to_regular(x, d),
            lambda y, n, d=d: bij.regular_to_prohibit_prefix(y, d),
            min_n=1,
        ))
    cases.append(BijectionCase(
        "prop12-rect", "",
        _rectangles,
        lambda n: enumerate_colored(n, ProhibitedSet([2])),
        lambda x, n: bij.rectangle_to_no_color2(x),
        lambda y, n: bij.no_color2_to_rectangle(y),
    ))
    cases.append(BijectionCase(
        "prop13-mod3", "",
        lambda n: enumerate_colored(n, ProhibitedSet([2])),
        lambda n: enumerate_regular(3 * n + 2, "prop13-mod3"),
        lambda x, n: bij.no_color2_to_mod3(x),
        lambda y, n: bij.mod3_to_no_color2(y),
        max_n=MOD3_MAX_N,
    ))
    for m in range(2, 5):
        for i in range(2, m + 1):
            cases.append(BijectionCase(
                "prop14-binary", f"m={m},i={i}",
                lambda n, m=m, i=i: enumerate_colored(n, Modular(m, [i])),
                lambda n, m=m, i=i: enumerate_binary_strings(n - 1, m, i),
                lambda x, n, m=m, i=i: bij.modular_to_binary(x, m, i),
                lambda y, n, m=m, i=i: bij.binary_to_modular(y, m, i),
                min_n=1,
            ))
    cases.append(BijectionCase(
        "prop15-odd", "",
        _no_one_one_sources,
        lambda n: enumerate_colored(n, Modular(2, [1])),
        lambda x, n: bij.no_one_one_to_odd(x[0], n),
        lambda y, n: bij.odd_to_no_one_one(y),
    ))
    return cases


def check_bijection(case, n) -> BijectionResult:
    domain = list(case.domain(n))
    target = list(case.target(n))
    failures = 0
    images = []
    for x in domain:
        try:
            y = case.forward(x, n)
            images.append(y)
            if case.inverse(y, n) != x:
                failures += 1
        except NColorError:
            failures += 1
    for y in target:
        try:
            if case.forward(case.inverse(y, n), n) != y:
                failures += 1
        except NColorError:
            failures += 1
    covers = len(set(images)) == len(images) == len(target) and set(images) == set(target)
    return BijectionResult(case.name, case.params, n, len(domain), len(target), failures, covers)


def run_bijections(max_n, names=None) -> CheckReport:
    report = CheckReport()
    for case in bijection_cases():
        if names is not None and case.name not in names:
            continue
        top = max_n if case.max_n is None else min(max_n, case.max_n)
        for n in range(case.min_n, top + 1):
            report.bijections.append(check_bijection(case, n))
    return report


def run_all(max_n, grid=None, bijection_max_n=None) -> CheckReport:
    bmax = min(max_n, BIJECTION_MAX_N) if bijection_max_n is None else bijection_max_n
    return run_matrix(max_n, grid).merge(run_bijections(bmax))
