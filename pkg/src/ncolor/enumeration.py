"""Exhaustive generation of color-restricted compositions.

This is the brute-force oracle the recurrences, formulas and bijections
are checked against, so it favours obviously-correct recursion over
speed. Everything is yielded in lexicographic order of the
``(size, color)`` sequence.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import (
    ColorConstraint,
    ColoredComposition,
    ColoredPart,
    NoPartOneOne,
    RegularComposition,
)
from .errors import CapExceeded

DEFAULT_CAP = 22
CAP_ENV = "NCOLOR_ENUM_CAP"


def enumeration_cap():
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


def _check_cap(n, cap):
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise CapExceeded(n, cap)


def _walk(n, options, max_parts=None):
    """Yield tuples of ``(size, label)`` pairs summing to ``n``.

    ``options(index, size)`` gives the labels (colors or tags) allowed
    for a part of that size at that position, in ascending order.
    """

    def rec(rem, prefix):
        if rem == 0:
            yield prefix
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        index = len(prefix)
        for size in range(1, rem + 1):
            for label in options(index, size):
                yield from rec(rem - size, prefix + ((size, label),))

    return rec(n, ())


@dataclass(frozen=True)
class EnumerationRequest:
    n: int
    constraint: ColorConstraint
    parts: Optional[int] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.parts is not None and self.parts < 0:
            raise ValueError(f"parts filter must be nonnegative, got {self.parts}")


def _colored_pairs(req):
    table = {
        size: tuple(c for c in range(1, size + 1) if req.constraint.permits(size, c))
        for size in range(1, req.n + 1)
    }
    stream = _walk(req.n, lambda _i, size: table[size], req.parts)
    if req.parts is None:
        return stream
    return (t for t in stream if len(t) == req.parts)


def enumerate_colored(n, constraint, parts=None, cap=None) -> Iterator[ColoredComposition]:
    """Every composition of ``n`` whose colors satisfy ``constraint``."""
    _check_cap(n, cap)
    req = EnumerationRequest(n, constraint, parts)
    for pairs in _colored_pairs(req):
        yield ColoredComposition(tuple(ColoredPart(s, c) for s, c in pairs))


def count_colored(n, constraint, parts=None, cap=None) -> int:
    """Length of the ``enumerate_colored`` stream, without building objects."""
    _check_cap(n, cap)
    return sum(1 for _ in _colored_pairs(EnumerationRequest(n, constraint, parts)))


# -- regular-composition target families -------------------------------------


def _untagged(pred_first, pred_other):
    def options(index, size):
        ok = pred_first(size) if index == 0 else pred_other(size)
        return (None,) if ok else ()

    return options


def _odd_runs_follow(parts, d):
    """Each non-first part i with 2 <= i <= d-1 is followed by an odd run of d's."""
    for idx in range(1, len(parts)):
        if 2 <= parts[idx] <= d - 1:
            run = 0
            j = idx + 1
            while j < len(parts) and parts[j] == d:
                run += 1
                j += 1
            if run % 2 == 0:
                return False
    return True


def in_low_residue_family(parts, d):
    """Membership in the regular-composition side of the prohibit-1..d bijection."""
    if d == 1:
        return all(p >= 1 for p in parts)
    if any(not 1 <= (p - 1) % (2 * d) + 1 <= d for p in parts):
        return False
    return _odd_runs_follow(parts, d)


FAMILIES = (
    "prop5-minparts",
    "prop5-onec",
    "prop5-onec-tagged",
    "prop7-typed",
    "prop7-mixed",
    "prop11",
    "prop13-mod3",
)


def enumerate_regular(n, family, c=None, b=None, d=None, cap=None) -> Iterator[RegularComposition]:
    """Members of a named bijection-target family, in lexicographic order.

    Families and their parameters:

    ``prop5-minparts`` (c)
        parts >= c.
    ``prop5-onec`` (c >= 2)
        parts in {1, c}, first part c.
    ``prop5-onec-tagged``
        the c = 1 reading: ``n`` parts 1 each tagged plain (1) or barred (2).
        Note the sum is ``n`` here; it is the image of colored compositions
        of ``n + 1``.
    ``prop7-typed`` (b < c)
        parts >= b; parts >= c come in two types (tag 1 = from color b,
        tag 2 = from color c); smaller parts carry tag 1.
    ``prop7-mixed`` (b < c)
        parts in {1, b, c}, first part b or c.  When b = 1 a part 1 is
        either a tail square (tag 1) or a 1-block (tag 2), and every part
        is tagged.
    ``prop11`` (d)
        parts congruent to 1..d mod 2d where every non-first part i,
        2 <= i <= d-1, is followed by an odd number of parts d.  For d = 1
        this is every composition of n.
    ``prop13-mod3``
        parts congruent to 2 mod 3.
    """
    _check_cap(n, cap if cap is not None else _regular_cap(family))
    tagged = False
    post = None
    if family == "prop5-minparts":
        options = _untagged(lambda s: s >= c, lambda s: s >= c)
    elif family == "prop5-onec":
        if c is None or c < 2:
            raise ValueError("prop5-onec needs c >= 2; use prop5-onec-tagged for c = 1")
        options = _untagged(lambda s: s == c, lambda s: s in (1, c))
    elif family == "prop5-onec-tagged":
        tagged = True

        def options(index, size):
            return (1, 2) if size == 1 else ()

    elif family == "prop7-typed":
        _check_bc(b, c)
        tagged = True

        def options(index, size):
            if size < b:
                return ()
            return (1, 2) if size >= c else (1,)

    elif family == "prop7-mixed":
        _check_bc(b, c)
        if b == 1:
            tagged = True

            def options(index, size):
                if size == 1:
                    return (2,) if index == 0 else (1, 2)
                return (1,) if size == c else ()

        else:
            options = _untagged(lambda s: s in (b, c), lambda s: s in (1, b, c))
    elif family == "prop11":
        if d is None or d < 1:
            raise ValueError("prop11 needs d >= 1")
        if d == 1:
            options = _untagged(lambda s: True, lambda s: True)
        else:
            ok = lambda s: 1 <= (s - 1) % (2 * d) + 1 <= d  # noqa: E731
            options = _untagged(ok, ok)
            post = lambda parts: _odd_runs_follow(parts, d)  # noqa: E731
    elif family == "prop13-mod3":
        ok = lambda s: s % 3 == 2  # noqa: E731
        options = _untagged(ok, ok)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")

    for pairs in _walk(n, options):
        parts = tuple(s for s, _ in pairs)
        if post is not None and not post(parts):
            continue
        tags = tuple(t for _, t in pairs) if tagged else None
        yield RegularComposition(parts, tags)


def _regular_cap(family):
    # The mod-3 family lives at 3n+2.
    return 3 * enumeration_cap() + 2 if family == "prop13-mod3" else enumeration_cap()


def _check_bc(b, c):
    if b is None or c is None or not 1 <= b < c:
        raise ValueError(f"need 1 <= b < c, got b={b}, c={c}")


# -- other bijection targets -------------------------------------------------


def enumerate_binary_strings(length, m, i):
    """Bit strings of ``length`` starting with 1 whose runs of 1s are i-1 mod m."""
    if length < 0:
        return
    for bits in itertools.product("01", repeat=length):
        s = "".join(bits)
        if is_run_string(s, m, i):
            yield s


def is_run_string(s, m, i):
    if not s or s[0] != "1" or set(s) - {"0", "1"}:
        return False
    return all(len(run) % m == (i - 1) % m for run in s.split("0") if run)


def enumerate_no_one_one(n, cap=None):
    """B(n): compositions of n with the part 1_1 prohibited (empty for n < 0)."""
    if n < 0:
        return iter(())
    return enumerate_colored(n, NoPartOneOne(), cap=cap)
