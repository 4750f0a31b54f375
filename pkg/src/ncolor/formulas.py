"""Direct (non-recursive) counting formulas and an exact binomial table.

Every ``count_*`` function returns 1 at n = 0 for the empty composition,
even where the underlying sum starts at one part.
"""

from __future__ import annotations

from .core import AllowedSet, Modular, ProhibitedSet, Unrestricted
from .errors import NoClosedForm


class BinomialTable:
    """Pascal's triangle, grown on demand.

    ``C(a, b)`` is 0 whenever ``b < 0``, ``b > a`` or ``a < 0``. Callers
    handle the "0 for non-integer b" convention with a divisibility test
    before indexing.
    """

    def __init__(self, bound=0):
        self._rows = [[1]]
        self._grow(bound)

    def _grow(self, a):
        rows = self._rows
        while len(rows) <= a:
            prev = rows[-1]
            rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, len(prev))] + [1])

    @property
    def bound(self):
        return len(self._rows) - 1

    def __call__(self, a, b):
        if a < 0 or b < 0 or b > a:
            return 0
        self._grow(a)
        return self._rows[a][b]


_C = BinomialTable(64)


def count_single_color(c, n, C=_C):
    """Only color ``c``: sum over m parts of C(n - (c-1)m - 1, m - 1)."""
    if c < 1:
        raise ValueError(f"color must be positive, got {c}")
    if n == 0:
        return 1
    return sum(C(n - (c - 1) * m - 1, m - 1) for m in range(1, n + 1))


def count_two_colors(b, c, n, C=_C):
    """Only colors ``b < c``.

    With m parts, i tail squares and the remaining n - bm - i squares
    turning (n - bm - i)/(c - b) of the b-blocks into c-blocks.
    """
    if not 1 <= b < c:
        raise ValueError(f"need 1 <= b < c, got b={b}, c={c}")
    if n == 0:
        return 1
    gap = c - b
    total = 0
    for m in range(1, n + 1):
        for i in range(0, n - b * m + 1):
            extra, rem = divmod(n - b * m - i, gap)
            if rem:
                continue
            total += C(i + m - 1, m - 1) * C(m, extra)
    return total


def _g(j, nj, ij, C):
    """Ways to place ``nj`` pre-spot empty squares among ``ij`` parts of colors <= j."""
    if nj < 0:
        return 0
    if j == 2:
        return C(ij, nj)
    total = 0
    for ilow in range(0, ij + 1):
        nlow = nj - (j - 1) * (ij - ilow)
        if nlow < 0:
            continue
        total += C(ij, ij - ilow) * _g(j - 1, nlow, ilow, C)
    return total


def count_allow_prefix(c, n, C=_C):
    """Colors 1..c allowed, by the nested G_j recursion."""
    if c < 1:
        raise ValueError(f"c must be positive, got {c}")
    if n == 0:
        return 1
    if c == 1:
        return 2 ** (n - 1)
    total = 0
    for parts in range(1, n + 1):
        for tail in range(0, n - parts + 1):
            total += C(tail + parts - 1, parts - 1) * _g(c, n - parts - tail, parts, C)
    return total


def allow_three_expanded(n, n2_sign, C=_C):
    """The fully expanded c = 3 sum with the final binomial C(i2, n - 3 i3 +/- 2 i2 - l).

    ``n2_sign=+1`` follows n2 = n3 - 2(i3 - i2); ``-1`` is the variant with
    ``- 2 i2``. Only the ``+1`` reading agrees with brute force.
    """
    if n == 0:
        return 1
    total = 0
    for i3 in range(1, n + 1):
        for tail in range(0, n - i3 + 1):
            for i2 in range(0, i3 + 1):
                total += (
                    C(tail + i3 - 1, i3 - 1)
                    * C(i3, i3 - i2)
                    * C(i2, n - 3 * i3 + n2_sign * 2 * i2 - tail)
                )
    return total


def count_by_parts(n, m, C=_C):
    """Unrestricted compositions of n with exactly m parts: C(n+m-1, 2m-1)."""
    if n == 0 and m == 0:
        return 1
    if n < 1 or m < 1:
        return 0
    return C(n + m - 1, 2 * m - 1)


def count_unrestricted(n, C=_C):
    return sum(count_by_parts(n, m, C) for m in range(0, n + 1))


def count_prohibit_prefix(d, n, C=_C):
    """Colors 1..d prohibited: sum over m of C(n - (d-1)m - 1, 2m - 1)."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if n == 0:
        return 1
    return sum(C(n - (d - 1) * m - 1, 2 * m - 1) for m in range(1, n // (d + 1) + 1))


def count_no_color2(n, C=_C):
    """Color 2 prohibited: sum over k parts larger than 1 of C(n+k, 3k)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return sum(C(n + k, 3 * k) for k in range(0, n // 2 + 1))


def _is_prefix(colors):
    return colors == tuple(range(1, len(colors) + 1))


def closed_form(constraint):
    """Return ``(name, f)`` with ``f(n)`` a direct count, or raise NoClosedForm."""
    if isinstance(constraint, Unrestricted) or (
        isinstance(constraint, Modular) and constraint.modulus == 1
    ):
        return "by-parts", count_unrestricted
    if isinstance(constraint, AllowedSet):
        cs = constraint.colors
        if len(cs) == 1:
            return "single-color", lambda n: count_single_color(cs[0], n)
        if len(cs) == 2:
            return "two-colors", lambda n: count_two_colors(cs[0], cs[1], n)
        if _is_prefix(cs):
            return "allow-prefix", lambda n: count_allow_prefix(len(cs), n)
    if isinstance(constraint, ProhibitedSet):
        ds = constraint.colors
        if _is_prefix(ds):
            return "prohibit-prefix", lambda n: count_prohibit_prefix(len(ds), n)
        if ds == (2,):
            return "no-color-2", count_no_color2
    raise NoClosedForm(f"no closed form for constraint {constraint.text}")
