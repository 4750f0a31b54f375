"""Bottom-up evaluation of the allowed / prohibited / modular recurrences.

All three engines share ``_at`` for the ``a(n) = 0 for n <= -1``
convention and ``_checked`` for the nonnegativity guard.
"""

from __future__ import annotations

from .core import (
    AllowedSet,
    CountSequence,
    Method,
    Modular,
    NoPartOneOne,
    ProhibitedSet,
    Unrestricted,
)


def _at(table, n):
    return table[n] if n >= 0 else 0


def _checked(table, n, value):
    if value < 0:
        raise ArithmeticError(f"recurrence produced a({n}) = {value} < 0; check the initial values")
    table.append(value)


def _allowed_values(colors, N):
    colors = sorted(set(colors))
    if not colors:
        raise ValueError("allowed color set must be nonempty")
    lo = colors[0]
    table = [1]
    for n in range(1, N + 1):
        if n < lo:
            table.append(0)
        elif n == lo:
            table.append(1)
        else:
            _checked(table, n, _at(table, n - 1) + sum(_at(table, n - c) for c in colors))
    return table


def seq_allowed(colors, N) -> CountSequence:
    """a(n) = a(n-1) + sum a(n - c) over allowed colors c.

    a(0) = 1, a(n) = 0 below the smallest color, a(min color) = 1 is
    prescribed (the recurrence would count a(n-1) twice there when the
    smallest color is 1).
    """
    constraint = AllowedSet(colors)
    return CountSequence(_allowed_values(constraint.colors, N), Method.RECURRENCE, constraint)


def _prohibited_initial(colors, top, N):
    # Seed through n = 2 at least: at n = 2 the a(n-2) term counts the
    # empty composition, which has no last part to grow.
    top = max(top, 2)
    complement = [c for c in range(1, top + 1) if c not in colors]
    if not complement:
        return [1] + [0] * min(top, N)
    return _allowed_values(complement, min(top, N))


def seq_prohibited(colors, N) -> CountSequence:
    """a(n) = 3a(n-1) - a(n-2) + sum(-a(n-d) + a(n-d-1)) over prohibited d."""
    constraint = ProhibitedSet(colors)
    ds = constraint.colors
    table = _prohibited_initial(ds, constraint.max_color, N)
    for n in range(len(table), N + 1):
        value = 3 * _at(table, n - 1) - _at(table, n - 2)
        value += sum(_at(table, n - d - 1) - _at(table, n - d) for d in ds)
        _checked(table, n, value)
    return CountSequence(table, Method.RECURRENCE, constraint)


def seq_prohibited_run(k, d, N) -> CountSequence:
    """Forbidden colors k, k+1, ..., k+d: the telescoped four-term form.

    a(n) = 3a(n-1) - a(n-2) - a(n-k) + a(n-k-d-1), same initial values
    as ``seq_prohibited``.
    """
    if k < 1 or d < 0:
        raise ValueError(f"need k >= 1 and d >= 0, got k={k}, d={d}")
    ds = range(k, k + d + 1)
    table = _prohibited_initial(ds, k + d, N)
    for n in range(len(table), N + 1):
        value = (
            3 * _at(table, n - 1)
            - _at(table, n - 2)
            - _at(table, n - k)
            + _at(table, n - k - d - 1)
        )
        _checked(table, n, value)
    return CountSequence(table, Method.RECURRENCE, ProhibitedSet(ds))


def seq_modular(m, residues, N) -> CountSequence:
    """Colors congruent to ``residues`` mod ``m`` (residue m = multiples of m).

    a(n) = a(n-1) + a(n-m) - a(n-m-1) + sum a(n - r); a(0..m+1) come from
    the allowed-colors recurrence on the residues, plus color m+1 when
    residue 1 is present.
    """
    constraint = Modular(m, residues)
    rs = constraint.residues
    initial = list(rs) + ([m + 1] if rs[0] == 1 else [])
    table = _allowed_values(initial, min(m + 1, N))
    for n in range(m + 2, N + 1):
        value = _at(table, n - 1) + _at(table, n - m) - _at(table, n - m - 1)
        value += sum(_at(table, n - r) for r in rs)
        _checked(table, n, value)
    return CountSequence(table, Method.RECURRENCE, constraint)


def seq_no_one_one(N) -> CountSequence:
    """b(n) for the 1_1-free compositions via b(n) = a(n) - b(n-1).

    ``a`` is the odd-colors sequence; the identity a(n) = b(n) + b(n-1)
    is what the odd-color / no-1_1 bijection establishes.
    """
    odd = seq_modular(2, [1], N).values
    table = [1]
    for n in range(1, N + 1):
        _checked(table, n, odd[n] - table[n - 1])
    return CountSequence(table, Method.RECURRENCE, NoPartOneOne())


def recurrence_for(constraint, N) -> CountSequence:
    """Dispatch a constraint to the recurrence that covers it."""
    if isinstance(constraint, AllowedSet):
        return seq_allowed(constraint.colors, N)
    if isinstance(constraint, ProhibitedSet):
        return seq_prohibited(constraint.colors, N)
    if isinstance(constraint, Modular):
        return seq_modular(constraint.modulus, constraint.residues, N)
    if isinstance(constraint, Unrestricted):
        seq = seq_modular(1, [1], N)
        return CountSequence(seq.values, Method.RECURRENCE, constraint)
    if isinstance(constraint, NoPartOneOne):
        return seq_no_one_one(N)
    raise TypeError(f"no recurrence for {constraint!r}")
