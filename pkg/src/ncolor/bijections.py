"""Forward and inverse maps between color-restricted compositions and
other combinatorial families.

Each forward map checks that its input lies in the domain and raises
``DomainError`` naming the failed predicate otherwise; each inverse
checks membership in the target family the same way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    AllowedSet,
    ColoredComposition,
    ColoredPart,
    Modular,
    NoPartOneOne,
    ProhibitedSet,
    RegularComposition,
    satisfies,
)
from .enumeration import in_low_residue_family, is_run_string
from .errors import DomainError, ParseError

ONE_ONE = ColoredPart(1, 1)


def _require(comp, constraint, name):
    if not satisfies(comp, constraint):
        raise DomainError(name, f"{comp} does not satisfy {constraint.text}")


def _colored(pairs):
    return ColoredComposition(tuple(ColoredPart(s, c) for s, c in pairs))


def _blocks_and_tails(comp):
    """Each tile becomes its color (the block) followed by one 1 per tail square."""
    out = []
    for p in comp.parts:
        out.append(p.color)
        out.extend([1] * p.tail)
    return out


def _merge_tails(parts, is_block):
    """Inverse of ``_blocks_and_tails``: a block absorbs the 1s after it."""
    pairs = []
    for idx, value in enumerate(parts):
        if is_block(idx):
            pairs.append([value, value])
        elif value == 1 and pairs:
            pairs[-1][0] += 1
        else:
            raise DomainError("tail-merge", f"part {value} at position {idx + 1} cannot start or extend a tile")
    return _colored(pairs)


# -- single color ------------------------------------------------------------


def single_color_to_min_parts(comp, c):
    """Erase the color: parts are then all >= c."""
    _require(comp, AllowedSet([c]), f"allow={c}")
    return RegularComposition(tuple(p.size for p in comp.parts))


def min_parts_to_single_color(reg, c):
    if any(p < c for p in reg.parts):
        raise DomainError("parts>=c", f"{reg} has a part smaller than {c}")
    return _colored((p, c) for p in reg.parts)


def single_color_to_one_c(comp, c):
    """c-block -> part c, each tail square -> part 1 (c >= 2)."""
    if c < 2:
        raise DomainError("c>=2", "use single_color_to_tagged_ones for c = 1")
    _require(comp, AllowedSet([c]), f"allow={c}")
    return RegularComposition(tuple(_blocks_and_tails(comp)))


def one_c_to_single_color(reg, c):
    if c < 2:
        raise DomainError("c>=2", "use tagged_ones_to_single_color for c = 1")
    parts = reg.parts
    if parts and parts[0] != c:
        raise DomainError("first-part-c", f"{reg} does not start with {c}")
    if any(p not in (1, c) for p in parts):
        raise DomainError("parts-in-{1,c}", f"{reg} has a part other than 1 or {c}")
    return _merge_tails(parts, lambda i: parts[i] == c)


def single_color_to_tagged_ones(comp):
    """The c = 1 case: drop the first square, then each remaining square is
    a barred 1 (tag 2) when it starts a tile and a plain 1 (tag 1) otherwise.
    A composition of n maps to n - 1 tagged ones."""
    _require(comp, AllowedSet([1]), "allow=1")
    if comp.n == 0:
        raise DomainError("n>=1", "the empty composition has no tagged-ones image")
    tags = []
    for p in comp.parts:
        tags.append(2)
        tags.extend([1] * (p.size - 1))
    tags = tags[1:]
    return RegularComposition((1,) * len(tags), tuple(tags))


def tagged_ones_to_single_color(reg):
    if any(p != 1 for p in reg.parts) or (reg.parts and reg.tags is None):
        raise DomainError("tagged-ones", f"{reg} is not a sequence of tagged 1s")
    sizes = [1]
    for t in reg.tags or ():
        if t == 2:
            sizes.append(1)
        else:
            sizes[-1] += 1
    return _colored((s, 1) for s in sizes)


# -- two colors --------------------------------------------------------------


def two_colors_to_typed(comp, b, c):
    """Erase colors; tag 2 marks parts that had color c."""
    _require(comp, AllowedSet([b, c]), f"allow={b},{c}")
    return RegularComposition(
        tuple(p.size for p in comp.parts),
        tuple(2 if p.color == c else 1 for p in comp.parts),
    )


def typed_to_two_colors(reg, b, c):
    tags = reg.tags if reg.tags is not None else (1,) * len(reg)
    out = []
    for p, t in zip(reg.parts, tags):
        if p < b:
            raise DomainError("parts>=b", f"{reg} has a part smaller than {b}")
        if t == 2 and p < c:
            raise DomainError("typed-parts>=c", f"part {p} is too small to carry the second type")
        out.append((p, c if t == 2 else b))
    return _colored(out)


def two_colors_to_mixed(comp, b, c):
    """b- or c-block -> part b or c, tail squares -> 1s.

    With b = 1 a 1-block is indistinguishable from a tail square, so the
    image is tagged: tag 2 on a part 1 marks a 1-block.
    """
    _require(comp, AllowedSet([b, c]), f"allow={b},{c}")
    parts = _blocks_and_tails(comp)
    if b != 1:
        return RegularComposition(tuple(parts))
    tags = []
    for p in comp.parts:
        tags.append(2 if p.color == 1 else 1)
        tags.extend([1] * p.tail)
    return RegularComposition(tuple(parts), tuple(tags))


def mixed_to_two_colors(reg, b, c):
    parts = reg.parts
    if b == 1:
        if parts and reg.tags is None:
            raise DomainError("tagged-ones", "with b = 1 the parts 1 must be tagged")
        tags = reg.tags or ()
        if any(p not in (1, c) or (t == 2 and p != 1) for p, t in zip(parts, tags)):
            raise DomainError("parts-in-{1,b,c}", f"{reg} is not in the family")
        is_block = lambda i: parts[i] == c or tags[i] == 2  # noqa: E731
    else:
        if any(p not in (1, b, c) for p in parts):
            raise DomainError("parts-in-{1,b,c}", f"{reg} has a part outside 1, {b}, {c}")
        is_block = lambda i: parts[i] != 1  # noqa: E731
    if parts and not is_block(0):
        raise DomainError("first-part-b-or-c", f"{reg} does not start with a block")
    return _merge_tails(parts, is_block)


# -- colors 1..d prohibited --------------------------------------------------


def prohibit_prefix_to_regular(comp, d):
    """Colored composition of n + d without colors 1..d -> regular composition of n.

    Drop the first d (empty) squares, turn blocks and tail squares into
    parts, then split any part j with residue d+1..2d (mod 2d) into j-d, d.
    The split is skipped for d = 1, where the target is every composition.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    _require(comp, ProhibitedSet(range(1, d + 1)), f"forbid=1..{d}")
    if not comp.parts:
        raise DomainError("n>=1", "the empty composition is not a composition of n + d")
    first = comp.parts[0]
    shortened = [ColoredPart(first.size - d, first.color - d), *comp.parts[1:]]
    out = []
    for p in shortened:
        out.append(p.color)
        out.extend([1] * p.tail)
    if d > 1:
        split = []
        for j in out:
            if (j - 1) % (2 * d) + 1 >= d + 1:
                split.extend([j - d, d])
            else:
                split.append(j)
        out = split
    return RegularComposition(tuple(out))


def regular_to_prohibit_prefix(reg, d):
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    parts = list(reg.parts)
    if not parts:
        raise DomainError("n>=1", "the empty composition has no preimage")
    if not in_low_residue_family(parts, d):
        raise DomainError("mod-2d-family", f"{reg} is not in the d={d} family")
    if d > 1:
        merged = []
        i = len(parts) - 1
        while i >= 0:
            if parts[i] == d and i > 0:
                merged.append(parts[i - 1] + d)
                i -= 2
            else:
                merged.append(parts[i])
                i -= 1
        parts = merged[::-1]
    parts[0] += d
    return _merge_tails(parts, lambda i: i == 0 or parts[i] != 1)


# -- color 2 prohibited: marked rectangles -----------------------------------


@dataclass(frozen=True)
class MarkedRectangle:
    """A 1 x length strip with 3k marked squares (1-based positions)."""

    length: int
    marks: tuple[int, ...] = ()

    def __post_init__(self):
        marks = tuple(int(m) for m in self.marks)
        object.__setattr__(self, "marks", marks)
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if len(marks) % 3:
            raise ValueError(f"number of marks must be divisible by 3, got {len(marks)}")
        if any(a >= b for a, b in zip(marks, marks[1:])):
            raise ValueError("marks must be strictly ascending")
        if marks and not (1 <= marks[0] and marks[-1] <= self.length):
            raise ValueError(f"marks must lie in 1..{self.length}")

    @property
    def k(self):
        return len(self.marks) // 3

    def __str__(self):
        return f"{self.length}:" + ",".join(str(m) for m in self.marks)

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*(\d+)\s*:\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)", text)
        if not m:
            raise ParseError(f"expected LENGTH:M1,M2,..., got {text!r}", 0)
        marks = [int(x) for x in m[2].split(",")] if m[2].strip() else []
        try:
            return cls(int(m[1]), tuple(marks))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


def rectangle_to_no_color2(rect):
    """Each mark triple (a, s, z) spans one tile with the spot on s; drop a
    when s = a + 1 (the tile then has color 1), otherwise drop z.
    Unmarked squares outside every triple become 1_1."""
    pairs = []
    pos = 1
    ms = rect.marks
    for t in range(rect.k):
        a, s, z = ms[3 * t : 3 * t + 3]
        pairs.extend([(1, 1)] * (a - pos))
        color = s - a + 1
        pairs.append((z - a, 1 if color == 2 else color))
        pos = z + 1
    pairs.extend([(1, 1)] * (rect.length - pos + 1))
    return _colored(pairs)


def no_color2_to_rectangle(comp):
    _require(comp, ProhibitedSet([2]), "forbid=2")
    marks = []
    pos = 1
    for p in comp.parts:
        if p.size == 1:
            pos += 1
            continue
        size = p.size + 1
        spot = 2 if p.color == 1 else p.color
        marks.extend([pos, pos + spot - 1, pos + size - 1])
        pos += size
    return MarkedRectangle(pos - 1, tuple(marks))


# -- color 2 prohibited: parts 2 mod 3 ---------------------------------------


@dataclass(frozen=True)
class OpenPart:
    value: int
    left_open: bool = False
    right_open: bool = False

    def __str__(self):
        return ("·" if self.left_open else "") + str(self.value) + ("·" if self.right_open else "")


def no_color2_to_open_word(comp):
    """Tripled parts as open/closed pieces, before merging."""
    _require(comp, ProhibitedSet([2]), "forbid=2")
    word = []
    for p in comp.parts:
        if p.size == 1:
            word.append(OpenPart(3, True, True))
        elif p.color == 1:
            word += [OpenPart(2, left_open=True), OpenPart(2), OpenPart(3 * p.size - 4)]
        else:
            word += [
                OpenPart(2, left_open=True),
                OpenPart(3 * p.color - 4),
                OpenPart(3 * p.size - 3 * p.color + 2),
            ]
    word.append(OpenPart(2, left_open=True))
    return tuple(word)


def merge_open_word(word):
    """Join each right-open piece with a left-open successor."""
    merged = []
    joinable = False
    for piece in word:
        if merged and joinable and piece.left_open:
            merged[-1] += piece.value
        else:
            merged.append(piece.value)
        joinable = piece.right_open
    return tuple(merged)


def no_color2_to_mod3(comp):
    return RegularComposition(merge_open_word(no_color2_to_open_word(comp)))


def mod3_to_no_color2(reg):
    parts = reg.parts
    if any(p % 3 != 2 for p in parts):
        raise DomainError("parts-2-mod-3", f"{reg} has a part not congruent to 2 mod 3")
    if len(parts) % 3 != 1:
        raise DomainError("3m+1-parts", f"{reg} has {len(parts)} parts, not 1 mod 3")
    pairs = []
    groups = len(parts) // 3
    for g in range(groups + 1):
        pairs.extend([(1, 1)] * ((parts[3 * g] - 2) // 3))
        if g == groups:
            break
        x, y = parts[3 * g + 1], parts[3 * g + 2]
        size = (2 + x + y) // 3
        pairs.append((size, 1 if x == 2 else (x + 4) // 3))
    return _colored(pairs)


# -- single modular class: binary strings ------------------------------------


def _check_mi(m, i):
    if not (m >= 2 and 2 <= i <= m):
        raise DomainError("2<=i<=m", f"need m >= 2 and 2 <= i <= m, got m={m}, i={i}")


def modular_to_binary(comp, m, i):
    """Pre-spot squares -> 1, spot and tail -> 0, then drop the final 0."""
    _check_mi(m, i)
    _require(comp, Modular(m, [i]), f"mod={m}:{i}")
    if comp.n == 0:
        raise DomainError("n>=1", "the empty composition has no binary image")
    bits = "".join("1" * (p.color - 1) + "0" * (p.tail + 1) for p in comp.parts)
    return bits[:-1]


_RUN_RE = re.compile(r"(1+)(0+)")


def binary_to_modular(bits, m, i):
    _check_mi(m, i)
    if not is_run_string(bits, m, i):
        raise DomainError("run-lengths", f"{bits!r} does not start with 1 or has a run of 1s not {i - 1} mod {m}")
    padded = bits + "0"
    return _colored((len(ones) + len(zeros), len(ones) + 1) for ones, zeros in _RUN_RE.findall(padded))


# -- odd colors vs no part 1_1 -----------------------------------------------


def no_one_one_to_odd(comp, n):
    """B(n) or B(n-1) -> A(n), with the source identified by comp.n.

    A member of B(n-1) first gets a trailing 1_1; then every even-colored
    part k_{2c} becomes 1_1, (k-1)_{2c-1}.
    """
    _require(comp, NoPartOneOne(), "no11")
    if comp.n == n - 1:
        parts = [*comp.parts, ONE_ONE]
    elif comp.n == n:
        parts = list(comp.parts)
    else:
        raise DomainError("source-size", f"{comp} sums to {comp.n}, expected {n} or {n - 1}")
    out = []
    for p in parts:
        if p.color % 2 == 0:
            out += [ONE_ONE, ColoredPart(p.size - 1, p.color - 1)]
        else:
            out.append(p)
    return ColoredComposition(tuple(out))


def odd_to_no_one_one(comp):
    """Returns ``(source, flag)`` where flag is comp.n or comp.n - 1."""
    _require(comp, Modular(2, [1]), "odd-colors")
    out = []
    parts = comp.parts
    flag = comp.n
    i = 0
    while i < len(parts):
        p = parts[i]
        if p == ONE_ONE and i + 1 < len(parts):
            q = parts[i + 1]
            out.append(ColoredPart(q.size + 1, q.color + 1))
            i += 2
        elif p == ONE_ONE:
            flag -= 1
            i += 1
        else:
            out.append(p)
            i += 1
    return ColoredComposition(tuple(out)), flag
