"""Domain types for n-color compositions and their text/JSON formats.

A part of size ``k`` carries a color ``c`` with ``1 <= c <= k``; as a
spotted tile it is ``c - 1`` empty squares, the spot, then a tail of
``k - c`` empty squares.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

from .errors import InvalidPart, ParseError

SPOT = "●"
EMPTY = "·"


class ColoredPart(NamedTuple):
    size: int
    color: int

    def __str__(self):
        return f"{self.size}_{self.color}"

    @property
    def tail(self):
        """Number of empty squares after the spot."""
        return self.size - self.color


def validate(part):
    return 1 <= part.color <= part.size


@dataclass(frozen=True, order=True)
class ColoredComposition:
    """An ordered sequence of colored parts; compares lexicographically."""

    parts: tuple[ColoredPart, ...] = ()

    def __post_init__(self):
        parts = tuple(ColoredPart(int(s), int(c)) for s, c in self.parts)
        for p in parts:
            if not validate(p):
                raise InvalidPart(f"color {p.color} is outside 1..{p.size} in part {p}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *pairs):
        return cls(tuple(pairs))

    @cached_property
    def n(self):
        return sum(p.size for p in self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return format_composition(self)

    def __repr__(self):
        return f"ColoredComposition({format_composition(self)!r})"

    def to_json(self):
        return {"n": self.n, "parts": [{"size": p.size, "color": p.color} for p in self.parts]}

    @classmethod
    def from_json(cls, obj):
        comp = cls(tuple((d["size"], d["color"]) for d in obj["parts"]))
        if "n" in obj and obj["n"] != comp.n:
            raise ParseError(f"declared n={obj['n']} but parts sum to {comp.n}")
        return comp


EMPTY_COMPOSITION = ColoredComposition()


# -- color constraints -------------------------------------------------------


class ColorConstraint:
    """Which colors a part may carry. Subclasses are immutable values."""

    kind = "abstract"

    def permits(self, size, color):
        raise NotImplementedError

    @property
    def text(self):
        """Canonical form in the CLI constraint grammar."""
        raise NotImplementedError

    def __str__(self):
        return self.text


def _normalize_colors(colors, what):
    out = tuple(sorted(set(int(c) for c in colors)))
    if not out:
        raise ValueError(f"{what} color set must be nonempty")
    if out[0] < 1:
        raise ValueError(f"{what} colors must be positive, got {out[0]}")
    return out


def _join(values):
    return ",".join(str(v) for v in values)


@dataclass(frozen=True)
class Unrestricted(ColorConstraint):
    kind = "all"

    def permits(self, size, color):
        return True

    @property
    def text(self):
        return "all"


@dataclass(frozen=True)
class AllowedSet(ColorConstraint):
    colors: tuple[int, ...]
    kind = "allow"

    def __post_init__(self):
        object.__setattr__(self, "colors", _normalize_colors(self.colors, "allowed"))

    def permits(self, size, color):
        return color in self.colors

    @property
    def min_color(self):
        return self.colors[0]

    @property
    def max_color(self):
        return self.colors[-1]

    @property
    def text(self):
        return f"allow={_join(self.colors)}"


@dataclass(frozen=True)
class ProhibitedSet(ColorConstraint):
    colors: tuple[int, ...]
    kind = "forbid"

    def __post_init__(self):
        object.__setattr__(self, "colors", _normalize_colors(self.colors, "prohibited"))

    def permits(self, size, color):
        return color not in self.colors

    @property
    def min_color(self):
        return self.colors[0]

    @property
    def max_color(self):
        return self.colors[-1]

    @property
    def text(self):
        return f"forbid={_join(self.colors)}"


@dataclass(frozen=True)
class Modular(ColorConstraint):
    """Colors whose residue mod ``modulus`` lies in ``residues``.

    Residues are written 1..modulus; ``modulus`` itself stands for the
    class of multiples.
    """

    modulus: int
    residues: tuple[int, ...]
    kind = "mod"

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        res = _normalize_colors(self.residues, "residue")
        if res[-1] > self.modulus:
            raise ValueError(f"residue {res[-1]} is outside 1..{self.modulus}")
        object.__setattr__(self, "residues", res)

    def permits(self, size, color):
        return (color - 1) % self.modulus + 1 in self.residues

    @property
    def min_residue(self):
        return self.residues[0]

    @property
    def text(self):
        return f"mod={self.modulus}:{_join(self.residues)}"


@dataclass(frozen=True)
class NoPartOneOne(ColorConstraint):
    """Prohibits the single part 1_1; every other part is allowed."""

    kind = "no11"

    def permits(self, size, color):
        return not (size == 1 and color == 1)

    @property
    def text(self):
        return "no11"


_LIST = r"\d+(?:,\d+)*"
_CONSTRAINT_RE = re.compile(
    rf"^(?:(?P<all>all)|(?P<no11>no11)|allow=(?P<allow>{_LIST})|forbid=(?P<forbid>{_LIST})"
    rf"|mod=(?P<mod>\d+):(?P<res>{_LIST}))$"
)


def parse_constraint(text):
    """Parse ``all``, ``allow=LIST``, ``forbid=LIST``, ``mod=M:LIST`` or ``no11``."""
    m = _CONSTRAINT_RE.match(text.strip())
    if not m:
        raise ParseError(f"cannot parse constraint {text!r}", 0)

    def ints(s):
        return [int(x) for x in s.split(",")]

    try:
        if m["all"]:
            return Unrestricted()
        if m["no11"]:
            return NoPartOneOne()
        if m["allow"]:
            return AllowedSet(ints(m["allow"]))
        if m["forbid"]:
            return ProhibitedSet(ints(m["forbid"]))
        return Modular(int(m["mod"]), ints(m["res"]))
    except ValueError as exc:
        raise ParseError(f"invalid constraint {text!r}: {exc}") from exc


def satisfies(comp, constraint):
    return all(constraint.permits(p.size, p.color) for p in comp.parts)


# -- regular compositions ----------------------------------------------------


@dataclass(frozen=True, order=True)
class RegularComposition:
    """Uncolored composition, optionally with a type tag (1 or 2) per part.

    Tags only appear in target families that need two kinds of parts;
    tag 2 prints with a trailing apostrophe.
    """

    parts: tuple[int, ...] = ()
    tags: Optional[tuple[int, ...]] = field(default=None)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"regular composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        if self.tags is not None:
            tags = tuple(int(t) for t in self.tags)
            if len(tags) != len(parts):
                raise ValueError("tags must align one-to-one with parts")
            if any(t not in (1, 2) for t in tags):
                raise ValueError(f"tags must be 1 or 2: {tags}")
            object.__setattr__(self, "tags", tags)

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return format_regular(self)

    def __repr__(self):
        return f"RegularComposition({format_regular(self)!r})"


# -- count sequences ---------------------------------------------------------


class Method(enum.Enum):
    ENUMERATE = "enum"
    RECURRENCE = "rec"
    CLOSED_FORM = "formula"


@dataclass(frozen=True)
class CountSequence:
    values: tuple[int, ...]
    method: Method
    constraint: ColorConstraint

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.values and self.values[0] != 1:
            raise ValueError(f"a(0) must be 1, got {self.values[0]}")

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


# -- text formats ------------------------------------------------------------

_TOKEN_RE = re.compile(r"[^\s,]+")
_PART_RE = re.compile(r"^(\d+)_(\d+)$")


def _strip_parens(text):
    """Return (inner text, offset of inner text) for optional ( ... )."""
    stripped = text.strip()
    if stripped.startswith("(") or stripped.endswith(")"):
        if not (stripped.startswith("(") and stripped.endswith(")")):
            raise ParseError("unbalanced parentheses", text.find("(") if "(" in text else text.find(")"))
        start = text.index("(") + 1
        return text[start : text.rindex(")")], start
    return text, 0


def parse_composition(text):
    """Parse ``"5_3 3_3 4_3"`` (or the parenthesized ``(5_3, 3_3, 4_3)``)."""
    inner, offset = _strip_parens(text)
    parts = []
    for tok in _TOKEN_RE.finditer(inner):
        m = _PART_RE.match(tok.group())
        if not m:
            raise ParseError(f"expected SIZE_COLOR, got {tok.group()!r}", offset + tok.start())
        size, color = int(m[1]), int(m[2])
        if size < 1:
            raise ParseError("part size must be positive", offset + tok.start())
        part = ColoredPart(size, color)
        if not validate(part):
            raise InvalidPart(f"color exceeds size in part {part} (at position {offset + tok.start()})")
        parts.append(part)
    return ColoredComposition(tuple(parts))


def format_composition(comp):
    return " ".join(str(p) for p in comp.parts)


def canonical(text):
    return format_composition(parse_composition(text))


_REG_TOKEN_RE = re.compile(r"^(\d+)('?)$")


def parse_regular(text, tagged=None):
    """Parse ``"3 1 1 3"``; a trailing apostrophe marks a tag-2 part.

    ``tagged=None`` keeps tags only when an apostrophe occurs; ``True``
    always attaches tags and ``False`` rejects apostrophes.
    """
    inner, offset = _strip_parens(text)
    parts, tags = [], []
    for tok in _TOKEN_RE.finditer(inner):
        m = _REG_TOKEN_RE.match(tok.group())
        if not m or int(m[1]) < 1:
            raise ParseError(f"expected a positive integer, got {tok.group()!r}", offset + tok.start())
        if m[2] and tagged is False:
            raise ParseError("this family has no tagged parts", offset + tok.start())
        parts.append(int(m[1]))
        tags.append(2 if m[2] else 1)
    if tagged or (tagged is None and 2 in tags):
        return RegularComposition(tuple(parts), tuple(tags))
    return RegularComposition(tuple(parts))


def format_regular(comp):
    if comp.tags is None:
        return " ".join(str(p) for p in comp.parts)
    return " ".join(f"{p}'" if t == 2 else str(p) for p, t in zip(comp.parts, comp.tags))


def render_tiling(comp):
    """One-line spotted tiling, e.g. ``(2_1, 1_1)`` -> ``|●·|●|``."""
    tiles = (EMPTY * (p.color - 1) + SPOT + EMPTY * (p.size - p.color) for p in comp.parts)
    return "|" + "|".join(tiles) + "|"

