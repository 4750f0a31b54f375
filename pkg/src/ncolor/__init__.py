"""Counting, enumerating and mapping color-restricted n-color compositions."""

from .core import (
    AllowedSet,
    ColoredComposition,
    ColoredPart,
    ColorConstraint,
    CountSequence,
    Method,
    Modular,
    NoPartOneOne,
    ProhibitedSet,
    RegularComposition,
    Unrestricted,
    format_composition,
    parse_composition,
    parse_constraint,
    render_tiling,
    satisfies,
    validate,
)
from .enumeration import count_colored, enumerate_colored, enumerate_regular
from .errors import CapExceeded, DomainError, InvalidPart, NColorError, ParseError

__version__ = "0.1.0"
