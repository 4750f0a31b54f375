"""Exception hierarchy shared by the library and the CLI."""


class NColorError(Exception):
    """Base class for every error raised by this package."""


class ParseError(NColorError, ValueError):
    """Malformed composition, constraint or bit-string text."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvalidPart(NColorError, ValueError):
    """A colored part whose color is outside 1..size."""


class CapExceeded(NColorError, RuntimeError):
    """Enumeration was asked for an n above the configured cap."""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(
            f"n={n} exceeds the enumeration cap {cap}; "
            "use the recurrence or closed-form method instead"
        )


class DomainError(NColorError, ValueError):
    """Input lies outside the domain of a bijection or formula.

    ``predicate`` names the membership test that failed so callers
    (the CLI in particular) can report it.
    """

    def __init__(self, predicate, message):
        self.predicate = predicate
        super().__init__(f"{predicate}: {message}")


class NoClosedForm(NColorError, ValueError):
    """The requested constraint has no direct counting formula."""
