"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input and validation problems exit 2,
resource caps exit 3, and a failed verification verdict exits 1.
"""

from __future__ import annotations


class BacklimitError(Exception):
    """Base class for all package errors."""


class MapFileError(BacklimitError):
    """Syntax error in a map file; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MapValidationError(BacklimitError):
    """A structurally parsed map violates one or more invariants."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class DomainError(BacklimitError):
    """A point argument lies outside the map's domain."""


class UnknownFixtureError(BacklimitError):
    """Requested built-in map name does not exist."""


class CapExceeded(BacklimitError):
    """A node/branch/lap budget ran out.

    ``completed`` reports how far the computation got (tree depth reached,
    largest fully-solved iterate, ...), so callers can retry with smaller
    parameters.  ``partial`` optionally carries the finished part.
    """

    def __init__(self, kind: str, limit: int, completed: int, partial=None):
        super().__init__(f"{kind} cap {limit} exceeded (completed {completed})")
        self.kind = kind
        self.limit = limit
        self.completed = completed
        self.partial = partial


class CoverFailed(BacklimitError):
    """A probe point admits no two-point radius.

    Raised by the subcover search when the neighbourhood being tested does
    not actually cover the forward limit set, so the bounded-excursion
    hypothesis is violated at that probe.
    """

    def __init__(self, probe, max_in_ball: int, reason: str):
        super().__init__(f"no two-point radius at probe {probe}: {reason}")
        self.probe = probe
        self.max_in_ball = max_in_ball
        self.reason = reason
