"""Exception hierarchy shared by the whole engine.

Every exception carries a stable ``code`` so that callers (HTTP service,
CLI) can map engine failures to a single machine-readable error code,
plus an optional ``field`` naming the offending input.
"""

from __future__ import annotations


class StatsError(Exception):
    """Base class for all engine errors."""

    code = "error"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.message = message
        self.field = field


class DomainError(StatsError):
    """A mathematical argument is outside the operation's domain."""

    code = "domain_error"


class SingularityError(DomainError):
    """A density was evaluated exactly at a pole."""

    code = "density_singularity"


class IntervalOrderError(StatsError):
    """An interval query was given with a > b."""

    code = "interval_order"


class BracketError(StatsError):
    """Monotone inversion could not bracket the target probability."""

    code = "bracket_failure"


class InputError(StatsError):
    """User-supplied data is structurally invalid for the requested analysis."""

    code = "invalid_input"


class DegenerateDataError(InputError):
    """Data is degenerate (zero spread) where the procedure needs spread."""

    code = "degenerate_data"


class ParseError(StatsError):
    """A comma-separated numeric list failed to parse."""

    code = "parse_error"

    def __init__(self, message: str, item_index: int | None = None, field: str | None = None):
        super().__init__(message, field=field)
        self.item_index = item_index


class UnknownTagError(StatsError):
    """An unknown distribution tag or inference setting was requested."""

    code = "unknown_tag"
