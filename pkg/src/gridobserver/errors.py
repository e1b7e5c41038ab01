"""Exception types shared across the package."""


class GridWorldError(Exception):
    """Base class for all library errors."""


class InvariantError(GridWorldError):
    """A domain-type invariant was violated at construction time."""


class ParseError(GridWorldError):
    """Scenario text could not be parsed; carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class JunctionError(GridWorldError):
    """Prefix and completion do not meet at a shared state."""


class NoPlanError(GridWorldError):
    """The model's goal is unreachable from the scenario start."""


class ExplosionError(GridWorldError):
    """Enumeration exceeded its node budget; results would be truncated."""


class EmptyUniverseError(GridWorldError):
    """A likelihood was requested for a model with no feasible behavior."""


class ZeroEvidenceError(GridWorldError):
    """The observed prefix has zero probability under every hypothesis."""


class InvalidActionError(GridWorldError):
    """Extending the prefix by this action breaks the movement rules."""


class FixtureError(GridWorldError):
    """A packaged scenario fixture is missing or unreadable."""
