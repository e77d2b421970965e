"""Exception hierarchy shared by all cellkit modules.

Exit-code mapping used by the CLI: GuardExceeded -> 1, invalid input -> 2,
GoldenMismatch -> 3, IntegrityError -> 4.
"""


class CellkitError(Exception):
    """Base class for all cellkit errors."""


class GuardExceeded(CellkitError):
    """A resource guard (size / length limit) stopped the computation."""

    def __init__(self, guard: str, value, limit):
        self.guard = guard
        self.value = value
        self.limit = limit
        super().__init__(f"guard '{guard}' exceeded: {value} > {limit}")


class InvalidInput(CellkitError):
    """Malformed user input (unknown label, bad word, bad JSON...)."""


class IntegrityError(CellkitError):
    """An internal invariant failed.  Always a bug, never a user error."""


class GoldenMismatch(CellkitError):
    """Computed table differs from golden reference data."""
