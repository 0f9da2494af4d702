"""Exception types shared across the package."""

from __future__ import annotations


class BudgetExceeded(ValueError):
    """A configured search/scan bound would be exceeded.

    ``bound`` names the violated limit so callers (the CLI in particular) can
    report it.
    """

    def __init__(self, bound: str, limit: int, requested: int):
        self.bound = bound
        self.limit = limit
        self.requested = requested
        super().__init__(f"{bound}: requested {requested}, limit is {limit}")


class PrefixTooShort(ValueError):
    """Residue refinement ran out of indices before collecting enough."""

    def __init__(self, round_: int, available: int, required: int, needed_length: int):
        self.round = round_
        self.available = available
        self.required = required
        self.needed_length = needed_length
        super().__init__(
            f"refinement round {round_}: {available} indices survive, "
            f"{required} required (prefix length >= {needed_length} always suffices)"
        )


class WindowError(ValueError):
    """A query or translate falls outside a finite window."""
