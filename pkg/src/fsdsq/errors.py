"""Exception types shared across the package.

``FindingError`` subclasses mark *mathematical* findings: situations the
analysed structure theory says cannot happen.  They must surface to the
caller (the sweep harness records them as findings, the CLI exits with
status 2) and are never silently swallowed.
"""

from __future__ import annotations


class FindingError(Exception):
    """Analysis met a configuration the structural claims rule out."""


class CounterexampleError(FindingError):
    """A double-square position violated a checked invariant."""


class ForbiddenPairError(FindingError):
    """Adjacent double squares matched an infeasible length ordering."""

    def __init__(self, message: str, *, word: str, position: int, case: int,
                 lengths: tuple[int, int, int, int]) -> None:
        super().__init__(message)
        self.word = word
        self.position = position
        self.case = case
        self.lengths = lengths


class UnclassifiablePairError(FindingError):
    """A pair of double squares fits no mate category."""


class ExtensionBudgetError(FindingError):
    """The fallback search for an unequal extension ran out of budget."""


class NoExtensionError(ValueError):
    """The requested extension does not exist for this seed."""


class FactorizationError(ValueError):
    """The two roots do not admit the canonical double-square factorization."""


class CostCeilingError(ValueError):
    """A sweep request exceeded the configured cost ceiling."""


class SweepInterrupted(Exception):
    """A sweep stopped early on request; progress is in the checkpoint."""

    def __init__(self, checkpoint_path: str, completed_blocks: int) -> None:
        super().__init__(f"sweep interrupted after {completed_blocks} blocks; "
                         f"checkpoint at {checkpoint_path}")
        self.checkpoint_path = checkpoint_path
        self.completed_blocks = completed_blocks
