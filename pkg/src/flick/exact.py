"""Exact integer division and check-result plumbing shared across modules.

Every identity in this package is supposed to hold in plain integers.  A
division that leaves a remainder therefore never means "round it" -- it means
a formula was transcribed wrong or an extraction index is off, and we want a
loud failure at the exact spot.
"""

from __future__ import annotations

from dataclasses import dataclass


class InexactDivisionError(ArithmeticError):
    """An integer division that must be exact left a remainder."""


def exact_div(a: int, b: int) -> int:
    """Return a // b, raising InexactDivisionError unless b divides a."""
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return q


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exhaustive identity check.

    Truthy iff the check passed; on failure `counterexample` holds the first
    offending index tuple (plus the mismatching values).
    """

    ok: bool
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        if self.ok:
            return "CheckResult(ok=True)"
        return f"CheckResult(ok=False, counterexample={self.counterexample!r})"
