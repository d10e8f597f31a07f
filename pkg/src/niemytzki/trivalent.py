"""Three-valued (Kleene) verdicts.

The engine is sound but deliberately incomplete: True and False are claims,
Unknown is always an admissible answer.  Conjunction and disjunction follow
Kleene's strong tables, so Unknown absorbs exactly where a missing fact could
still flip the outcome.
"""

from __future__ import annotations

from enum import Enum


class Verdict(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @staticmethod
    def of(value: bool) -> "Verdict":
        return Verdict.TRUE if value else Verdict.FALSE

    def __invert__(self) -> "Verdict":
        if self is Verdict.TRUE:
            return Verdict.FALSE
        if self is Verdict.FALSE:
            return Verdict.TRUE
        return Verdict.UNKNOWN

    def __and__(self, other: "Verdict") -> "Verdict":
        if Verdict.FALSE in (self, other):
            return Verdict.FALSE
        if self is Verdict.TRUE and other is Verdict.TRUE:
            return Verdict.TRUE
        return Verdict.UNKNOWN

    def __or__(self, other: "Verdict") -> "Verdict":
        if Verdict.TRUE in (self, other):
            return Verdict.TRUE
        if self is Verdict.FALSE and other is Verdict.FALSE:
            return Verdict.FALSE
        return Verdict.UNKNOWN

    def __bool__(self):  # pragma: no cover
        raise TypeError("three-valued verdicts do not collapse to bool; compare explicitly")


TRUE = Verdict.TRUE
FALSE = Verdict.FALSE
UNKNOWN = Verdict.UNKNOWN


def all3(verdicts) -> Verdict:
    """Kleene conjunction over an iterable."""
    out = TRUE
    for v in verdicts:
        out = out & v
    return out


def any3(verdicts) -> Verdict:
    """Kleene disjunction over an iterable."""
    out = FALSE
    for v in verdicts:
        out = out | v
    return out
