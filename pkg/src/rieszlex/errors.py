"""Exception hierarchy shared by every module.

Property failures (NotDirected, NotFound, ...) are raised rather than returned
so that callers which only want a witness can use plain try/except; the
verdict-producing functions catch them and wrap the evidence.
"""

from __future__ import annotations


class RieszError(Exception):
    """Base class for all package errors."""

    code = "error"


class ShapeMismatch(RieszError, ValueError):
    code = "ShapeMismatch"


class InvalidEquation(RieszError, ValueError):
    code = "InvalidEquation"


class InvalidWitness(RieszError, ValueError):
    code = "InvalidWitness"


class NotDirected(RieszError):
    code = "NotDirected"


class NotComDirected(RieszError):
    code = "NotComDirected"


class Unsupported(RieszError):
    code = "Unsupported"


class NotApplicable(RieszError):
    code = "NotApplicable"


class NotFound(RieszError):
    """Bounded search exhausted; never a proof of nonexistence."""

    code = "NotFoundWithinBudget"

    def __init__(self, message: str, budget=None):
        super().__init__(message)
        self.budget = budget


class NoRuleApplies(RieszError):
    code = "NoRuleApplies"


class ConstructionFailed(RieszError):
    code = "ConstructionFailed"


class DensityRequired(ConstructionFailed):
    code = "DensityRequired"


class AbelianRequired(ConstructionFailed):
    code = "AbelianRequired"


class SolverFailed(ConstructionFailed):
    code = "SolverFailed"


class NcdpWitnessUnavailable(ConstructionFailed):
    code = "NcdpWitnessUnavailable"


class WrdpWitnessUnavailable(ConstructionFailed):
    code = "WrdpWitnessUnavailable"


class UnknownCase(RieszError, KeyError):
    code = "UnknownCase"


class ParseError(RieszError, ValueError):
    code = "ParseError"

    def __init__(self, offset: int, expected: list[str] | tuple[str, ...], found: str):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        exp = " or ".join(repr(e) for e in self.expected)
        super().__init__(f"at offset {offset}: expected {exp}, found {found!r}")
