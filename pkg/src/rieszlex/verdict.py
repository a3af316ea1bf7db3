from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .groups import Descriptor, SearchBudget


class Status(str, Enum):
    HOLDS = "Holds"
    HOLDS_SAMPLED = "HoldsSampled"
    FAILS = "Fails"
    UNKNOWN = "Unknown"
    FOUND = "Found"
    NOT_FOUND_EXHAUSTIVE = "NotFoundExhaustive"
    NOT_FOUND_WITHIN_BUDGET = "NotFoundWithinBudget"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check.

    ``evidence`` maps names to elements of the carrier the check ran on;
    ``bounded`` marks claims that rest on a finite search, in which case
    ``budget`` records the bound that was exhausted.
    """

    status: Status
    evidence: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None
    budget: SearchBudget | None = None
    bounded: bool = False

    @property
    def holds(self) -> bool:
        return self.status in (Status.HOLDS, Status.HOLDS_SAMPLED, Status.FOUND)

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def to_json(self, desc: Descriptor) -> dict:
        from .codec import encode_element

        out: dict[str, Any] = {
            "status": self.status.value,
            "evidence": {k: encode_element(desc, v) for k, v in self.evidence.items()},
            "bounded": self.bounded,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.budget is not None:
            out["budget"] = self.budget.to_json()
        return out
