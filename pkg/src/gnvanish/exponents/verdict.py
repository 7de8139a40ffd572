"""Admissibility verdicts with a per-condition trace."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction


class Status(enum.Enum):
    STRONG = "Strong"
    WEAK_TYPE_ONLY = "WeakTypeOnly"
    FAILS = "Fails"
    OUT_OF_SCOPE = "OutOfScope"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Condition:
    cond_id: str
    satisfied: bool
    text: str


@dataclass
class Verdict:
    status: Status
    reasons: list[Condition] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status is Status.STRONG and any(not c.satisfied for c in self.reasons):
            raise ValueError("Strong verdict with an unsatisfied condition in the trace")
        if self.status is Status.FAILS and not self.reasons:
            raise ValueError("Fails verdict must list at least one condition")

    @property
    def ok(self) -> bool:
        return self.status is Status.STRONG

    def violated(self) -> list[Condition]:
        return [c for c in self.reasons if not c.satisfied]

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "reasons": [
                {"id": c.cond_id, "satisfied": c.satisfied, "text": c.text}
                for c in self.reasons
            ],
            "extras": {k: _jsonify(v) for k, v in self.extras.items()},
        }


def _jsonify(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonify(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonify(x) for k, x in v.items()}
    return v


class Trace:
    """Collects conditions while a checker runs; returns each truth value."""

    def __init__(self) -> None:
        self.conditions: list[Condition] = []

    def check(self, cond_id: str, satisfied: bool, text: str) -> bool:
        self.conditions.append(Condition(cond_id, bool(satisfied), text))
        return bool(satisfied)

    @property
    def all_ok(self) -> bool:
        return all(c.satisfied for c in self.conditions)

    def verdict(self, extras: dict | None = None) -> Verdict:
        status = Status.STRONG if self.all_ok else Status.FAILS
        return Verdict(status, self.conditions, extras or {})

    def fails(self, extras: dict | None = None) -> Verdict:
        return Verdict(Status.FAILS, self.conditions, extras or {})

    def weak(self, extras: dict | None = None) -> Verdict:
        return Verdict(Status.WEAK_TYPE_ONLY, self.conditions, extras or {})

    def out_of_scope(self, why: str, extras: dict | None = None) -> Verdict:
        self.conditions.append(Condition("scope", False, why))
        return Verdict(Status.OUT_OF_SCOPE, self.conditions, extras or {})
