"""Validation reports: per-axiom verdicts plus re-checkable witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .lattice import FuzzySet
from .values import fmt


@dataclass(frozen=True)
class Witness:
    axiom: str
    sets: tuple[FuzzySet, ...]
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "axiom": self.axiom,
            "sets": [list(s.numerators) for s in self.sets],
        }
        if self.lhs is not None:
            out["lhs"] = _wire(self.lhs)
        if self.rhs is not None:
            out["rhs"] = _wire(self.rhs)
        if self.note:
            out["note"] = self.note
        return out


def _wire(v):
    if isinstance(v, (list, tuple)):
        return [_wire(x) for x in v]
    if isinstance(v, bool):
        return v
    return fmt(v)


@dataclass
class ValidationReport:
    """Verdict per axiom id; ``witnesses`` holds at least one entry per failed axiom.

    ``notes`` carries free-form context such as the measurability criterion or
    counts of checks that were skipped because an operand was outside the domain.
    """

    subject: str
    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)
    max_witnesses: int = 5

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def __bool__(self):
        return self.passed

    def ok(self, axiom: str):
        self.verdicts.setdefault(axiom, True)

    def fail(self, axiom: str, sets, lhs=None, rhs=None, note=""):
        self.verdicts[axiom] = False
        if sum(w.axiom == axiom for w in self.witnesses) < self.max_witnesses:
            self.witnesses.append(Witness(axiom, tuple(sets), lhs, rhs, note))

    def failed_axioms(self) -> list[str]:
        return [a for a, v in self.verdicts.items() if not v]

    def witnesses_for(self, axiom: str) -> list[Witness]:
        return [w for w in self.witnesses if w.axiom == axiom]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "verdicts": dict(self.verdicts),
            "witnesses": [w.to_json() for w in self.witnesses],
            "notes": {k: _note(v) for k, v in self.notes.items()},
        }


def _note(v):
    if isinstance(v, FuzzySet):
        return list(v.numerators)
    if isinstance(v, (list, tuple)):
        return [_note(x) for x in v]
    if isinstance(v, (str, int, bool)) or v is None:
        return v
    return fmt(v)
