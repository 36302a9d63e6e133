"""Law-check reports shared by the operad and Hopf checkers."""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_COUNTEREXAMPLES = 5


@dataclass
class LawReport:
    operad: str
    law: str
    arity_range: tuple[int, int]
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    failures: int = 0

    @property
    def status(self) -> str:
        return "pass" if self.failures == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, inputs, lhs, rhs) -> None:
        """Count one instance; keep the first few failures term by term."""
        self.checked += 1
        if ok:
            return
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append({"inputs": inputs, "lhs": str(lhs), "rhs": str(rhs)})

    def to_json(self) -> dict:
        return {
            "operad": self.operad,
            "law": self.law,
            "arity_range": list(self.arity_range),
            "status": self.status,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
        }
