"""Verification report types shared by the checks and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
REFERENCE_UNCERTAIN = "reference-uncertain"

STATUSES = (PASS, FAIL, NOT_APPLICABLE, REFERENCE_UNCERTAIN)


@dataclass
class CaseResult:
    input: Any
    status: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {"input": self.input, "status": self.status, "details": self.details}


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    wall_time: float | None = None

    def add(self, case: CaseResult) -> None:
        self.cases.append(case)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cases)

    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.cases:
            counts[c.status] += 1
        return counts

    def to_json(self, include_time: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "pass": self.passed,
            "summary": self.summary(),
            "cases": [c.to_json() for c in self.cases],
        }
        if include_time and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, include_time: bool = False) -> str:
        return json.dumps(self.to_json(include_time), indent=2, sort_keys=False) + "\n"

    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.ok]
