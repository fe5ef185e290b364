"""Machine-readable check reports: ``{check, status, max_residual, witness?}``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    check: str
    passed: bool
    max_residual: float = 0.0
    witness: Any = None
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"check": self.check, "status": self.status, "max_residual": float(self.max_residual)}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out.update(self.details)
        return out


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.check, c.passed, c.max_residual, c.witness, c.details))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.check == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"report": self.name, "status": "pass" if self.ok else "fail",
                "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)
