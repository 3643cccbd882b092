"""Structured results of a verification suite."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class Check:
    name: str
    expected: int | str
    provenance: str
    actual: int | str
    status: str = field(init=False)

    def __post_init__(self) -> None:
        self.status = "pass" if self.expected == self.actual else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    suite: str
    checks: list[Check]
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [asdict(c) for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        checks = []
        for c in data["checks"]:
            check = Check(c["name"], c["expected"], c["provenance"], c["actual"])
            if check.status != c["status"]:
                raise ValueError(f"status of check {c['name']!r} disagrees with its values")
            checks.append(check)
        return cls(data["suite"], checks, int(data["elapsed_ms"]))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def format(self) -> str:
        lines = [f"== {self.suite} ({self.elapsed_ms} ms)"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}: expected {c.expected}, got {c.actual}  ({c.provenance})")
        n_ok = sum(c.passed for c in self.checks)
        lines.append(f"  {n_ok}/{len(self.checks)} checks passed")
        return "\n".join(lines)
