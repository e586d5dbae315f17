"""Verification reports and the serialized tiling document."""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class CheckResult(BaseModel):
    """A single named check."""
    name: str
    passed: bool
    worst_residual: float = 0.0
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


class VerificationReport(BaseModel):
    """Named checks; passes iff every check passes."""
    checks: List[CheckResult] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, worst_residual: float = 0.0, detail: str = "") -> CheckResult:
        check = CheckResult(name=name, passed=bool(passed), worst_residual=float(worst_residual), detail=detail)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)
        return self

    def check(self, name: str) -> Optional[CheckResult]:
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": [c.model_dump() for c in self.checks],
            "notes": list(self.notes),
        }


class TilingDocument(BaseModel):
    """The JSON form of a tiling.

    ``template`` keeps angles as "p/q pi" strings when exact; ``complex`` is a
    list of tiles, each a list of ``[vertex, angle label, edge label]``.
    """
    schema_version: int = SCHEMA_VERSION
    family: str
    params: Dict[str, Any] = Field(default_factory=dict)
    template: Dict[str, Any]
    complex: List[List[List[Any]]]
    mirrored: List[bool] = Field(default_factory=list)
    coords: Optional[List[List[float]]] = None
    provenance: Dict[str, Any] = Field(default_factory=dict)

    def normalize(self) -> str:
        """Canonical JSON: sorted keys, no extra whitespace, trailing newline."""
        return json.dumps(self.model_dump(), sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "TilingDocument":
        return cls.model_validate(json.loads(text))
