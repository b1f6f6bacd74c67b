"""Check results and command reports."""
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import yaml

SCHEMA_VERSION = 1
MAX_LISTED_VIOLATIONS = 20

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Violation:
    axiom: str
    location: str
    details: str = ""

    def to_dict(self) -> Dict[str, str]:
        return {"axiom": self.axiom, "location": self.location, "details": self.details}

    def __str__(self) -> str:
        return f"{self.axiom} at {self.location}" + (f": {self.details}" if self.details else "")


@dataclass
class CheckReport:
    """Outcome of one axiom suite; failures are data, never exceptions."""

    name: str
    violations: List[Violation] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)
    skipped_reason: Optional[str] = None

    def add(self, axiom: str, location: str, details: str = ""):
        self.violations.append(Violation(axiom, location, details))

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.violations.extend(other.violations)
        if other.skipped_reason and not self.skipped_reason:
            self.skipped_reason = other.skipped_reason
        return self

    def axioms(self) -> List[str]:
        return sorted({v.axiom for v in self.violations})

    @property
    def passed(self) -> bool:
        return not self.violations and self.skipped_reason is None

    @property
    def status(self) -> str:
        if self.violations:
            return FAIL
        return SKIPPED if self.skipped_reason else PASS

    @classmethod
    def skipped(cls, name: str, reason: str) -> "CheckReport":
        return cls(name, skipped_reason=reason)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "status": self.status,
            "violation_count": len(self.violations),
            "violations": [v.to_dict() for v in self.violations[:MAX_LISTED_VIOLATIONS]],
        }
        if self.stats:
            data["stats"] = _plain(self.stats)
        if self.skipped_reason:
            data["reason"] = self.skipped_reason
        return data

    def __str__(self) -> str:
        line = f"{self.name}: {self.status}"
        if self.skipped_reason:
            line += f" ({self.skipped_reason})"
        for v in self.violations[:MAX_LISTED_VIOLATIONS]:
            line += f"\n    {v}"
        if len(self.violations) > MAX_LISTED_VIOLATIONS:
            line += f"\n    ... {len(self.violations) - MAX_LISTED_VIOLATIONS} more"
        return line


def _plain(value: Any) -> Any:
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item") and callable(value.item):
        return value.item()
    return value


@dataclass
class Report:
    """Everything one command produced; overall status is the conjunction of its checks."""

    command: str
    source: str
    params: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckReport] = field(default_factory=list)
    tables: Dict[str, Any] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "source": self.source,
            "params": _plain(self.params),
            "status": PASS if self.passed else FAIL,
            "checks": [c.to_dict() for c in self.checks],
            "tables": _plain(self.tables),
            "timing": {k: round(v, 4) for k, v in self.timing.items()},
        }

    def render_text(self) -> str:
        lines = [f"{self.command} {self.source}"]
        lines.extend(f"  {k}: {_plain(v)}" for k, v in self.params.items())
        for name, table in self.tables.items():
            lines.append(f"{name}:")
            rows = table if isinstance(table, list) else [table]
            for row in rows:
                if isinstance(row, dict):
                    lines.append("  " + ", ".join(f"{k}={_plain(v)}" for k, v in row.items()))
                else:
                    lines.append(f"  {_plain(row)}")
        for check in self.checks:
            lines.append(str(check))
        lines.append(f"status: {PASS if self.passed else FAIL}")
        return "\n".join(lines) + "\n"

    def render(self, output_format: str) -> str:
        if output_format == "json":
            return json.dumps(self.to_dict(), indent=2) + "\n"
        if output_format == "yaml":
            return yaml.safe_dump(self.to_dict(), sort_keys=False)
        return self.render_text()
