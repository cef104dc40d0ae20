"""Named check results shared by local-geometry verdicts, factory reports
and the service layer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    data: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @staticmethod
    def of(name: str, ok: bool, **data) -> "CheckResult":
        return CheckResult(name, PASS if ok else FAIL, data)

    @staticmethod
    def skipped(name: str, **data) -> "CheckResult":
        return CheckResult(name, SKIPPED, data)
