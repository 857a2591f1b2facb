"""Result record shared by all verification checks."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    instance: tuple
    passed: bool
    mode: str = "exact"
    checked: int = 0
    witness: dict | None = None
    detail: str = ""
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.check_id,
            "instance": list(self.instance),
            "passed": self.passed,
            "mode": self.mode,
            "checked": self.checked,
            "witness": self.witness,
            "detail": self.detail,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        inst = ",".join(str(v) for v in self.instance)
        tail = f" witness={self.witness}" if self.witness else ""
        note = f" [{self.detail}]" if self.detail else ""
        return f"{status} {self.check_id}({inst}) mode={self.mode} checked={self.checked}{note}{tail}"
