"""Structured pass/fail records shared by the verifiers and the CLI."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class VerificationReport:
    check: str
    instance: dict
    status: str
    witness: dict | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self, timings: bool = True) -> str:
        data = asdict(self)
        if not timings:
            data["elapsed_ms"] = 0
        else:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return json.dumps(data, sort_keys=True, default=str)


def run_check(check: str, instance: dict, fn: Callable[[], tuple[bool, dict | None]]) -> VerificationReport:
    """Time ``fn``; it returns (ok, witness). Exceptions become failures."""
    start = time.perf_counter()
    try:
        ok, witness = fn()
        if ok:
            status = PASS
        else:
            status = FAIL
            witness = witness or {"reason": "check returned false"}
    except Exception as err:  # a crash inside a check is a failed check
        status = FAIL
        witness = {"error": f"{type(err).__name__}: {err}"}
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationReport(check, instance, status, witness if status == FAIL else None, elapsed)


def equal_or_witness(lhs, rhs, labels=("lhs", "rhs")) -> tuple[bool, dict | None]:
    if lhs == rhs:
        return True, None
    return False, {labels[0]: str(lhs), labels[1]: str(rhs)}


def all_ok(reports) -> bool:
    return all(r.ok for r in reports)
