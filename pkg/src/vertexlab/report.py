"""Verification reports shared by every check."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any

SCHEMA = "vertexlab.report/1"


@dataclass
class Report:
    check: str
    passed: bool
    params: dict = field(default_factory=dict)
    mode: str = "exact"
    witness: dict | None = None
    details: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def fail(self, **witness: Any) -> "Report":
        self.passed = False
        if self.witness is None:
            self.witness = {k: str(v) for k, v in witness.items()}
        return self

    def note(self, text: str) -> None:
        self.details.append(text)

    def merge(self, other: "Report") -> "Report":
        self.details.append(f"{other.check}: {other.status}")
        if not other.passed:
            self.passed = False
            if self.witness is None:
                self.witness = {"sub_check": other.check, **(other.witness or {})}
        return self

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        d["schema"] = SCHEMA
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)

    def __str__(self) -> str:
        s = f"[{self.status.upper()}] {self.check} {self.params}"
        if self.witness:
            s += f" witness={self.witness}"
        return s


@contextmanager
def timed(report: Report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed = round(time.perf_counter() - start, 3)


def compare_series(report: Report, left, right, label: str = "") -> bool:
    """Record the first differing coefficient of two series, if any."""
    diff = left.first_difference(right)
    if diff is None:
        return True
    key, a, b = diff
    report.fail(where=label, key=key, left=a, right=b)
    return False
