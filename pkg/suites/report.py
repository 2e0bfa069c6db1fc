from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

logger = logging.getLogger(__name__)


@dataclass
class Failure:
    case: str
    expected: Any
    actual: Any

    def to_json(self) -> dict:
        return {"case": self.case, "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    """Outcome of one suite. ``elapsed`` is logged, never serialized."""

    suite: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def case(self, case_id: str) -> None:
        self.cases_run += 1
        logger.debug("%s: case %s", self.suite, case_id)

    def fail(self, case_id: str, expected: Any, actual: Any) -> None:
        logger.info("%s: case %s failed", self.suite, case_id)
        self.failures.append(Failure(case_id, expected, actual))

    def check(self, case_id: str, expected: Any, actual: Any) -> bool:
        if expected != actual:
            self.fail(case_id, expected, actual)
            return False
        return True

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "failures": [f.to_json() for f in self.failures],
            "details": self.details,
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status} ({self.cases_run} cases, {len(self.failures)} failures)"]
        for f in self.failures:
            lines.append(f"- {f.case}: expected {f.expected}, got {f.actual}")
        for key, value in self.details.items():
            lines.append(f"{key}: {value}")
        return "\n".join(lines)


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed = time.perf_counter() - start
        logger.info(
            "%s: %d cases, %d failures in %.2fs",
            report.suite, report.cases_run, len(report.failures), report.elapsed,
        )
