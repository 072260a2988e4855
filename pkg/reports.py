"""
Check and suite reports shared by every verification module.

A CheckReport is the outcome of one exhaustive or randomized check: its status,
how many cases were examined and, unless it passed, the first counterexample in
canonical enumeration order. A SuiteReport bundles the checks of one command
line suite. Both render to plain text (one line per check) and to JSON.

Durations are only written when asked for, so that two runs with the
same inputs and seeds produce byte-identical documents.
"""

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

import numpy as np

VERSION = "0.3.0"

PASS = "pass"
FAIL = "fail"
REFUTED = "refuted-as-printed"
STATUSES = (PASS, FAIL, REFUTED)


@dataclass
class CheckReport:
    name: str
    ref: str
    status: str
    cases: int = 0
    counterexample: Optional[str] = None
    details: dict = field(default_factory=dict)
    # Checks that only report a finding (not a claim this tool vouches for)
    # never turn the exit code red.
    asserted: bool = True
    duration: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status != PASS and self.counterexample is None:
            raise ValueError(f"check {self.name!r} is {self.status} without a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def acceptable(self) -> bool:
        return self.passed or not self.asserted

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "ref": self.ref,
            "status": self.status,
            "cases": self.cases,
            "counterexample": self.counterexample,
            "details": self.details,
            "asserted": self.asserted,
        }
        if timings:
            out["duration"] = round(self.duration, 6)
        return out


@dataclass
class DualCheckReport:
    """Two readings of one claim, reported side by side."""
    as_printed: CheckReport
    variant: CheckReport

    def __iter__(self):
        yield self.as_printed
        yield self.variant


@dataclass
class SuiteReport:
    suite: str
    checks: list
    seeds: dict = field(default_factory=dict)
    version: str = VERSION

    @property
    def ok(self) -> bool:
        return all(check.acceptable for check in self.checks)

    def sorted_checks(self) -> list:
        return sorted(self.checks, key=lambda check: check.name)

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "suite": self.suite,
            "version": self.version,
            "seeds": dict(sorted(self.seeds.items())),
            "ok": self.ok,
            "checks": [check.to_dict(timings) for check in self.sorted_checks()],
        }


def first_failure(mismatch) -> Optional[tuple]:
    """Index tuple of the first True entry in C order, or None."""
    hits = np.argwhere(np.asarray(mismatch))
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def verdict(name: str, ref: str, failure, cases: int, describe: Callable[[Any], str],
            refuted: bool = False, asserted: bool = True, **details) -> CheckReport:
    """Build a report from the first failing position of an exhaustive scan.

    `refuted` marks a claim whose printed form is known to be wrong; a failure
    is then reported as refuted-as-printed instead of fail.
    """
    if failure is None:
        return CheckReport(name, ref, PASS, cases, None, details, asserted)
    status = REFUTED if refuted else FAIL
    return CheckReport(name, ref, status, cases, describe(failure), details, asserted)


def merge(reports: Iterable[CheckReport]) -> list:
    """Collapse same-named reports (e.g. one per exponential base) into one each.

    Cases add up; the first non-passing report in iteration order supplies the
    status and counterexample.
    """
    merged = {}
    for report in reports:
        current = merged.get(report.name)
        if current is None:
            merged[report.name] = CheckReport(report.name, report.ref, report.status, report.cases,
                                              report.counterexample, dict(report.details),
                                              report.asserted, report.duration)
            continue
        current.cases += report.cases
        current.duration += report.duration
        if current.passed and not report.passed:
            current.status = report.status
            current.counterexample = report.counterexample
            current.details = dict(report.details)
    return list(merged.values())


def timed(fn: Callable, *args, **kwargs) -> list:
    """Run a check function and spread its wall time over the reports it returns."""
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    elapsed = time.perf_counter() - start
    reports = [result] if isinstance(result, CheckReport) else list(result)
    for report in reports:
        report.duration = elapsed / max(len(reports), 1)
    return reports


def render_text(suites: list, timings: bool = False) -> str:
    lines = []
    for suite in sorted(suites, key=lambda s: s.suite):
        seeds = ", ".join(f"{k}={v}" for k, v in sorted(suite.seeds.items()))
        header = f"== {suite.suite} (version {suite.version}"
        header += f"; seeds {seeds})" if seeds else ")"
        lines.append(header)
        for check in suite.sorted_checks():
            line = f"  [{check.status}] {check.name}  cases={check.cases}"
            if not check.asserted:
                line += "  (reported)"
            if timings:
                line += f"  {check.duration:.3f}s"
            lines.append(line)
            lines.append(f"      {check.ref}")
            if check.counterexample is not None:
                lines.append(f"      counterexample: {check.counterexample}")
        lines.append(f"  -> {'OK' if suite.ok else 'FAILED'}")
    return "\n".join(lines) + "\n"


def render_json(suites: list, timings: bool = False) -> str:
    document = {
        "version": VERSION,
        "ok": all(suite.ok for suite in suites),
        "suites": [suite.to_dict(timings) for suite in sorted(suites, key=lambda s: s.suite)],
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
