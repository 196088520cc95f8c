"""
Run reports
===========
Every CLI command records its checks in a RunReport. The report renders as a
text table or as JSON that validates against report_schema.json.
"""

import json
import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional

import jsonschema
import pandas as pd

from config import REPORT_SCHEMA_PATH
from utils import LimitExceededError, TimingUtils

logger = logging.getLogger(__name__)


class CheckStatus(Enum):
    """Check status enumeration."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    EXPECTED_FAIL = "expected-fail"


@dataclass
class CheckResult:
    """Outcome of one named check."""
    name: str
    status: CheckStatus
    measured: Dict[str, Any] = field(default_factory=dict)
    expected: Optional[Any] = None
    detail: Optional[str] = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status is not CheckStatus.FAIL

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        result = {
            'name': self.name,
            'status': self.status.value,
            'measured': {k: _jsonable(v) for k, v in self.measured.items()},
            'expected': _jsonable(self.expected),
            'detail': self.detail,
        }
        if timing:
            result['elapsed'] = round(self.elapsed, 6)
        return result


def _jsonable(value):
    # Orders overflow JSON doubles; big integers travel as decimal strings.
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value if abs(value) < 2 ** 53 else str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


class CheckContext:
    """Handle yielded by RunReport.check; the body fills in the outcome."""

    def __init__(self, name: str, expected=None):
        self.name = name
        self.expected = expected
        self.measured: Dict[str, Any] = {}
        self.status: Optional[CheckStatus] = None
        self.detail: Optional[str] = None

    def measure(self, **values):
        self.measured.update(values)

    def passed(self, detail: Optional[str] = None):
        self.status, self.detail = CheckStatus.PASS, detail

    def failed(self, detail: Optional[str] = None):
        self.status, self.detail = CheckStatus.FAIL, detail

    def expect(self, condition: bool, detail: Optional[str] = None):
        self.status = CheckStatus.PASS if condition else CheckStatus.FAIL
        self.detail = detail

    def expected_fail(self, detail: Optional[str] = None):
        self.status, self.detail = CheckStatus.EXPECTED_FAIL, detail

    def skipped(self, detail: Optional[str] = None):
        self.status, self.detail = CheckStatus.SKIPPED, detail


@dataclass
class RunReport:
    command: str
    n: Optional[int] = None
    m: Optional[int] = None
    checks: List[CheckResult] = field(default_factory=list)
    output: List[str] = field(default_factory=list)

    def add_check(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        logger.info(f"[{result.status.value}] {result.name} {result.measured}")
        return result

    @contextmanager
    def check(self, name: str, expected=None) -> Iterator[CheckContext]:
        """Time a check; a LimitExceededError inside marks it skipped."""
        context = CheckContext(name, expected)
        with TimingUtils.stopwatch() as elapsed:
            try:
                yield context
            except LimitExceededError as e:
                logger.warning(f"Check '{name}' skipped: {e}")
                context.skipped(str(e))
        if context.status is None:
            context.failed("check recorded no outcome")
        self.add_check(CheckResult(name, context.status, context.measured, context.expected,
                                   context.detail, elapsed[0]))

    def emit(self, line: str):
        """A line of command output, shown above the check table."""
        self.output.append(line)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for c in self.checks:
            counts[c.status.value] += 1
        return counts

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        return {
            'command': self.command,
            'n': self.n,
            'm': self.m,
            'output': list(self.output),
            'checks': [c.to_dict(timing) for c in self.checks],
            'summary': self.summary(),
            'passed': self.passed,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=True)

    def render_text(self, timing: bool = True) -> str:
        lines = [f"# {self.command}"] + list(self.output)
        if self.checks:
            frame = pd.DataFrame([
                {
                    'check': c.name,
                    'status': c.status.value,
                    'measured': ', '.join(f"{k}={v}" for k, v in c.measured.items()),
                    **({'seconds': f"{c.elapsed:.3f}"} if timing else {}),
                }
                for c in self.checks
            ])
            lines.append(frame.to_string(index=False))
            counts = ', '.join(f"{k} {v}" for k, v in self.summary().items() if v)
            lines.append(f"{'PASS' if self.passed else 'FAIL'} ({counts})")
        return '\n'.join(lines)


def load_schema(path: str = REPORT_SCHEMA_PATH) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as handle:
        return json.load(handle)


def validate_report(document: Dict[str, Any], schema: Optional[Dict[str, Any]] = None):
    """Raise jsonschema.ValidationError when the document breaks the report schema."""
    jsonschema.validate(instance=document, schema=schema or load_schema())
