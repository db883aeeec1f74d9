"""JSON/text reports emitted by the command line tool.

Numbers are always rendered as exact decimal or ``p/q`` strings; only the
floating angle checks carry a ``precision`` (significant digits) field.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .arith import fmt

EXIT_OK, EXIT_USAGE, EXIT_IDENTITY = 0, 1, 2


def _s(v) -> Optional[str]:
    if v is None:
        return None
    if isinstance(v, bool):
        return "true" if v else "false"
    return fmt(v)


@dataclass
class Check:
    name: str
    ref: str
    expected: Optional[str]
    actual: Optional[str]
    passed: bool
    precision: Optional[int] = None

    def to_dict(self) -> dict[str, Any]:
        d = {"name": self.name, "paper_ref": self.ref, "expected": self.expected,
             "actual": self.actual, "pass": self.passed}
        if self.precision is not None:
            d["precision"] = self.precision
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["name"], d["paper_ref"], d["expected"], d["actual"], d["pass"], d.get("precision"))


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    errata: list = field(default_factory=list)
    exit_code: int = EXIT_OK

    # -- building ---------------------------------------------------------------
    def equal(self, name: str, ref: str, expected, actual) -> bool:
        ok = expected == actual
        self.checks.append(Check(name, ref, _s(expected), _s(actual), ok))
        return ok

    def truth(self, name: str, ref: str, ok: bool, actual=None) -> bool:
        self.checks.append(Check(name, ref, "true", _s(actual) if actual is not None else _s(ok), bool(ok)))
        return ok

    def info(self, name: str, ref: str, actual) -> None:
        self.checks.append(Check(name, ref, None, _s(actual) if not isinstance(actual, str) else actual, True))

    def extend(self, other: "Report", prefix: str) -> None:
        for c in other.checks:
            self.checks.append(Check(f"{prefix}.{c.name}", c.ref, c.expected, c.actual, c.passed, c.precision))
        seen = {e.split(": ", 1)[-1] for e in self.errata}
        for e in other.errata:
            if e not in seen:  # shared notes are listed once
                self.errata.append(f"{prefix}: {e}")
                seen.add(e)

    def finish(self) -> "Report":
        if self.exit_code == EXIT_OK and not all(c.passed for c in self.checks):
            self.exit_code = EXIT_IDENTITY
        return self

    # -- serialisation ------------------------------------------------------------
    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": dict(self.inputs),
            "checks": [c.to_dict() for c in self.checks],
            "errata": list(self.errata),
            "exit_code": self.exit_code,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["command"], dict(d["inputs"]), [Check.from_dict(c) for c in d["checks"]],
                   list(d["errata"]), d["exit_code"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        for k, v in self.inputs.items():
            lines.append(f"  {k} = {v}")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            if c.expected is None:
                status = "INFO"
            body = f"{c.actual}" if c.expected is None else f"expected={c.expected} actual={c.actual}"
            prec = f" (precision={c.precision})" if c.precision is not None else ""
            lines.append(f"{status} {c.name} [{c.ref}]: {body}{prec}")
        for e in self.errata:
            lines.append(f"ERRATUM {e}")
        lines.append(f"exit_code = {self.exit_code}")
        return "\n".join(lines)
