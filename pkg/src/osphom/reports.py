"""Check/report containers shared by the verification suites and the CLI.

Failures of mathematical checks are report entries, never exceptions;
exceptions are reserved for malformed input and internal contract
violations.  Reports serialize to a stable JSON schema: checks are sorted
by name so byte-identical output only varies in the timestamp field.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

TOOL_VERSION = "0.1.0"


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail"
    witness: object = None
    dims: object = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def check(name, ok, witness=None, dims=None) -> Check:
    return Check(name, "pass" if ok else "fail", witness if not ok else witness, dims)


@dataclass
class Report:
    suite: str
    algebra: str = ""
    shape: object = None
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=None, dims=None) -> Check:
        c = check(name, ok, witness, dims)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.dims))

    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json_dict(self, timestamp=None) -> dict:
        return {
            "tool_version": TOOL_VERSION,
            "suite": self.suite,
            "shape": list(self.shape) if self.shape is not None else None,
            "algebra": self.algebra,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "witness": _jsonable(c.witness),
                    "dims": _jsonable(c.dims),
                }
                for c in sorted(self.checks, key=lambda c: c.name)
            ],
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
            if timestamp is None
            else timestamp,
        }

    def to_json(self, timestamp=None) -> str:
        return json.dumps(self.to_json_dict(timestamp), indent=2, sort_keys=False)


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)
