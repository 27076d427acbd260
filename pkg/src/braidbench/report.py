"""Check records and reports.

A report is a list of named checks.  Each check has a stable key such as
``bialg.delta_m``, a status, and on failure a single differing matrix entry.
Timings are kept in a separate block so that the JSON body is byte-identical
across runs.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from . import __version__

__all__ = ["CheckRecord", "Report", "PASS", "FAIL", "INCONCLUSIVE", "SCHEMA_VERSION"]

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
SCHEMA_VERSION = 1


@dataclass
class CheckRecord:
    key: str
    status: str
    counterexample: dict | None = None
    detail: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {"key": self.key, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    instance: dict = field(default_factory=dict)
    records: list[CheckRecord] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    # -- building -----------------------------------------------------------
    def add(self, record: CheckRecord) -> CheckRecord:
        if any(r.key == record.key for r in self.records):
            raise ValueError(f"duplicate check key {record.key!r}")
        self.records.append(record)
        return record

    def record(self, key: str, ok: bool, counterexample=None, detail=None) -> CheckRecord:
        return self.add(CheckRecord(key, PASS if ok else FAIL, None if ok else counterexample, detail))

    def compare(self, key: str, lhs, rhs, detail=None) -> CheckRecord:
        """Record whether two morphisms are equal, keeping one differing entry."""
        if not lhs.same_type(rhs):
            ce = {"type": f"{lhs.src.degs}->{lhs.dst.degs} vs {rhs.src.degs}->{rhs.dst.degs}"}
            return self.record(key, False, ce, detail)
        diff = lhs.first_difference(rhs)
        if diff is None:
            return self.record(key, True, detail=detail)
        i, j, a, b = diff
        return self.record(key, False, {"row": i, "col": j, "lhs": str(a), "rhs": str(b)}, detail)

    @contextmanager
    def timed(self, key: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[key] = self.timings.get(key, 0.0) + time.perf_counter() - t0

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for r in other.records:
            self.add(CheckRecord(prefix + r.key, r.status, r.counterexample, r.detail))
        for k, v in other.timings.items():
            self.timings[prefix + k] = self.timings.get(prefix + k, 0.0) + v
        return self

    # -- queries ------------------------------------------------------------
    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    @property
    def status(self) -> str:
        if any(r.status == FAIL for r in self.records):
            return FAIL
        if any(r.status == INCONCLUSIVE for r in self.records):
            return INCONCLUSIVE
        return PASS

    def __getitem__(self, key: str) -> CheckRecord:
        for r in self.records:
            if r.key == key:
                return r
        raise KeyError(key)

    def __contains__(self, key: str) -> bool:
        return any(r.key == key for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def keys(self) -> list[str]:
        return [r.key for r in self.records]

    # -- output -------------------------------------------------------------
    def to_json(self, timings: bool = False) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "tool": {"name": "braidbench", "version": __version__},
            "instance": self.instance,
            "status": self.status,
            "records": [r.to_json() for r in self.records],
        }
        if self.extra:
            out["extra"] = self.extra
        if timings:
            out["timings"] = {k: round(v, 6) for k, v in sorted(self.timings.items())}
        return out

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        width = max((len(r.key) for r in self.records), default=10)
        lines = [f"braidbench {__version__}  " + " ".join(f"{k}={v}" for k, v in sorted(self.instance.items()))]
        for r in self.records:
            line = f"  {r.key:<{width}}  {r.status.upper()}"
            if r.counterexample:
                ce = r.counterexample
                if "row" in ce:
                    line += f"  at ({ce['row']},{ce['col']}): {ce['lhs']} != {ce['rhs']}"
                else:
                    line += "  " + json.dumps(ce, sort_keys=True)
            if r.detail:
                line += f"  [{r.detail}]"
            lines.append(line)
        lines.append(f"overall: {self.status.upper()}")
        return "\n".join(lines) + "\n"
