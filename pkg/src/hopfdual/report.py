"""Check reports shared by every verification suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable


@dataclass
class Check:
    name: str
    passed: bool
    cases: int = 0
    failures: int = 0
    witness: str | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"name": self.name, "status": "pass" if self.passed else "fail",
                             "cases": self.cases, "failures": self.failures}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.note is not None:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["name"], d["status"] == "pass", d.get("cases", 0), d.get("failures", 0),
                   d.get("witness"), d.get("note"))


@dataclass
class Report:
    suite: str
    subject: str
    checks: list[Check] = field(default_factory=list)
    derived: dict[str, Any] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, witness: str | None = None,
            note: str | None = None, cases: int = 1) -> Check:
        chk = Check(name, bool(passed), cases, 0 if passed else 1,
                    None if passed else witness, note)
        self.checks.append(chk)
        return chk

    def verify(self, name: str, cases: Iterable[tuple[bool, Any]], note: str | None = None) -> Check:
        """Record one named check over many cases.

        ``cases`` yields ``(passed, witness)`` where ``witness`` is a string or a
        zero-argument callable producing one; only the first failing witness is kept.
        """
        n = bad = 0
        witness = None
        for ok, w in cases:
            n += 1
            if not ok:
                bad += 1
                if witness is None:
                    witness = w() if callable(w) else str(w)
        chk = Check(name, bad == 0, n, bad, witness, note)
        self.checks.append(chk)
        return chk

    def extend(self, other: "Report", prefix: str | None = None) -> None:
        for c in other.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.passed, c.cases, c.failures, c.witness, c.note))
        for k, v in other.derived.items():
            self.derived[k] = v
        for k, v in other.timings.items():
            self.timings[f"{prefix}.{k}" if prefix else k] = v

    def to_dict(self, include_timings: bool = False) -> dict:
        d = {
            "format": "hopfdual-report/v1",
            "suite": self.suite,
            "subject": self.subject,
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
            "derived": self.derived,
        }
        if include_timings:
            d["timings"] = dict(sorted(self.timings.items()))
        return d

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True,
                          ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["suite"], d["subject"], [Check.from_dict(c) for c in d["checks"]],
                   d.get("derived", {}), d.get("timings", {}))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render(self, timings: bool = False) -> str:
        lines = [f"== {self.suite} :: {self.subject} :: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            status = "ok  " if c.passed else "FAIL"
            lines.append(f"  {status} {c.name} ({c.cases} cases)")
            if c.witness:
                lines.append(f"       witness: {c.witness}")
        if timings:
            lines += [f"  time {k}: {v:.3f}s" for k, v in sorted(self.timings.items())]
        return "\n".join(lines)


def first_failure(items: Iterable, pred: Callable[[Any], bool]):
    for it in items:
        if not pred(it):
            return it
    return None
