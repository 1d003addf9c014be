"""Verification reports shared by the geometry, isometry and Coxeter drivers."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

from .exactnum import CycElem, RealQuad, render


def _plain(x: Any) -> Any:
    """Make witness data JSON friendly; field elements are rendered canonically."""
    if isinstance(x, CycElem):
        return render(x)
    if isinstance(x, RealQuad):
        return render(CycElem(x))
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=str) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    return str(x)


@dataclass
class Check:
    id: str
    status: str
    witness: Any = None
    anchor: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "anchor": self.anchor, "witness": _plain(self.witness)}


@dataclass
class Report:
    suite: str
    lemma: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0
    gating: bool = True  # whether a failure here blocks dependent suites
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, cid: str, ok: bool, witness: Any = None, anchor: str | None = None) -> bool:
        self.checks.append(Check(cid, "pass" if ok else "fail", witness, anchor if anchor is not None else self.lemma))
        return bool(ok)

    def skip(self, cid: str, reason: str, anchor: str | None = None) -> None:
        self.checks.append(Check(cid, "skip", reason, anchor if anchor is not None else self.lemma))

    def finish(self) -> "Report":
        self.elapsed_ms = round((time.perf_counter() - self._t0) * 1000.0, 3)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def get(self, cid: str) -> Check:
        for c in self.checks:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "lemma": self.lemma,
            "checks": [c.as_dict() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def text_lines(self) -> list[str]:
        return [f"[{c.status.upper():4}] {self.suite}/{c.id}  ({c.anchor})" for c in self.checks]


REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "lemma", "checks", "elapsed_ms"],
    "properties": {
        "suite": {"type": "string"},
        "lemma": {"type": "string"},
        "elapsed_ms": {"type": "number"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "witness"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skip"]},
                    "anchor": {"type": "string"},
                    "witness": {},
                },
            },
        },
    },
}
