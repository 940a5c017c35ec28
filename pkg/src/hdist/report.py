from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class Counterexample:
    inputs: Any
    expected: Any
    got: Any
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"inputs": _plain(self.inputs), "expected": _plain(self.expected), "got": _plain(self.got)}
        out.update({k: _plain(v) for k, v in self.detail.items()})
        return out


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a sweep. ``passed`` is derived: it holds iff no counterexample."""

    name: str
    checked: int
    counterexample: Optional[Counterexample] = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        # caller merges in enumeration order so the first counterexample wins
        extra = dict(self.extra)
        for k, v in other.extra.items():
            extra[k] = extra.get(k, 0) + v if isinstance(v, int) else v
        return VerificationReport(
            self.name,
            self.checked + other.checked,
            self.counterexample or other.counterexample,
            extra,
        )

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        parts = [f"{self.name}: {status}", f"checked={self.checked}"]
        parts += [f"{k}={v}" for k, v in sorted(self.extra.items())]
        line = " ".join(parts)
        if self.counterexample is not None:
            ce = self.counterexample
            line += f"\n  counterexample: {_plain(ce.inputs)}\n  expected: {_plain(ce.expected)}\n  got: {_plain(ce.got)}"
            for k, v in ce.detail.items():
                line += f"\n  {k}: {_plain(v)}"
        return line

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            **({"extra": dict(sorted(self.extra.items()))} if self.extra else {}),
        }


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)) and not hasattr(v, "_fields"):
        return [_plain(x) for x in v]
    return str(v)
