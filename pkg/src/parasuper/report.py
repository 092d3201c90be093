"""Per-suite verification outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

DEFAULT_WITNESS_LIMIT = 10


@dataclass
class VerificationReport:
    """Exhaustive case accounting for one relation family or check.

    ``witnesses`` keeps at most ``witness_limit`` counterexamples while
    ``failures`` always counts every failing case.  A report with zero cases
    is *vacuous*; it is never treated as evidence that a family holds.
    """

    family: str
    params: dict[str, int]
    total: int = 0
    failures: int = 0
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    witness_limit: int = DEFAULT_WITNESS_LIMIT
    vacuous_reason: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def record(self, ok: bool, witness: Callable[[], dict[str, Any]] | None = None) -> bool:
        self.total += 1
        if not ok:
            self.failures += 1
            if witness is not None and len(self.witnesses) < self.witness_limit:
                self.witnesses.append(witness())
        return ok

    @property
    def vacuous(self) -> bool:
        return self.total == 0

    @property
    def passed(self) -> bool:
        return self.total > 0 and self.failures == 0

    @property
    def failed(self) -> bool:
        return self.failures > 0

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "vacuous" if self.total == 0 else "pass"

    def merge(self, other: VerificationReport) -> None:
        self.total += other.total
        self.failures += other.failures
        room = self.witness_limit - len(self.witnesses)
        if room > 0:
            self.witnesses.extend(other.witnesses[:room])

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "suite": self.family,
            "params": dict(self.params),
            "status": self.status,
            "total": self.total,
            "failures": self.failures,
            "witnesses": list(self.witnesses),
        }
        if self.status == "vacuous":
            out["vacuous_reason"] = self.vacuous_reason or "no cases in range"
        if self.details:
            out["details"] = dict(self.details)
        return out

    def summary_line(self) -> str:
        line = f"{self.family:<20} {self.status.upper():<8} cases={self.total} failures={self.failures}"
        if self.status == "vacuous":
            line += f" ({self.vacuous_reason or 'no cases in range'})"
        return line
