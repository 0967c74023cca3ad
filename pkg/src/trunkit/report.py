"""Machine-readable results of theorem checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of one check.

    ``holds`` is True/False for a decided check and None when the
    preconditions were not met (the check was skipped, not failed).
    """

    check: str
    holds: bool | None
    details: dict[str, Any] = field(default_factory=dict)
    counterexample: dict[str, Any] | None = None
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.holds is False

    @property
    def status(self) -> str:
        return {True: "pass", False: "fail", None: "skipped"}[self.holds]

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["status"] = self.status
        return d


def summarize(reports: list[VerificationReport]) -> dict[str, int]:
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        out[r.status] += 1
    return out
