"""Verification reports and their JSON/CSV serialization."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class Witness:
    n: int
    value: Any
    kind: str = "violation"


@dataclass
class VerificationReport:
    claim_id: str
    n_range: tuple[int, int]
    status: str
    details: list[Witness] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and not self.details:
            raise ValueError(f"failed claim {self.claim_id!r} carries no witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @classmethod
    def from_checks(
        cls,
        claim_id: str,
        n_range: tuple[int, int],
        violations: Iterable[Witness],
        extra: Iterable[Witness] = (),
        summary: Optional[dict[str, Any]] = None,
    ) -> "VerificationReport":
        violations = list(violations)
        return cls(
            claim_id,
            n_range,
            FAIL if violations else PASS,
            violations + list(extra),
            dict(summary or {}),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "n_range": list(self.n_range),
            "status": self.status,
            "summary": {k: _plain(v) for k, v in self.summary.items()},
            "details": [
                {"n": w.n, "kind": w.kind, "value": _plain(w.value)} for w in self.details
            ],
        }


def _plain(v: Any) -> Any:
    if isinstance(v, (bool, str, type(None))):
        return v
    if isinstance(v, int):
        # JSON numbers lose precision in many readers; big counts go out as strings
        return v if abs(v) < 2**53 else str(v)
    if isinstance(v, float):
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


CSV_FIELDS = ("claim_id", "status", "kind", "n", "value")


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    """One row per witness (violation or sample); claims without witnesses get one summary row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        if not r.details:
            writer.writerow([r.claim_id, r.status, "summary", "", json.dumps(_plain(r.summary), sort_keys=True)])
        for w in r.details:
            writer.writerow([r.claim_id, r.status, w.kind, w.n, _plain(w.value)])
    return buf.getvalue()
