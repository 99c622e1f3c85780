"""Claim reports: per-instance outcomes, aggregation, JSON and TSV rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, SKIPPED, FINDING = "pass", "fail", "skipped", "finding"

RELATIONS = {
    "==": lambda a, b: a == b,
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
    "holds": lambda a, b: a is True,
}


@dataclass
class Instance:
    """One checked case: ``computed <relation> expected``."""

    params: dict[str, Any]
    relation: str
    expected: Any
    computed: Any
    status: str
    witness: str | None = None
    reason: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out = {
            "params": self.params,
            "relation": self.relation,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def check(params: dict, relation: str, expected: Any, computed: Any,
          witness: str | None = None, conjecture: bool = False) -> Instance:
    """Build an instance and decide its status from the relation."""
    ok = RELATIONS[relation](computed, expected)
    status = PASS if ok else (FINDING if conjecture else FAIL)
    return Instance(params, relation, expected, computed, status, witness)


def holds(params: dict, ok: bool, detail: Any = None, witness: str | None = None,
          conjecture: bool = False) -> Instance:
    """Boolean check; ``detail`` (if given) is reported as the computed value."""
    status = PASS if ok else (FINDING if conjecture else FAIL)
    computed = bool(ok) if detail is None else detail
    return Instance(params, "holds", True, computed, status, witness)


def skipped(params: dict, reason: str, relation: str = "holds", expected: Any = None) -> Instance:
    return Instance(params, relation, expected, None, SKIPPED, reason=reason)


@dataclass
class ClaimReport:
    claim_id: str
    title: str
    status: str
    instances: list[Instance] = field(default_factory=list)
    conjecture: bool = False
    notes: list[str] = field(default_factory=list)
    elapsed: float | None = None

    @classmethod
    def from_instances(cls, claim_id: str, title: str, instances: list[Instance],
                       conjecture: bool = False, notes: list[str] | None = None) -> ClaimReport:
        statuses = {i.status for i in instances}
        if FAIL in statuses:
            status = FAIL
        elif instances and statuses == {SKIPPED}:
            status = SKIPPED
        else:
            status = PASS
        return cls(claim_id, title, status, instances, conjecture, list(notes or []))

    @property
    def findings(self) -> int:
        return sum(i.status == FINDING for i in self.instances)

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in (PASS, FAIL, SKIPPED, FINDING)}
        for i in self.instances:
            out[i.status] += 1
        return out

    @property
    def blocking(self) -> bool:
        """True if this report should make the run exit nonzero."""
        return self.status == FAIL and not self.conjecture

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "claim_id": self.claim_id,
            "title": self.title,
            "status": self.status,
            "conjecture": self.conjecture,
            "counts": self.counts(),
            "notes": self.notes,
            "instances": [i.to_dict() for i in self.instances],
        }
        if timing:
            out["elapsed"] = None if self.elapsed is None else round(self.elapsed, 3)
        return out


def reports_to_json(reports: list[ClaimReport], timing: bool = False) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2, sort_keys=False) + "\n"


def reports_to_tsv(reports: list[ClaimReport], timing: bool = False) -> str:
    head = ["claim_id", "status", "pass", "fail", "skipped", "finding", "conjecture"]
    if timing:
        head.append("elapsed_s")
    lines = ["\t".join(head)]
    for r in reports:
        c = r.counts()
        row = [r.claim_id, r.status, *(str(c[s]) for s in (PASS, FAIL, SKIPPED, FINDING)),
               "yes" if r.conjecture else "no"]
        if timing:
            row.append("" if r.elapsed is None else f"{r.elapsed:.3f}")
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
