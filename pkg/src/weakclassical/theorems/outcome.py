"""Check outcomes and modes."""

from __future__ import annotations

from dataclasses import dataclass, field

ASSERT = "ASSERT"
OBSERVE = "OBSERVE"

PASS = "Pass"
FAIL = "Fail"
NOT_APPLICABLE = "NotApplicable"
OBSERVED = "Observed"


@dataclass(frozen=True)
class Status:
    """Result of one mode of one theorem on one instance (no bookkeeping)."""

    status: str
    truth: bool | None = None
    witness: object = None
    reason: str | None = None


def passed(ok, witness=None):
    return Status(PASS) if ok else Status(FAIL, False, witness)


def not_applicable(reason):
    return Status(NOT_APPLICABLE, reason=reason)


def observed(truth, witness=None):
    return Status(OBSERVED, bool(truth), None if truth else witness)


@dataclass(frozen=True)
class CheckOutcome:
    """Outcome of ``theorem`` in ``mode`` on ``instance``.

    ``runtime`` (seconds) is excluded from equality and from reports so that
    outcomes stay deterministic.
    """

    theorem: str
    mode: str
    status: str
    instance: object = None
    truth: bool | None = None
    witness: object = None
    reason: str | None = None
    runtime: float = field(default=0.0, compare=False)

    @property
    def failed(self):
        return self.status == FAIL

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        d = {"instance": None if self.instance is None else self.instance.to_text(),
             "mode": self.mode, "status": self.status, "theorem": self.theorem}
        if self.truth is not None:
            d["truth"] = self.truth
        if self.witness is not None:
            d["witness"] = self.witness
        if self.reason is not None:
            d["reason"] = self.reason
        return d
