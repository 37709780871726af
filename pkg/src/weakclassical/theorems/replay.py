"""Double-entry bookkeeping for harness witnesses.

A Fail or Observed-false outcome is trusted only if (a) re-running the check
on a freshly built module (no shared caches) reproduces it exactly, and (b)
the witness, where it names elements, violates the raw definition when
replayed through plain element arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..grammar import build_module
from ..modules import submodule_generate
from ..predicates import _scalar_mul, witness_violates
from .checks import THEOREMS, run_checks
from .outcome import FAIL, OBSERVED

# checks whose "triple" witness is a weakly-classical-prime violation of N itself
_TRIPLE_ON_N = {"T_COLON", "T_REL", "T_TOWER", "T_LOC", "T_FLATFREE", "T_IDEAL"}


@dataclass(frozen=True)
class ReplayResult:
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


def _tupled(x):
    return tuple(_tupled(v) for v in x) if isinstance(x, list) else x


def _fresh(instance):
    M = build_module(instance.module)
    return submodule_generate(M, instance.subs[0])


def _raw_colon_contains(N, L_gens, r):
    """r L in N, with L spanned by ``L_gens`` (checked on the whole span)."""
    M = N.module
    L = submodule_generate(M, L_gens)
    return all(M.act(r, x) in N for x in L.elements)


def _raw_checks(outcome, N):
    w = outcome.witness
    if not isinstance(w, dict):
        return None
    tid = outcome.theorem
    if tid in _TRIPLE_ON_N and w.get("triple") is not None:
        if not witness_violates(N, "weakly_classical_prime", _tupled(w["triple"])):
            return "triple does not violate weak classical primeness of N"
    if tid == "T_REL" and isinstance(w.get("implication"), list):
        cls = w["implication"][1]
        if not witness_violates(N, cls, _tupled(w["witness"])):
            return f"witness does not violate {cls}"
    if tid in ("T_MAIN", "T_MAIN2") and not w["truth"][0]:
        if not witness_violates(N, "weakly_classical_prime", _tupled(w["witnesses"]["1"])):
            return "condition (1) witness does not replay"
    if tid == "T_FAITH":
        a, b = _tupled(w["pair"])
        L = [_tupled(g) for g in w["L"]]
        ab = _scalar_mul(N.module, a, b)
        zero = N.module.labels[0]
        nonzero = any(N.module.act(ab, x) != zero for x in submodule_generate(N.module, L).elements)
        if not (nonzero and _raw_colon_contains(N, L, ab) and not _raw_colon_contains(N, L, a)
                and not _raw_colon_contains(N, L, b)):
            return "pair does not violate weak primeness of (N:L)"
    return None


def replay_outcome(outcome):
    """Re-validate a Fail or Observed-false outcome; other outcomes pass trivially."""
    if outcome.status not in (FAIL, OBSERVED) or (outcome.status == OBSERVED and outcome.truth):
        return ReplayResult(True, "nothing to replay")
    N = _fresh(outcome.instance)
    again = run_checks(THEOREMS[outcome.theorem], N)[outcome.mode]
    if (again.status, again.truth, again.witness) != (outcome.status, outcome.truth, outcome.witness):
        return ReplayResult(False, "a fresh re-run did not reproduce the outcome")
    problem = _raw_checks(outcome, N)
    if problem:
        return ReplayResult(False, problem)
    return ReplayResult(True, "reproduced")


__all__ = ["ReplayResult", "replay_outcome"]
