"""Counterexample search in canonical order.

The module stream is a filtered view of one fixed sequence, so enlarging the
bounds can only add candidates: a hit found under small bounds is still
present under larger ones, and the first hit can only move earlier.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnknownGoal
from ..predicates import classify
from .env import env
from .instances import Bounds, generate_modules, instance_for


def _py(x):
    if isinstance(x, tuple):
        return [_py(v) for v in x]
    return x


def _wcp_not_wp(M):
    for N in M.submodules:
        if N.is_whole:
            continue
        r = classify(N)
        if r.weakly_classical_prime and not r.weakly_prime:
            yield N, {"weakly_prime": _py(r.witnesses["weakly_prime"])}


def _wcp_not_cp(M):
    for N in M.submodules:
        if N.is_whole:
            continue
        r = classify(N)
        if r.weakly_classical_prime and not r.classical_prime:
            yield N, {"classical_prime": _py(r.witnesses["classical_prime"])}


def _prod3_converse(M):
    splits = env(M).splits
    if not splits:
        return
    for N in M.submodules:
        if N.is_whole:
            continue
        for q, sp in enumerate(splits, start=1):
            N1, N2, is_prod = sp.components(N)
            if not is_prod or N1.is_whole or N2.is_whole:
                continue
            if (classify(N1).weakly_classical_prime and classify(N2).weakly_classical_prime
                    and not classify(N).weakly_classical_prime):
                yield N, {"split_after": q, "N1": _py(N1.generators), "N2": _py(N2.generators),
                          "weakly_classical_prime": _py(classify(N).witnesses["weakly_classical_prime"])}
                break


def _product2_converse(M):
    if M.kind != "pmod" or len(M.parts) != 2:
        return
    e = env(M)
    for N in M.submodules:
        if N.is_whole:
            continue
        comps, is_prod = e.product_components(N)
        if not is_prod or any(c.is_whole for c in comps):
            continue
        if all(classify(c).weakly_prime for c in comps) and not classify(N).weakly_classical_prime:
            yield N, {"N1": _py(comps[0].generators), "N2": _py(comps[1].generators),
                      "weakly_classical_prime": _py(classify(N).witnesses["weakly_classical_prime"])}


GOALS = {
    "WCP_NOT_WP": (_wcp_not_wp, "weakly classical prime but not weakly prime"),
    "WCP_NOT_CP": (_wcp_not_cp, "weakly classical prime but not classical prime"),
    "PROD3_CONVERSE": (_prod3_converse, "N1 x N2 with wcp components that is not wcp"),
    "PRODUCT2_CONVERSE": (_product2_converse, "over R1 x R2, weakly prime components but N not wcp"),
}


@dataclass(frozen=True)
class SearchResult:
    """First hit for ``goal``; ``instance`` is None when the bounds were exhausted."""

    goal: str
    instance: object
    witness: object
    modules_searched: int
    bounds: Bounds

    @property
    def found(self):
        return self.instance is not None

    def to_dict(self):
        return {"bounds": self.bounds.to_dict(), "found": self.found, "goal": self.goal,
                "instance": None if self.instance is None else self.instance.to_text(),
                "modules_searched": self.modules_searched, "status": "Found" if self.found else "NotFound",
                "witness": self.witness}


def search_counterexample(goal, bounds=None):
    """First instance, in canonical order, exhibiting ``goal`` (or a NotFound result)."""
    if goal not in GOALS:
        raise UnknownGoal(f"unknown goal {goal!r}; known goals: {', '.join(GOALS)}")
    b = bounds or Bounds()
    scan = GOALS[goal][0]
    searched = 0
    for M in generate_modules(b):
        searched += 1
        for N, witness in scan(M):
            return SearchResult(goal, instance_for(N), witness, searched, b)
    return SearchResult(goal, None, None, searched, b)


__all__ = ["GOALS", "SearchResult", "search_counterexample"]
