"""Shared fixtures and brute-force oracles.

The oracles use only label-level arithmetic (``M.act``, ``M.add``, plain
integer modular arithmetic), never the numpy scan tables, so they check the
library independently.
"""

from __future__ import annotations

import itertools
import json
import time

import pytest

from weakclassical.theorems import Bounds, generate_modules, run_suite

SMALL = Bounds(ringmax=6, modmax=12, arity=2)


def scalars(M):
    """Scalars to quantify over: all of a finite ring, residues 0..e-1 for integers."""
    if M.ring.is_finite:
        return list(M.ring.labels)
    return list(range(M.exponent))


def smul(M, a, b):
    return M.ring.mul(a, b) if M.ring.is_finite else a * b


def brute_classes(N):
    """All six classes straight from the definitions."""
    M = N.module
    S = scalars(M)
    inN = set(N.elements)
    zero = M.labels[0]
    colon = [a for a in S if all(M.act(a, m) in inN for m in M.labels)]
    colon_set = set(colon)
    prime = wprime = cp = wcp = tabs = wtabs = True
    for a in S:
        for m in M.labels:
            am = M.act(a, m)
            if am in inN and m not in inN and a not in colon_set:
                prime = False
                if am != zero:
                    wprime = False
    for a, b in itertools.product(S, S):
        ab = smul(M, a, b)
        ab_in_colon = all(M.act(ab, m) in inN for m in M.labels)
        for m in M.labels:
            abm = M.act(a, M.act(b, m))
            if abm in inN and M.act(a, m) not in inN and M.act(b, m) not in inN:
                cp = False
                if abm != zero:
                    wcp = False
                if not ab_in_colon:
                    tabs = False
                    if abm != zero:
                        wtabs = False
    return {"prime": prime, "weakly_prime": wprime, "classical_prime": cp,
            "weakly_classical_prime": wcp, "two_absorbing": tabs, "weakly_two_absorbing": wtabs}


def brute_submodules(M):
    """All subsets closed under + and the action (feasible for |M| <= 8)."""
    labels = list(M.labels)
    S = scalars(M)
    out = []
    rest = labels[1:]
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            X = {labels[0], *combo}
            if all(M.add(x, y) in X for x in X for y in X) and all(M.act(a, x) in X for a in S for x in X):
                out.append(frozenset(X))
    return out


@pytest.fixture(scope="session")
def small_modules():
    return list(generate_modules(SMALL))


@pytest.fixture(scope="session")
def small_instances(small_modules):
    return [N for M in small_modules for N in M.submodules if not N.is_whole]


SWEEP_SECONDS = {}
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def default_report():
    """The full default-bounds sweep, computed once per session."""
    start = time.perf_counter()
    report = run_suite(Bounds())
    SWEEP_SECONDS["default"] = time.perf_counter() - start
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def dumps(x):
    return json.dumps(x, sort_keys=True)
