"""Multiplication modules, submodule products, M-radicals and nilpotency."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._sets import mask_from_bools
from .decision import Decision
from .errors import NotApplicable, NotMultiplicationModule, NotProper
from .modules import DEFAULT_BOUND, Submodule, act_span, colon_ring, module_flags
from .predicates import classify
from .rings import INTEGERS, Ideal, _divisors, ideal_arith, ideal_radical


def is_multiplication(M, bound=DEFAULT_BOUND):
    """Decision: every submodule N equals (N:_R M)M; witness is a violating N."""
    if M.is_degenerate:
        raise NotApplicable("the zero module")
    cached = M.__dict__.get("_is_multiplication")
    if cached is not None:
        return cached
    M.submodule_masks(bound)
    result = Decision(True)
    for N in M.submodules:
        if act_span(colon_ring(N, M.whole), M.whole) != N:
            result = Decision(False, N)
            break
    M.__dict__["_is_multiplication"] = result
    return result


def _require_multiplication(M):
    if M.is_degenerate or not is_multiplication(M):
        raise NotMultiplicationModule(f"{M.descriptor} is not a multiplication module")


def submodule_product(N, K):
    """NK = (N:M)(K:M)M; for an element K = m this is Km = (N:M)m."""
    M = N.module
    _require_multiplication(M)
    I = colon_ring(N, M.whole)
    if isinstance(K, Submodule):
        return act_span(ideal_arith("product", I, colon_ring(K, M.whole)), M.whole)
    return act_span(I, K, M)


def scalar_ideals(M):
    """Ideals of the scalar ring relevant to M.

    For integer scalars every ideal dZ acts like gcd(d, e)Z, so the divisors of
    the exponent e give every distinct behaviour.
    """
    if M.ring.is_finite:
        return list(M.ring.ideals)
    return [Ideal(INTEGERS, d=d) for d in _divisors(M.exponent)]


def presentation_independence_check(N, K):
    """Every presentation N = I1 M, K = I2 M yields the same I1 I2 M."""
    M = N.module
    _require_multiplication(M)
    whole = M.whole
    spans = {I: act_span(I, whole) for I in scalar_ideals(M)}
    pres_n = [I for I, S in spans.items() if S == N]
    pres_k = [I for I, S in spans.items() if S == K]
    products = {act_span(ideal_arith("product", I1, I2), whole) for I1 in pres_n for I2 in pres_k}
    return len(products) == 1


@dataclass(frozen=True)
class MRadicalResult:
    submodule: Submodule
    witness_primes: tuple
    is_whole_module: bool


def m_radical(N, bound=DEFAULT_BOUND):
    """Intersection of all prime submodules containing N (M if there are none)."""
    M = N.module
    if N.is_whole:
        raise NotProper("M-rad is defined for proper submodules")
    if M.is_degenerate:
        raise NotApplicable("the zero module")
    M.submodule_masks(bound)
    primes = tuple(P for P in M.submodules
                   if not P.is_whole and N <= P and classify(P).prime)
    mask = (1 << M.size) - 1
    for P in primes:
        mask &= P.mask
    return MRadicalResult(Submodule(M, mask), primes, not primes)


def radical_formula(N):
    """sqrt((N:_R M)) M, computed on the scalar ring (or via Z_e for integers)."""
    M = N.module
    I = colon_ring(N, M.whole)
    if M.ring.is_finite:
        return act_span(ideal_radical(I), M.whole)
    red = M.reduced
    t = red.ring
    inside = np.zeros(len(t.labels), dtype=bool)
    inside[np.arange(0, M.exponent, I.d)] = True
    rad = inside[t.power_table()].any(axis=0)
    span = M.action[np.flatnonzero(rad)].ravel()
    return Submodule(M, M.span_mask(span))


def is_nilpotent_submodule(N):
    """(True, k) for the least k with (N:_R M)^k N = 0, else (False, None)."""
    M = N.module
    J = colon_ring(N, M.whole)
    cur = act_span(J, N)
    seen = set()
    k = 1
    while True:
        if cur.is_zero:
            return True, k
        if cur.mask in seen:
            return False, None
        seen.add(cur.mask)
        cur = act_span(J, cur)
        k += 1


@dataclass(frozen=True)
class NilResult:
    elements: tuple
    submodule: Submodule | None


def nil_set(M):
    """Nilpotent elements of M (those m with Rm nilpotent).

    When M is faithful the set is returned as a submodule as well; when M is
    also a multiplication module, Nil(R)M and M-rad(0) are cross-checked.
    """
    if M.is_degenerate:
        return NilResult(M.labels, M.zero)
    flags = np.zeros(M.size, dtype=bool)
    for m in range(M.size):
        cyc = Submodule(M, M.cyclic_masks[m])
        flags[m] = is_nilpotent_submodule(cyc)[0]
    elements = tuple(M.labels[i] for i in np.flatnonzero(flags))
    info = module_flags(M)
    sub = None
    if info.faithful:
        sub = Submodule(M, mask_from_bools(flags))
        if not M.is_submodule_mask(sub.mask):
            raise AssertionError("Nil(M) of a faithful module failed to be a submodule")
        if is_multiplication(M):
            nilR = ideal_radical(Ideal(M.ring, mask=1))
            if act_span(nilR, M.whole) != sub or m_radical(M.zero).submodule != sub:
                raise AssertionError("Nil(M) = Nil(R)M = M-rad(0) failed")
    return NilResult(elements, sub)
