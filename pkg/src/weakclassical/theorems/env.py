"""Per-module derived objects shared by the theorem checks (quotients, splits, ...)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .._sets import mask_from_bools
from ..errors import NotApplicable
from ..modules import (
    Submodule,
    _mixed_radix,
    localize_module,
    make_inclusion,
    make_module_direct_sum,
    make_module_quotient,
    module_flags,
)
from ..multiplication import is_multiplication
from ..rings import MultiplicativeSet, is_weakly_prime_ideal

_WP_CACHE = {}


def weakly_prime(I):
    """Memoized weakly-prime test for a proper ideal."""
    key = (I.ring.descriptor, I.mask, I.d)
    hit = _WP_CACHE.get(key)
    if hit is None:
        hit = _WP_CACHE[key] = is_weakly_prime_ideal(I)
    return hit


@dataclass(frozen=True)
class Split:
    """M = left x right: ``idx_left[i]`` / ``idx_right[i]`` are the components of element i."""

    left: object
    right: object
    idx_left: np.ndarray
    idx_right: np.ndarray

    def components(self, N):
        """(N1, N2) with N1 x 0 and 0 x N2 inside N, and whether N = N1 x N2."""
        f = N.flags
        n1 = np.zeros(self.left.size, dtype=bool)
        n2 = np.zeros(self.right.size, dtype=bool)
        n1[self.idx_left[f & (self.idx_right == 0)]] = True
        n2[self.idx_right[f & (self.idx_left == 0)]] = True
        N1 = Submodule(self.left, mask_from_bools(n1))
        N2 = Submodule(self.right, mask_from_bools(n2))
        return N1, N2, N1.size * N2.size == N.size


class ModuleEnv:
    """Lazily built companions of one module, cached for the whole sweep."""

    def __init__(self, M):
        self.M = M
        self._quotients = {}
        self._inclusions = {}
        self._localizations = {}
        self._powers = {}

    @cached_property
    def flags(self):
        return module_flags(self.M)

    @cached_property
    def multiplication(self):
        try:
            return bool(is_multiplication(self.M))
        except NotApplicable:
            return False

    @cached_property
    def faithful_multiplication(self):
        return self.M.ring.is_finite and self.flags.faithful and self.multiplication

    def quotient(self, K):
        """(M/K, projection) for a submodule K."""
        hit = self._quotients.get(K.mask)
        if hit is None:
            hit = self._quotients[K.mask] = make_module_quotient(self.M, K)
        return hit

    def inclusion(self, L):
        hit = self._inclusions.get(L.mask)
        if hit is None:
            hit = self._inclusions[L.mask] = make_inclusion(L)
        return hit

    @cached_property
    def splits(self):
        """Every way to read a direct sum of >= 2 summands as left x right."""
        M = self.M
        if M.kind == "pmod" or len(M.parts) < 2:
            return []
        out = []
        for q in range(1, len(M.parts)):
            left = M.parts[0] if q == 1 else make_module_direct_sum(M.parts[:q])
            right = M.parts[q] if q == len(M.parts) - 1 else make_module_direct_sum(M.parts[q:])
            il = np.array([left.index_of(lab[0] if q == 1 else lab[:q]) for lab in M.labels])
            ir = np.array([right.index_of(lab[q] if q == len(M.parts) - 1 else lab[q:])
                           for lab in M.labels])
            out.append(Split(left, right, il, ir))
        return out

    @cached_property
    def factor_components(self):
        """For a module over a product ring: component index arrays per factor."""
        M = self.M
        if M.kind != "pmod":
            return None
        return [np.array([P.index_of(lab[i]) for lab in M.labels]) for i, P in enumerate(M.parts)]

    def product_components(self, N):
        """Components N_i of N over a product ring, and whether N is their product."""
        idx = self.factor_components
        f = N.flags
        comps = []
        for i, P in enumerate(self.M.parts):
            others = np.ones(self.M.size, dtype=bool)
            for j, jdx in enumerate(idx):
                if j != i:
                    others &= jdx == 0
            flags = np.zeros(P.size, dtype=bool)
            flags[idx[i][f & others]] = True
            comps.append(Submodule(P, mask_from_bools(flags)))
        return comps, int(np.prod([c.size for c in comps])) == N.size

    @cached_property
    def multiplicative_sets(self):
        """Closures {1, s, s^2, ...} of single ring elements avoiding 0.

        Two sets with the same image in R/Ann(M) act identically on M, so only
        the first of each such class is kept.
        """
        R = self.M.ring
        if not R.is_finite:
            return []
        reduce = self.M.reduced.from_carrier
        seen, out = set(), []
        for s in R.labels:
            S = MultiplicativeSet(R, [s])
            key = tuple(np.unique(reduce[S.indices]).tolist())
            if S.contains_zero or key in seen:
                continue
            seen.add(key)
            out.append(S)
        return out

    def localization(self, S):
        key = tuple(S.indices.tolist())
        hit = self._localizations.get(key)
        if hit is None:
            hit = self._localizations[key] = localize_module(self.M, S)
        return hit

    def power(self, k):
        """(M^k, component index arrays) for the free module R^k tensored with M."""
        hit = self._powers.get(k)
        if hit is None:
            Mk = make_module_direct_sum([self.M] * k)
            _, _, digits = _mixed_radix([self.M.size] * k)
            hit = self._powers[k] = (Mk, digits)
        return hit


def env(M):
    e = M.__dict__.get("_harness_env")
    if e is None:
        e = M.__dict__["_harness_env"] = ModuleEnv(M)
    return e
