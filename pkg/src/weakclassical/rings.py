"""Finite commutative rings, the symbolic integers, and their ideals.

Elements of a finite ring are stored internally as indices into the sorted
tuple of canonical labels (ints for ``Z<n>``, nested tuples for products), so
that addition and multiplication are plain numpy table lookups. Index 0 is
always the zero element.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import sympy

from ._sets import (
    bools_from_mask,
    canonical_sort_key,
    format_label,
    indices_from_mask,
    is_subset,
    mask_from_bools,
    normalize_label,
    popcount,
)
from .decision import Decision
from .errors import InvalidParameter, NotProper, RingMismatch, Unsupported

INF = math.inf


class Ring:
    """A finite commutative ring with identity, or the symbolic ring ``ZZ``.

    Use the ``make_ring_*`` constructors rather than instantiating directly.
    """

    def __init__(self, kind, descriptor, labels=None, add=None, mul=None, *,
                 factors=(), base=None, modulus=None, n=None):
        self.kind = kind
        self.descriptor = descriptor
        self.factors = tuple(factors)
        self.base = base
        self.modulus = modulus
        self.n = n
        if kind == "Integers":
            self.labels = None
            return
        self.labels = tuple(labels)
        self.add_table = np.ascontiguousarray(add, dtype=np.int64)
        self.mul_table = np.ascontiguousarray(mul, dtype=np.int64)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)

    # -- identity -----------------------------------------------------------

    def __repr__(self):
        return f"Ring({self.descriptor})"

    def __eq__(self, other):
        return isinstance(other, Ring) and other.descriptor == self.descriptor

    def __hash__(self):
        return hash(("Ring", self.descriptor))

    # -- carrier ------------------------------------------------------------

    @property
    def is_finite(self):
        return self.kind != "Integers"

    @property
    def size(self):
        return INF if self.kind == "Integers" else len(self.labels)

    @property
    def is_zero(self):
        """Degenerate zero ring (only produced by quotients/localizations)."""
        return self.is_finite and len(self.labels) == 1

    @property
    def elements(self):
        self._require_finite("element enumeration")
        return self.labels

    def index_of(self, label):
        self._require_finite("element lookup")
        try:
            return self._index[normalize_label(label)]
        except (KeyError, TypeError):
            raise InvalidParameter(f"{label!r} is not an element of {self.descriptor}") from None

    def label(self, i):
        return self.labels[int(i)]

    @cached_property
    def one(self):
        self._require_finite("identity lookup")
        row = self.mul_table
        for i in range(len(self.labels)):
            if np.array_equal(row[i], np.arange(len(self.labels))):
                return i
        raise AssertionError(f"{self.descriptor} has no identity")

    @cached_property
    def neg_table(self):
        return np.argmax(self.add_table == 0, axis=1)

    def add(self, x, y):
        return self.label(self.add_table[self.index_of(x), self.index_of(y)])

    def mul(self, x, y):
        return self.label(self.mul_table[self.index_of(x), self.index_of(y)])

    def _require_finite(self, what):
        if not self.is_finite:
            raise Unsupported(f"{what} is not available for the symbolic ring ZZ")

    # -- ideal lattice --------------------------------------------------------

    def principal_mask(self, i):
        return mask_from_bools(np.bincount(self.mul_table[i], minlength=len(self.labels)) > 0)

    def sum_mask(self, a, b):
        n = len(self.labels)
        ia, ib = indices_from_mask(a, n), indices_from_mask(b, n)
        out = np.zeros(n, dtype=bool)
        out[self.add_table[np.ix_(ia, ib)].ravel()] = True
        return mask_from_bools(out)

    def product_mask(self, a, b):
        """Ideal generated by pairwise products of two ideals."""
        n = len(self.labels)
        ia, ib = indices_from_mask(a, n), indices_from_mask(b, n)
        result = 1  # {0}
        for p in np.unique(self.mul_table[np.ix_(ia, ib)]):
            result = self.sum_mask(result, self.principal_mask(int(p)))
        return result

    @cached_property
    def ideal_masks(self):
        """All ideals as bitmasks, sorted by (size, element indices)."""
        self._require_finite("ideal enumeration")
        n = len(self.labels)
        if self.kind == "Zn":
            masks = {mask_from_bools(np.arange(n) % d == 0) for d in _divisors(n)}
        elif self.kind == "Product":
            digits = self._digits
            masks = set()
            for combo in itertools.product(*(f.ideal_masks for f in self.factors)):
                flags = np.ones(n, dtype=bool)
                for f, m, dig in zip(self.factors, combo, digits):
                    flags &= bools_from_mask(m, len(f.labels))[dig]
                masks.add(mask_from_bools(flags))
        elif self.kind == "Quotient":
            base, proj = self.base, self.projection
            masks = set()
            for m in base.ideal_masks:
                if is_subset(self.modulus.mask, m):
                    flags = np.zeros(n, dtype=bool)
                    flags[proj[indices_from_mask(m, len(base.labels))]] = True
                    masks.add(mask_from_bools(flags))
        else:  # pragma: no cover - closed grammar
            raise Unsupported(self.kind)
        return tuple(sorted(masks, key=lambda m: canonical_sort_key(m, n)))

    @cached_property
    def ideals(self):
        return tuple(Ideal(self, mask=m) for m in self.ideal_masks)

    @cached_property
    def _digits(self):
        """Per-factor component index of every element of a product ring."""
        n = len(self.labels)
        sizes = [len(f.labels) for f in self.factors]
        strides = [math.prod(sizes[k + 1:]) for k in range(len(sizes))]
        return [(np.arange(n) // s) % z for s, z in zip(strides, sizes)]

    @cached_property
    def projection(self):
        """For quotient rings: base-ring index -> quotient index."""
        return self._projection

    # -- arithmetic helpers used by modules ----------------------------------

    def power_table(self):
        """Array P with P[k, r] = r^(k+1) for k < size."""
        n = len(self.labels)
        out = np.empty((n, n), dtype=np.int64)
        cur = np.arange(n)
        for k in range(n):
            out[k] = cur
            cur = self.mul_table[cur, np.arange(n)]
        return out


INTEGERS = Ring("Integers", "ZZ")


def gens_text(gens):
    """Generator list in instance-text form; the empty list is written ``0``."""
    return ",".join(format_label(g) for g in gens) if gens else "0"


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class RingMap:
    """A ring surjection given by an index table."""

    source: Ring
    target: Ring
    table: np.ndarray

    def __call__(self, label):
        return self.target.label(self.table[self.source.index_of(label)])

    def image(self, ideal):
        flags = np.zeros(len(self.target.labels), dtype=bool)
        flags[self.table[indices_from_mask(ideal.mask, len(self.source.labels))]] = True
        return Ideal(self.target, mask=mask_from_bools(flags))


class Ideal:
    """An ideal of a ring.

    For finite rings ``mask`` holds the element set. For ``ZZ`` the ideal is
    principal and ``d`` (a nonnegative integer) means dZ.
    """

    __slots__ = ("ring", "mask", "d", "_generators")

    def __init__(self, ring, mask=None, d=None, generators=None):
        self.ring = ring
        self.mask = mask
        self.d = d
        self._generators = None if generators is None else tuple(generators)

    def __repr__(self):
        if self.d is not None:
            return f"Ideal({self.d}ZZ)"
        return f"Ideal({self.ring.descriptor}: {', '.join(map(format_label, self.elements))})"

    def __eq__(self, other):
        return (isinstance(other, Ideal) and other.ring == self.ring
                and other.mask == self.mask and other.d == self.d)

    def __hash__(self):
        return hash((self.ring.descriptor, self.mask, self.d))

    def __contains__(self, label):
        if self.d is not None:
            return int(label) % self.d == 0 if self.d else int(label) == 0
        return bool(self.mask >> self.ring.index_of(label) & 1)

    def __le__(self, other):
        _same_ring(self, other)
        if self.d is not None:
            return other.d == 0 and self.d == 0 or (other.d != 0 and self.d % other.d == 0)
        return is_subset(self.mask, other.mask)

    @property
    def elements(self):
        if self.d is not None:
            raise Unsupported("ideals of ZZ are not enumerable")
        return tuple(self.ring.labels[i] for i in self.indices)

    @property
    def indices(self):
        return indices_from_mask(self.mask, len(self.ring.labels))

    @property
    def size(self):
        return INF if self.d is not None and self.d != 0 else (1 if self.d == 0 else popcount(self.mask))

    @property
    def is_zero(self):
        return self.d == 0 if self.d is not None else self.mask == 1

    @property
    def is_whole(self):
        if self.d is not None:
            return self.d == 1
        return self.mask == (1 << len(self.ring.labels)) - 1

    @property
    def generators(self):
        """The generators supplied at construction, else the canonical ones."""
        if self._generators is None:
            return self.canonical_generators
        return self._generators

    @property
    def canonical_generators(self):
        """Greedy generating set: scan elements in canonical order, keep those not yet spanned."""
        if self.d is not None:
            return (self.d,) if self.d else ()
        gens, cur = [], 1
        for i in self.indices:
            if not cur >> int(i) & 1:
                gens.append(self.ring.labels[i])
                cur = self.ring.sum_mask(cur, self.ring.principal_mask(int(i)))
        return tuple(gens)


def _same_ring(i, j):
    if i.ring != j.ring:
        raise RingMismatch(f"{i.ring.descriptor} vs {j.ring.descriptor}")


# -- constructors -------------------------------------------------------------


def _zn(n):
    r = np.arange(n)
    return Ring("Zn", f"Z{n}", range(n), np.add.outer(r, r) % n, np.multiply.outer(r, r) % n, n=n)


def make_ring_zn(n):
    """Return Z_n for n >= 2."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidParameter(f"Z_n needs n >= 2 (got {n!r}); the identity must be nonzero")
    return _zn(int(n))


def make_ring_product(factors):
    """Componentwise product of 2 or 3 finite rings."""
    factors = list(factors)
    if any(not f.is_finite for f in factors):
        raise Unsupported("products with the symbolic ring ZZ are not supported")
    if not 2 <= len(factors) <= 3:
        raise InvalidParameter("product rings take 2 or 3 factors")
    sizes = [len(f.labels) for f in factors]
    n = math.prod(sizes)
    strides = [math.prod(sizes[k + 1:]) for k in range(len(sizes))]
    digits = [(np.arange(n) // s) % z for s, z in zip(strides, sizes)]
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for f, s, d in zip(factors, strides, digits):
        add += f.add_table[d[:, None], d[None, :]] * s
        mul += f.mul_table[d[:, None], d[None, :]] * s
    labels = list(itertools.product(*(f.labels for f in factors)))
    desc = "prod(" + ",".join(f.descriptor for f in factors) + ")"
    return Ring("Product", desc, labels, add, mul, factors=factors)


def _quotient(R, I, allow_zero=False):
    if not R.is_finite:
        raise Unsupported("quotients of ZZ are not supported; use Z<n>")
    _same_ring(I, Ideal(R, mask=1))
    if I.is_whole and not allow_zero:
        raise InvalidParameter("cannot take the quotient by the whole ring")
    n = len(R.labels)
    idx = I.indices
    reps = R.add_table[:, idx].min(axis=1)  # least element of each coset
    uniq = np.unique(reps)
    renumber = np.full(n, -1, dtype=np.int64)
    renumber[uniq] = np.arange(len(uniq))
    proj = renumber[reps]
    add = proj[R.add_table[np.ix_(uniq, uniq)]]
    mul = proj[R.mul_table[np.ix_(uniq, uniq)]]
    Q = Ring("Quotient", f"quot({R.descriptor};{gens_text(I.canonical_generators)})", [R.labels[i] for i in uniq], add, mul,
             base=R, modulus=I)
    Q._projection = proj
    Q.representatives = uniq
    return Q, RingMap(R, Q, proj)


def make_ring_quotient(R, I):
    """R/I with carrier the least canonical element of each coset.

    Returns ``(quotient_ring, surjection)``.
    """
    return _quotient(R, I)


# -- ideal operations -----------------------------------------------------------


def ideal_from_generators(R, gens):
    gens = [normalize_label(g) for g in gens]
    if not R.is_finite:
        d = 0
        for g in gens:
            d = math.gcd(d, int(g))
        return Ideal(R, d=d)
    mask = 1
    for g in gens:
        mask = R.sum_mask(mask, R.principal_mask(R.index_of(g)))
    return Ideal(R, mask=mask, generators=gens if gens else ())


def ideal_arith(op, I, J):
    """``op`` is one of 'sum', 'product', 'intersection'."""
    _same_ring(I, J)
    R = I.ring
    if not R.is_finite:
        a, b = I.d, J.d
        if op == "sum":
            return Ideal(R, d=math.gcd(a, b))
        if op == "product":
            return Ideal(R, d=a * b)
        if op == "intersection":
            return Ideal(R, d=0 if a == 0 or b == 0 else math.lcm(a, b))
    else:
        if op == "sum":
            return Ideal(R, mask=R.sum_mask(I.mask, J.mask))
        if op == "product":
            return Ideal(R, mask=R.product_mask(I.mask, J.mask))
        if op == "intersection":
            return Ideal(R, mask=I.mask & J.mask)
    raise InvalidParameter(f"unknown ideal operation {op!r}")


def ideal_colon(I, J):
    """(I : J) = {r : rJ is contained in I}."""
    _same_ring(I, J)
    R = I.ring
    if not R.is_finite:
        if J.d == 0:
            return Ideal(R, d=1)
        if I.d == 0:
            return Ideal(R, d=0)
        return Ideal(R, d=I.d // math.gcd(I.d, J.d))
    n = len(R.labels)
    inside = bools_from_mask(I.mask, n)
    ok = inside[R.mul_table[:, J.indices]].all(axis=1)
    return Ideal(R, mask=mask_from_bools(ok))


def ideal_radical(I):
    R = I.ring
    if not R.is_finite:
        raise Unsupported("radicals of ideals of ZZ are not needed symbolically")
    n = len(R.labels)
    inside = bools_from_mask(I.mask, n)
    hit = inside[R.power_table()].any(axis=0)
    return Ideal(R, mask=mask_from_bools(hit))


def _require_proper(I):
    if I.is_whole:
        raise NotProper("the ideal is the whole ring")


def _smallest_factor_split(d):
    p = min(sympy.factorint(d))
    return (p, d // p)


def is_prime_ideal(I):
    """Decision with witness pair (a, b), a, b not in I, ab in I."""
    _require_proper(I)
    R = I.ring
    if not R.is_finite:
        if I.d == 0 or sympy.isprime(I.d):
            return Decision(True)
        return Decision(False, _smallest_factor_split(I.d))
    return _scan_prime(I, weak=False)


def is_weakly_prime_ideal(I):
    """Decision; the 'weak' version only constrains products 0 != ab in I."""
    _require_proper(I)
    R = I.ring
    if not R.is_finite:
        # in a domain a nonzero product is never excluded, so weak = prime
        if I.d == 0 or sympy.isprime(I.d):
            return Decision(True)
        return Decision(False, _smallest_factor_split(I.d))
    return _scan_prime(I, weak=True)


def _scan_prime(I, weak):
    R = I.ring
    n = len(R.labels)
    inside = bools_from_mask(I.mask, n)
    viol = inside[R.mul_table] & ~inside[:, None] & ~inside[None, :]
    if weak:
        viol &= R.mul_table != 0
    hits = np.argwhere(viol)
    if len(hits):
        a, b = hits[0]
        return Decision(False, (R.labels[a], R.labels[b]))
    return Decision(True)


def is_principal_ring(R):
    """True when every ideal is generated by a single element."""
    if not R.is_finite:
        return True
    principal = {R.principal_mask(i) for i in range(len(R.labels))}
    return all(m in principal for m in R.ideal_masks)


# -- multiplicative sets and localization -------------------------------------


class MultiplicativeSet:
    """Multiplicative closure of some generators, always containing one."""

    def __init__(self, ring, generators):
        if not ring.is_finite:
            raise Unsupported("multiplicative sets are only supported over finite rings")
        self.ring = ring
        self.generators = tuple(normalize_label(g) for g in generators)
        members = {ring.one}
        frontier = [ring.index_of(g) for g in self.generators]
        while frontier:
            x = frontier.pop()
            if x in members:
                continue
            members.add(x)
            for y in list(members):
                z = int(ring.mul_table[x, y])
                if z not in members:
                    frontier.append(z)
        self.indices = np.array(sorted(members), dtype=np.int64)

    @property
    def elements(self):
        return tuple(self.ring.labels[i] for i in self.indices)

    @property
    def contains_zero(self):
        return bool(self.indices[0] == 0)

    def __contains__(self, label):
        return self.ring.index_of(label) in set(self.indices.tolist())

    def __repr__(self):
        return f"MultiplicativeSet({self.ring.descriptor}; {', '.join(map(format_label, self.elements))})"


def localize_ring(R, S):
    """S^{-1}R realized as R / {r : sr = 0 for some s in S}.

    In a finite ring every non-zero-divisor is a unit, so this quotient is the
    localization. Returns ``(ring, surjection)``; the ring has ``is_zero`` set
    when 0 is in S.
    """
    if S.ring != R:
        raise RingMismatch("multiplicative set belongs to another ring")
    kernel = (R.mul_table[S.indices] == 0).any(axis=0)
    return _quotient(R, Ideal(R, mask=mask_from_bools(kernel)), allow_zero=True)
