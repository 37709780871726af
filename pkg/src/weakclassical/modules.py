"""Finite modules over finite rings or over the integers.

A module stores its additive table and an action table ``action[s, m]``
indexed by a finite *scalar carrier*: the ring itself when it is finite, and
``Z_e`` (``e`` the exponent) for integer scalars. Integer scalars act only
through their residue mod ``e``, so every quantifier over ``ZZ`` can be run
over ``0..e-1`` without changing its truth value.

For predicate scans the carrier is further reduced to ``R/Ann(M)``
(:attr:`Module.reduced`); conditions that only look at how scalars act are
invariant under this reduction, and the reduced carrier is what keeps
products of rings like ``Z8 x Z9 x Z5`` tractable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

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
from .errors import (
    InvalidParameter,
    InvalidSubmodule,
    NotAHomomorphism,
    RingMismatch,
    TooLarge,
    Unsupported,
)
from .rings import INTEGERS, Ideal, MultiplicativeSet, Ring, _quotient, _zn, gens_text, localize_ring

DEFAULT_BOUND = 64


def _mixed_radix(sizes):
    n = math.prod(sizes)
    strides = [math.prod(sizes[k + 1:]) for k in range(len(sizes))]
    return n, strides, [(np.arange(n) // s) % z for s, z in zip(strides, sizes)]


def _additive_exponent(add):
    n = len(add)
    e, cur = 1, np.arange(n)
    while cur.any():
        cur = add[cur, np.arange(n)]
        e += 1
    return e


@dataclass(frozen=True)
class ScalarReduction:
    """Scalars modulo the annihilator: ``ring`` acts faithfully via ``action``.

    ``from_carrier`` maps a scalar-carrier index to its reduced index; reduced
    labels are the least representatives, so they are valid scalars of the
    original ring.
    """

    ring: Ring
    action: np.ndarray
    from_carrier: np.ndarray


class Module:
    """A finite unitary module. Build with the ``make_module_*`` functions."""

    def __init__(self, ring, descriptor, labels, add, action, *, parts=(), kind="generic",
                 factor_ring=None):
        self.ring = ring
        self.descriptor = descriptor
        self.labels = tuple(labels)
        self.add_table = np.ascontiguousarray(add, dtype=np.int64)
        self.parts = tuple(parts)
        self.kind = kind
        self.factor_ring = factor_ring
        self.exponent = _additive_exponent(self.add_table)
        action = np.ascontiguousarray(action, dtype=np.int64)
        if ring.is_finite:
            self.carrier = ring
        else:
            # integer scalars act through Z_e; trim redundant rows
            self.carrier = _zn(self.exponent)
            action = action[: self.exponent]
        self.action = action
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._classify_cache = {}
        if self.add_table[0, 0] != 0 or self.labels[0] != _zero_label(self.labels[0]):
            raise AssertionError("zero element must come first")

    def __repr__(self):
        return f"Module({self.descriptor})"

    def __eq__(self, other):
        return isinstance(other, Module) and other.descriptor == self.descriptor

    def __hash__(self):
        return hash(("Module", self.descriptor))

    # -- carrier ------------------------------------------------------------

    @property
    def size(self):
        return len(self.labels)

    @property
    def is_degenerate(self):
        return len(self.labels) == 1

    @property
    def elements(self):
        return self.labels

    def index_of(self, label):
        try:
            return self._index[normalize_label(label)]
        except (KeyError, TypeError):
            raise InvalidParameter(f"{label!r} is not an element of {self.descriptor}") from None

    def label(self, i):
        return self.labels[int(i)]

    def scalar_index(self, a):
        """Index into the scalar carrier for a scalar of ``self.ring``."""
        if self.ring.is_finite:
            return self.ring.index_of(a)
        return int(a) % self.exponent

    def scalar_label(self, s):
        return self.carrier.labels[int(s)]

    def add(self, x, y):
        return self.label(self.add_table[self.index_of(x), self.index_of(y)])

    def act(self, a, m):
        return self.label(self.action[self.scalar_index(a), self.index_of(m)])

    @cached_property
    def neg_table(self):
        return np.argmax(self.add_table == 0, axis=1)

    # -- scalars --------------------------------------------------------------

    @cached_property
    def annihilator_mask(self):
        """Ann(M) as a mask over the scalar carrier."""
        return mask_from_bools((self.action == 0).all(axis=1))

    @cached_property
    def reduced(self):
        carrier = self.carrier
        ann = Ideal(carrier, mask=self.annihilator_mask)
        if ann.is_zero:
            return ScalarReduction(carrier, self.action, np.arange(len(carrier.labels)))
        red, rmap = _quotient(carrier, ann, allow_zero=True)
        return ScalarReduction(red, self.action[red.representatives], rmap.table)

    # -- subsets --------------------------------------------------------------

    @cached_property
    def cyclic_masks(self):
        """Mask of the cyclic submodule Rm for every element m."""
        n = self.size
        out = []
        for m in range(n):
            flags = np.zeros(n, dtype=bool)
            flags[self.action[:, m]] = True
            out.append(mask_from_bools(flags))
        return out

    def sum_mask(self, a, b):
        n = self.size
        ia, ib = indices_from_mask(a, n), indices_from_mask(b, n)
        flags = np.zeros(n, dtype=bool)
        flags[self.add_table[np.ix_(ia, ib)].ravel()] = True
        return mask_from_bools(flags)

    def span_mask(self, indices):
        mask = 1
        for m in np.unique(np.asarray(indices, dtype=np.int64)):
            c = self.cyclic_masks[int(m)]
            if not is_subset(c, mask):
                mask = self.sum_mask(mask, c)
        return mask

    def is_submodule_mask(self, mask):
        n = self.size
        flags = bools_from_mask(mask, n)
        idx = np.flatnonzero(flags)
        return bool(flags[0] and flags[self.add_table[np.ix_(idx, idx)]].all()
                    and flags[self.action[:, idx]].all())

    def submodule_masks(self, bound=DEFAULT_BOUND):
        if self.size > bound:
            raise TooLarge(f"{self.descriptor} has {self.size} elements (bound {bound})")
        return self._all_submodule_masks

    @cached_property
    def _all_submodule_masks(self):
        cyclics = sorted(set(self.cyclic_masks))
        seen = {1}
        frontier = [1]
        while frontier:
            nxt = []
            for s in frontier:
                for c in cyclics:
                    if is_subset(c, s):
                        continue
                    t = self.sum_mask(s, c)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        n = self.size
        return tuple(sorted(seen, key=lambda m: canonical_sort_key(m, n)))

    @cached_property
    def submodules(self):
        return tuple(Submodule(self, m) for m in self._all_submodule_masks)

    def submodule(self, mask):
        return Submodule(self, mask)

    @property
    def whole(self):
        return Submodule(self, (1 << self.size) - 1)

    @property
    def zero(self):
        return Submodule(self, 1)

    # -- checking -------------------------------------------------------------

    def validate(self):
        """Exhaustively re-check the module axioms; raises AssertionError."""
        add, act, n = self.add_table, self.action, self.size
        S = self.carrier
        r = np.arange(n)
        assert (add == add.T).all(), "addition not commutative"
        lhs = add[add[:, :, None], r[None, None, :]]
        rhs = add[r[:, None, None], add[None, :, :]]
        assert (lhs == rhs).all(), "addition not associative"
        assert (add[0] == r).all(), "zero is not neutral"
        assert (add == 0).any(axis=1).all(), "missing negatives"
        # a(m+m') = am + am'
        assert (act[:, add] == add[act[:, :, None], act[:, None, :]]).all(), "action not additive in m"
        # (a+b)m = am + bm, (ab)m = a(bm)
        for a in range(len(S.labels)):
            assert (act[S.add_table[a]] == add[act[a][None, :], act]).all(), "action not additive in a"
            assert (act[S.mul_table[a]] == act[a][act]).all(), "action not associative"
        assert (act[S.one] == r).all(), "module not unitary"
        return True


def _zero_label(label):
    if isinstance(label, tuple):
        return tuple(_zero_label(x) for x in label)
    return 0


class Submodule:
    """A submodule stored as a bitmask over its parent's elements."""

    __slots__ = ("module", "mask", "_generators")

    def __init__(self, module, mask, generators=None):
        self.module = module
        self.mask = mask
        self._generators = None if generators is None else tuple(generators)

    def __repr__(self):
        return f"Submodule({self.module.descriptor}: {{{', '.join(map(format_label, self.elements))}}})"

    def __eq__(self, other):
        return isinstance(other, Submodule) and other.module == self.module and other.mask == self.mask

    def __hash__(self):
        return hash((self.module.descriptor, self.mask))

    def __le__(self, other):
        return is_subset(self.mask, other.mask)

    def __lt__(self, other):
        return self.mask != other.mask and is_subset(self.mask, other.mask)

    def __contains__(self, label):
        return bool(self.mask >> self.module.index_of(label) & 1)

    def __and__(self, other):
        return Submodule(self.module, self.mask & other.mask)

    def __add__(self, other):
        return Submodule(self.module, self.module.sum_mask(self.mask, other.mask))

    @property
    def indices(self):
        return indices_from_mask(self.mask, self.module.size)

    @property
    def flags(self):
        return bools_from_mask(self.mask, self.module.size)

    @property
    def elements(self):
        return tuple(self.module.labels[i] for i in self.indices)

    @property
    def size(self):
        return popcount(self.mask)

    @property
    def is_zero(self):
        return self.mask == 1

    @property
    def is_whole(self):
        return self.mask == (1 << self.module.size) - 1

    @property
    def generators(self):
        if self._generators is None:
            M, gens, cur = self.module, [], 1
            for i in self.indices:
                if not cur >> int(i) & 1:
                    gens.append(M.labels[i])
                    cur = M.sum_mask(cur, M.cyclic_masks[int(i)])
            self._generators = tuple(gens)
        return self._generators


# -- constructors ------------------------------------------------------------------


def make_module_cyclic(R, I):
    """R/I as an R-module (R over itself when I = 0)."""
    if not R.is_finite:
        raise Unsupported("cyclic modules over ZZ: use make_module_abelian")
    if I.ring != R:
        raise RingMismatch("ideal belongs to another ring")
    Q, proj = _quotient(R, I, allow_zero=True)
    action = proj.table[R.mul_table[:, Q.representatives]]
    desc = f"cyc({R.descriptor};{gens_text(I.canonical_generators)})"
    return Module(R, desc, Q.labels, Q.add_table, action, kind="cyc")


def make_module_abelian(ds):
    """Z_{d1} + ... + Z_{dk} with integer scalars."""
    ds = [int(d) for d in ds]
    if any(d < 1 for d in ds):
        raise InvalidParameter("cyclic orders must be positive")
    desc = "ab(" + ",".join(map(str, ds)) + ")"
    if not ds:
        return Module(INTEGERS, desc, [0], [[0]], [[0]], kind="ab")
    if len(ds) == 1:
        d = ds[0]
        r = np.arange(d)
        return Module(INTEGERS, desc, range(d), np.add.outer(r, r) % d, np.multiply.outer(r, r) % d,
                      kind="ab")
    parts = [make_module_abelian([d]) for d in ds]
    M = _direct_sum(parts, desc, kind="ab")
    return M


def _direct_sum(parts, desc, kind):
    ring = parts[0].ring
    sizes = [p.size for p in parts]
    n, strides, digits = _mixed_radix(sizes)
    add = np.zeros((n, n), dtype=np.int64)
    for p, s, d in zip(parts, strides, digits):
        add += p.add_table[d[:, None], d[None, :]] * s
    if ring.is_finite:
        rows = len(ring.labels)
        scal = [np.arange(rows)] * len(parts)
    else:
        rows = math.lcm(*(p.exponent for p in parts))
        scal = [np.arange(rows) % p.exponent for p in parts]
    action = np.zeros((rows, n), dtype=np.int64)
    for p, s, d, sc in zip(parts, strides, digits, scal):
        action += p.action[sc[:, None], d[None, :]] * s
    labels = [tuple(p.labels[d[i]] for p, d in zip(parts, digits)) for i in range(n)]
    return Module(ring, desc, labels, add, action, parts=parts, kind=kind)


def make_module_direct_sum(Ms):
    Ms = list(Ms)
    if not Ms:
        raise InvalidParameter("direct sum of no modules")
    if any(M.ring != Ms[0].ring for M in Ms):
        raise RingMismatch("direct summands must share one scalar ring")
    if len(Ms) == 1:
        return Ms[0]
    desc = "dsum(" + ",".join(M.descriptor for M in Ms) + ")"
    return _direct_sum(Ms, desc, kind="dsum")


def make_module_over_product(R, Ms):
    """M_1 x ... x M_k over R_1 x ... x R_k, acting componentwise."""
    Ms = list(Ms)
    if R.kind != "Product" or len(R.factors) != len(Ms):
        raise InvalidParameter("need one module per factor of a product ring")
    for f, M in zip(R.factors, Ms):
        if M.ring != f:
            raise RingMismatch(f"{M.descriptor} is not a module over {f.descriptor}")
    n, strides, digits = _mixed_radix([M.size for M in Ms])
    rdig = R._digits
    add = np.zeros((n, n), dtype=np.int64)
    action = np.zeros((len(R.labels), n), dtype=np.int64)
    for M, s, d, rd in zip(Ms, strides, digits, rdig):
        add += M.add_table[d[:, None], d[None, :]] * s
        action += M.action[rd[:, None], d[None, :]] * s
    labels = [tuple(M.labels[d[i]] for M, d in zip(Ms, digits)) for i in range(n)]
    desc = f"pmod({R.descriptor};" + ",".join(M.descriptor for M in Ms) + ")"
    return Module(R, desc, labels, add, action, parts=Ms, kind="pmod", factor_ring=R)


def make_module_free(R, k):
    """R^k over R (k = 0 gives the zero module)."""
    if not R.is_finite:
        raise Unsupported("free modules over ZZ are infinite")
    k = int(k)
    if k < 0:
        raise InvalidParameter("rank must be nonnegative")
    desc = f"free({R.descriptor};{k})"
    if k == 0:
        return Module(R, desc, [0], [[0]], np.zeros((len(R.labels), 1)), kind="free")
    base = make_module_cyclic(R, Ideal(R, mask=1))
    if k == 1:
        return Module(R, desc, base.labels, base.add_table, base.action, kind="free")
    return _direct_sum([base] * k, desc, kind="free")


def _restrict(M, keep, desc, kind):
    """Module on the subset ``keep`` (sorted indices closed under everything)."""
    renumber = np.full(M.size, -1, dtype=np.int64)
    renumber[keep] = np.arange(len(keep))
    add = renumber[M.add_table[np.ix_(keep, keep)]]
    action = renumber[M.action[:, keep]]
    return Module(M.ring, desc, [M.labels[i] for i in keep], add, action, kind=kind), renumber


def _sub_desc(L):
    return gens_text(L.generators)


def submodule_as_module(L):
    """The submodule L viewed as a module in its own right."""
    M = L.module
    S, _ = _restrict(M, L.indices, f"submod({M.descriptor};{_sub_desc(L)})", kind="submod")
    return S


def make_module_quotient(M, L):
    """M/L on least coset representatives, with the canonical projection."""
    if not isinstance(L, Submodule) or L.module != M:
        raise InvalidSubmodule("L is not a submodule of M")
    if not M.is_submodule_mask(L.mask):
        raise InvalidSubmodule("L is not closed")
    reps = M.add_table[:, L.indices].min(axis=1)
    uniq = np.unique(reps)
    renumber = np.full(M.size, -1, dtype=np.int64)
    renumber[uniq] = np.arange(len(uniq))
    proj = renumber[reps]
    add = proj[M.add_table[np.ix_(uniq, uniq)]]
    action = proj[M.action[:, uniq]]
    Q = Module(M.ring, f"qmod({M.descriptor};{_sub_desc(L)})", [M.labels[i] for i in uniq], add,
               action, kind="qmod")
    Q.representatives = uniq
    return Q, ModuleHom(M, Q, proj)


def submodule_generate(M, gens):
    idx = [M.index_of(g) for g in gens]
    return Submodule(M, M.span_mask(idx), generators=[normalize_label(g) for g in gens])


def enumerate_submodules(M, bound=DEFAULT_BOUND):
    """All submodules, sorted by (size, element indices)."""
    M.submodule_masks(bound)
    return list(M.submodules)


# -- colon, annihilator and action ----------------------------------------------------


def _target_indices(M, K):
    if isinstance(K, Submodule):
        if K.module != M:
            raise RingMismatch("submodules of different modules")
        return K.indices
    return np.array([M.index_of(K)])


def _carrier_ideal(M, flags):
    """Turn a boolean vector over the scalar carrier into an Ideal of M.ring."""
    if M.ring.is_finite:
        return Ideal(M.ring, mask=mask_from_bools(flags))
    d = M.exponent
    for a in np.flatnonzero(flags):
        d = math.gcd(d, int(a))
    return Ideal(INTEGERS, d=d)


def colon_ring(N, K):
    """(N :_R K) for a submodule or single element K."""
    M = N.module
    idx = _target_indices(M, K)
    ok = N.flags[M.action[:, idx]].all(axis=1)
    return _carrier_ideal(M, ok)


def annihilator(M, K=None):
    """Ann_R(M), or Ann_R(K) for an element/submodule K."""
    return colon_ring(M.zero, M.whole if K is None else K)


def colon_module(N, a, b=None):
    """(N :_M a), or (N :_M ab) when b is given."""
    M = N.module
    s = M.scalar_index(a)
    if b is not None:
        s = int(M.carrier.mul_table[s, M.scalar_index(b)])
    return Submodule(M, mask_from_bools(N.flags[M.action[s]]))


def _ideal_carrier_indices(M, I):
    if I.ring != M.ring:
        raise RingMismatch("ideal and module have different scalar rings")
    if M.ring.is_finite:
        return I.indices
    d = I.d % M.exponent
    return np.unique(np.arange(M.exponent) * d % M.exponent)


def act_elem(a, m, M):
    """The element a*m of M."""
    return M.act(a, m)


def act_span(x, y, M=None):
    """Submodule generated by x*y for x an Ideal or scalar, y a Submodule or element."""
    if isinstance(y, Submodule):
        M = y.module
        yidx = y.indices
    else:
        if M is None:
            raise InvalidParameter("pass the module when y is a bare element")
        yidx = np.array([M.index_of(y)])
    if isinstance(x, Ideal):
        xidx = _ideal_carrier_indices(M, x)
    else:
        xidx = np.array([M.scalar_index(x)])
    products = M.action[np.ix_(xidx, yidx)].ravel()
    return Submodule(M, M.span_mask(products))


# IM, IJm, a*L, ...: the submodule form is the general one
act = act_span


@dataclass(frozen=True)
class ModuleFlags:
    faithful: bool
    torsion_free: bool
    cyclic: bool
    degenerate: bool
    annihilator: Ideal
    zero_divisors: tuple
    zero_divisors_quotient: tuple | None = None


def _zero_divisor_flags(M, N=None):
    """Scalars killing some element outside N (N = 0 gives Z_R(M))."""
    outside = ~N.flags if N is not None else np.arange(M.size) != 0
    inside = N.flags if N is not None else np.arange(M.size) == 0
    return (inside[M.action] & outside[None, :]).any(axis=1)


def module_flags(M, N=None):
    """faithful / torsion_free / cyclic flags and zero-divisor sets.

    For integer scalars the zero-divisor sets are reported as residues mod
    the exponent, and ``faithful`` is false for every nonzero finite module.
    """
    ann = annihilator(M)
    faithful = ann.is_zero if M.ring.is_finite else (ann.d == 0)
    n = M.size
    if M.ring.is_finite:
        # Ann_R(m) = 0 for every nonzero m
        zero_rows = M.action == 0
        tf = bool((zero_rows[:, 1:].sum(axis=0) == 1).all())
    else:
        tf = n == 1
    cyclic = any(c == (1 << n) - 1 for c in M.cyclic_masks)
    zd = tuple(M.scalar_label(s) for s in np.flatnonzero(_zero_divisor_flags(M)))
    zdq = None
    if N is not None:
        zdq = tuple(M.scalar_label(s) for s in np.flatnonzero(_zero_divisor_flags(M, N)))
    return ModuleFlags(faithful, tf, cyclic, n == 1, ann, zd, zdq)


# -- homomorphisms ---------------------------------------------------------------------


class ModuleHom:
    """An R-linear map stored as a total table source-index -> target-index."""

    def __init__(self, source, target, table):
        self.source = source
        self.target = target
        self.table = np.asarray(table, dtype=np.int64)

    def __call__(self, label):
        return self.target.label(self.table[self.source.index_of(label)])

    @cached_property
    def kernel(self):
        return Submodule(self.source, mask_from_bools(self.table == 0))

    @property
    def injective(self):
        return self.kernel.is_zero

    @property
    def surjective(self):
        return len(np.unique(self.table)) == self.target.size

    def verify(self):
        S, T, f = self.source, self.target, self.table
        if S.ring != T.ring:
            raise RingMismatch("homomorphism between modules over different rings")
        if f[0] != 0 or not (f[S.add_table] == T.add_table[f[:, None], f[None, :]]).all():
            raise NotAHomomorphism("map is not additive")
        if S.ring.is_finite:
            rows_s = rows_t = np.arange(len(S.ring.labels))
        else:
            e = math.lcm(S.exponent, T.exponent)
            rows_s, rows_t = np.arange(e) % S.exponent, np.arange(e) % T.exponent
        if not (f[S.action[rows_s]] == T.action[rows_t][:, f]).all():
            raise NotAHomomorphism("map is not R-linear")
        return self


def make_hom(M, M2, images):
    """Extend generator images (dict label -> label) to a verified hom M -> M2."""
    if M.ring != M2.ring:
        raise RingMismatch("modules over different rings")
    gens = [(M.index_of(g), M2.index_of(v)) for g, v in dict(images).items()]
    table = np.full(M.size, -1, dtype=np.int64)
    table[0] = 0
    frontier = [0]
    rows = range(M.action.shape[0])

    def assign(x, y):
        if table[x] == -1:
            table[x] = y
            frontier.append(x)
        elif table[x] != y:
            raise NotAHomomorphism(f"inconsistent images at {M.label(x)!r}")

    for g, v in gens:
        assign(g, v)
    while frontier:
        x = frontier.pop()
        y = int(table[x])
        for g, v in gens:
            assign(int(M.add_table[x, g]), int(M2.add_table[y, v]))
        for s in rows:
            t = s if M.ring.is_finite else s % M2.exponent
            assign(int(M.action[s, x]), int(M2.action[t, y]))
    if (table < 0).any():
        raise NotAHomomorphism("images do not determine the map on all of M (not generating)")
    return ModuleHom(M, M2, table).verify()


def make_inclusion(L):
    """Inclusion of the submodule L (as a module) into its parent."""
    S = submodule_as_module(L)
    return ModuleHom(S, L.module, L.indices).verify()


def make_projection(M, L):
    return make_module_quotient(M, L)[1]


def hom_image(f, N):
    flags = np.zeros(f.target.size, dtype=bool)
    flags[f.table[N.indices]] = True
    return Submodule(f.target, f.target.span_mask(np.flatnonzero(flags)))


def hom_preimage(f, N2):
    return Submodule(f.source, mask_from_bools(N2.flags[f.table]))


# -- localization -------------------------------------------------------------------------


@dataclass(frozen=True)
class Localization:
    """S^{-1}M realized as M/K_M over R/K_R."""

    ring: Ring
    ring_map: object
    module: Module
    kernel: Submodule
    table: np.ndarray

    def __call__(self, label):
        return self.module.label(self.table[self.kernel.module.index_of(label)])

    def transport(self, N):
        """S^{-1}N as a submodule of S^{-1}M."""
        flags = np.zeros(self.module.size, dtype=bool)
        flags[self.table[N.indices]] = True
        return Submodule(self.module, mask_from_bools(flags))


def localize_module(M, S):
    if not M.ring.is_finite:
        raise Unsupported("localization needs a finite scalar ring")
    if not isinstance(S, MultiplicativeSet) or S.ring != M.ring:
        raise RingMismatch("multiplicative set of another ring")
    ring, rmap = localize_ring(M.ring, S)
    killed = (M.action[S.indices] == 0).any(axis=0)
    K = Submodule(M, mask_from_bools(killed))
    reps = M.add_table[:, K.indices].min(axis=1)
    uniq = np.unique(reps)
    renumber = np.full(M.size, -1, dtype=np.int64)
    renumber[uniq] = np.arange(len(uniq))
    proj = renumber[reps]
    add = proj[M.add_table[np.ix_(uniq, uniq)]]
    action = proj[M.action[np.ix_(ring.representatives, uniq)]]
    desc = f"loc({M.descriptor};{gens_text(S.generators)})"
    L = Module(ring, desc, [M.labels[i] for i in uniq], add, action, kind="loc")
    return Localization(ring, rmap, L, K, proj)
