"""Decision procedures for the six submodule classes and the characterization
conditions of weakly classical prime submodules.

Every scan quantifies over the reduced scalars ``R/Ann(M)`` (residues mod the
exponent for integer scalars) and over module elements in canonical order, and
reports the lexicographically first violation. Scalars in witnesses are the
least representatives, hence genuine elements of the original scalar ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._sets import indices_from_mask
from .decision import Decision
from .errors import HypothesisFailed, NotApplicable, NotProper, NotWCP, RingMismatch
from .modules import Submodule, _ideal_carrier_indices, act_span, colon_ring
from .rings import Ideal, ideal_arith

CLASSES = (
    "prime",
    "weakly_prime",
    "classical_prime",
    "weakly_classical_prime",
    "two_absorbing",
    "weakly_two_absorbing",
)


class _Tables:
    """Per-module precomputation shared by all scans."""

    def __init__(self, M):
        red = M.reduced
        self.ring = red.ring
        self.A = red.action
        self.mul = red.ring.mul_table
        self.AB = self.A[self.mul]  # AB[a, b, m] = (ab)m
        self.zero_A = self.A == 0
        self.zero_AB = self.AB == 0
        self.s = len(red.ring.labels)
        self.n = M.size
        self.ideal_idx = [indices_from_mask(m, self.s) for m in red.ring.ideal_masks]
        self._products = {}
        self._lattice = None

    def ideal_product(self, i, j):
        key = (min(i, j), max(i, j))
        if key not in self._products:
            masks = self.ring.ideal_masks
            prod = self.ring.product_mask(masks[i], masks[j])
            self._products[key] = indices_from_mask(prod, self.s)
        return self._products[key]

    def lattice(self, M):
        """Boolean membership matrix of every submodule, plus annihilators."""
        if self._lattice is None:
            subs = M.submodules
            L = np.array([s.flags for s in subs])
            ann = ~(L[:, None, :] & ~self.zero_A[None]).any(axis=2)
            self._lattice = (subs, L, ann)
        return self._lattice


def tables(M):
    t = M.__dict__.get("_scan_tables")
    if t is None:
        t = M.__dict__["_scan_tables"] = _Tables(M)
    return t


def _first(viol):
    hits = np.argwhere(viol)
    return None if len(hits) == 0 else tuple(int(x) for x in hits[0])


def _require_proper(N):
    if N.module.is_degenerate:
        raise NotApplicable(f"{N.module.descriptor} is the zero module")
    if N.is_whole:
        raise NotProper("N equals the whole module")


@dataclass(frozen=True)
class ClassificationReport:
    submodule: Submodule
    prime: bool
    weakly_prime: bool
    classical_prime: bool
    weakly_classical_prime: bool
    two_absorbing: bool
    weakly_two_absorbing: bool
    witnesses: dict = field(default_factory=dict)

    def flags(self):
        return {name: getattr(self, name) for name in CLASSES}


@dataclass(frozen=True)
class TripleZero:
    a: object
    b: object
    m: object


def classify(N):
    """Decide all six classes for a proper submodule N by direct scans."""
    _require_proper(N)
    M = N.module
    cached = M._classify_cache.get(N.mask)
    if cached is not None:
        return cached
    t = tables(M)
    inN = N.flags
    inA = inN[t.A]  # am in N
    colon = inA.all(axis=1)  # a in (N:M)
    outN = ~inN

    base2 = inA & outN[None, :] & ~colon[:, None]
    base3 = inN[t.AB] & ~inA[:, None, :] & ~inA[None, :, :]
    nz2 = ~t.zero_A
    nz3 = ~t.zero_AB
    absorb = base3 & ~colon[t.mul][:, :, None]

    lab_r, lab_m = t.ring.labels, M.labels

    def w2(hit):
        return None if hit is None else (lab_r[hit[0]], lab_m[hit[1]])

    def w3(hit):
        return None if hit is None else (lab_r[hit[0]], lab_r[hit[1]], lab_m[hit[2]])

    wit = {
        "prime": w2(_first(base2)),
        "weakly_prime": w2(_first(base2 & nz2)),
        "classical_prime": w3(_first(base3)),
        "weakly_classical_prime": w3(_first(base3 & nz3)),
        "two_absorbing": w3(_first(absorb)),
        "weakly_two_absorbing": w3(_first(absorb & nz3)),
    }
    report = ClassificationReport(N, witnesses={k: v for k, v in wit.items() if v is not None},
                                  **{k: v is None for k, v in wit.items()})
    M._classify_cache[N.mask] = report
    return report


def is_weakly_classical_prime(N):
    return classify(N).weakly_classical_prime


def is_classical_prime(N):
    return classify(N).classical_prime


def is_prime_submodule(N):
    return classify(N).prime


def _scalar_mul(M, a, b):
    if M.ring.is_finite:
        return M.ring.mul(a, b)
    return int(a) * int(b)


def witness_violates(N, name, witness):
    """Replay a witness through raw module arithmetic (no scan tables).

    Returns True when the witness really violates the defining condition of
    class ``name`` for N.
    """
    M = N.module
    colon = colon_ring(N, M.whole)
    if name in ("prime", "weakly_prime"):
        a, m = witness
        am = M.act(a, m)
        return (am in N and m not in N and a not in colon
                and (name == "prime" or am != M.labels[0]))
    a, b, m = witness
    ab = _scalar_mul(M, a, b)
    abm = M.act(ab, m)
    if abm != M.act(a, M.act(b, m)):
        return False
    bad = abm in N and M.act(a, m) not in N and M.act(b, m) not in N
    if name.startswith("weakly"):
        bad = bad and abm != M.labels[0]
    if name.endswith("two_absorbing"):
        bad = bad and ab not in colon
    return bad


def _expand_fibers(M, a_red):
    """All carrier scalars mapping to reduced scalar ``a_red``."""
    return np.flatnonzero(M.reduced.from_carrier == a_red)


def classical_triple_zeros(N, reduced=False):
    """All classical triple-zeros (a, b, m) of a weakly classical prime N.

    With ``reduced=True`` scalars range over representatives of R/Ann(M) only.
    """
    rep = classify(N)
    if not rep.weakly_classical_prime:
        raise NotWCP("classical triple-zeros are only defined for weakly classical prime submodules")
    M = N.module
    t = tables(M)
    inA = N.flags[t.A]
    hits = np.argwhere(t.zero_AB & ~inA[:, None, :] & ~inA[None, :, :])
    if reduced:
        return [TripleZero(t.ring.labels[a], t.ring.labels[b], M.labels[m]) for a, b, m in hits]
    out = []
    for a, b, m in hits:
        for x in _expand_fibers(M, a):
            for y in _expand_fibers(M, b):
                out.append((int(x), int(y), int(m)))
    out.sort()
    return [TripleZero(M.scalar_label(a), M.scalar_label(b), M.labels[m]) for a, b, m in out]


def is_free_triple_zero(N, I, J, K):
    """True iff no (a, b, k) in I x J x K is a classical triple-zero of N."""
    M = N.module
    if K.module != M:
        raise RingMismatch("K is not a submodule of N's module")
    IJK = act_span(ideal_arith("product", I, J), K)
    if not IJK <= N:
        raise HypothesisFailed("IJK is not contained in N")
    if not classify(N).weakly_classical_prime:
        raise NotWCP("N is not weakly classical prime")
    t = tables(M)
    proj = M.reduced.from_carrier
    ia = np.unique(proj[_ideal_carrier_indices(M, I)])
    ib = np.unique(proj[_ideal_carrier_indices(M, J)])
    inA = N.flags[t.A]
    kk = K.indices
    tz = (t.zero_AB[np.ix_(ia, ib, kk)] & ~inA[np.ix_(ia, kk)][:, None, :]
          & ~inA[np.ix_(ib, kk)][None, :, :])
    return not tz.any()


# -- characterizations -------------------------------------------------------------


@dataclass(frozen=True)
class Conditions:
    """Seven independently evaluated conditions; ``values[0]`` is condition (1)."""

    values: tuple

    def __getitem__(self, k):
        """1-based access matching the numbering of the characterization."""
        return self.values[k - 1]

    @property
    def truth(self):
        return tuple(bool(v) for v in self.values)

    @property
    def all_equal(self):
        return len(set(self.truth)) == 1


def _ideal_label(t, i):
    return Ideal(t.ring, mask=t.ring.ideal_masks[i]).canonical_generators


def main_conditions(N):
    """Conditions (1)-(7) of the element-wise characterization, each by its own scan."""
    _require_proper(N)
    M = N.module
    t = tables(M)
    inN = N.flags
    inA = inN[t.A]
    inAB = inN[t.AB]
    R, mlab = t.ring.labels, M.labels
    out = [Decision(classify(N).weakly_classical_prime,
                    classify(N).witnesses.get("weakly_classical_prime"))]

    # (2) (N:_M ab) = (0:_M ab) u (N:_M a) u (N:_M b)
    rhs = t.zero_AB | inA[:, None, :] | inA[None, :, :]
    hit = _first((inAB != rhs).any(axis=2))
    out.append(Decision(hit is None, hit and (R[hit[0]], R[hit[1]])))

    # (3)/(4): colon ideals of am versus those of m, for am outside N
    C = inA.T  # C[x, r]: r x in N
    Z = t.zero_A.T  # Z[x, r]: r x = 0
    CA, ZA = C[t.A], Z[t.A]  # (s, n, s) for x = am
    Cm = C[None, :, :]
    ok3 = (CA == (ZA | Cm)).all(axis=2)
    hit = _first(~inA & ~ok3)
    out.append(Decision(hit is None, hit and (R[hit[0]], mlab[hit[1]])))
    ok4 = (CA == ZA).all(axis=2) | (CA == Cm).all(axis=2)
    hit = _first(~inA & ~ok4)
    out.append(Decision(hit is None, hit and (R[hit[0]], mlab[hit[1]])))

    # (5)-(7) over the ideal lattice
    Im_in, Im_zero = [], []
    w5 = w6 = None
    for k, idx in enumerate(t.ideal_idx):
        X = t.A[t.mul[:, idx]]  # X[r, i, m] = (r i) m
        nonzero = (X != 0).any(axis=1)
        sub = inN[X].all(axis=1)
        ImN = inN[t.A[idx]].all(axis=0)
        Im_in.append(ImN)
        Im_zero.append(t.zero_A[idx].all(axis=0))
        if w5 is None:
            hit = _first(nonzero & sub & ~inA & ~ImN[None, :])
            if hit is not None:
                w5 = (R[hit[0]], _ideal_label(t, k), mlab[hit[1]])
        if w6 is None:
            same0 = (sub == ~nonzero).all(axis=0)
            samem = (sub == inA).all(axis=0)
            hit = _first(~ImN & ~same0 & ~samem)
            if hit is not None:
                w6 = (_ideal_label(t, k), mlab[hit[0]])
    out.append(Decision(w5 is None, w5))
    out.append(Decision(w6 is None, w6))

    w7 = None
    nI = len(t.ideal_idx)
    for i in range(nI):
        for j in range(nI):
            K = t.ideal_product(i, j)
            KmN = inN[t.A[K]].all(axis=0)
            Kz = t.zero_A[K].all(axis=0)
            hit = _first(~Kz & KmN & ~Im_in[i] & ~Im_in[j])
            if hit is not None:
                w7 = (_ideal_label(t, i), _ideal_label(t, j), mlab[hit[0]])
                break
        if w7 is not None:
            break
    out.append(Decision(w7 is None, w7))
    return Conditions(tuple(out))


def main2_conditions(N):
    """Conditions (1)-(7) of the submodule-wise characterization (L over all submodules)."""
    _require_proper(N)
    M = N.module
    t = tables(M)
    subs, L, annL = t.lattice(M)
    inN = N.flags
    inA = inN[t.A]
    inAB = inN[t.AB]
    R = t.ring.labels
    colNL = ~(L[:, None, :] & ~inA[None]).any(axis=2)  # (nsub, s): c L in N
    out = [Decision(classify(N).weakly_classical_prime,
                    classify(N).witnesses.get("weakly_classical_prime"))]

    # (2) (N:_M ab) equals one of (0:_M ab), (N:_M a), (N:_M b)
    ok = ((inAB == t.zero_AB).all(axis=2) | (inAB == inA[:, None, :]).all(axis=2)
          | (inAB == inA[None, :, :]).all(axis=2))
    hit = _first(~ok)
    out.append(Decision(hit is None, hit and (R[hit[0]], R[hit[1]])))

    # (3) 0 != abL in N  =>  aL in N or bL in N
    mul = t.mul
    viol = (~annL[:, mul] & colNL[:, mul] & ~colNL[:, :, None] & ~colNL[:, None, :])
    hit = _first(viol)
    out.append(Decision(hit is None, hit and (R[hit[1]], R[hit[2]], subs[hit[0]].generators)))

    # (4) aL not in N  =>  (N:_R aL) = (0:_R aL) or (N:_R L)
    T = colNL[:, mul]  # T[l, a, r]: r a L in N
    U = annL[:, mul]
    ok = (T == U).all(axis=2) | (T == colNL[:, None, :]).all(axis=2)
    hit = _first(~colNL & ~ok)
    out.append(Decision(hit is None, hit and (R[hit[1]], subs[hit[0]].generators)))

    # per-ideal containment data: I in (N:L), I in Ann(L)
    ideal_in = np.array([colNL[:, idx].all(axis=1) for idx in t.ideal_idx]).T  # (nsub, nI)
    ideal_ann = np.array([annL[:, idx].all(axis=1) for idx in t.ideal_idx]).T

    # (5) 0 != aIL in N  =>  aL in N or IL in N
    w5 = None
    for k, idx in enumerate(t.ideal_idx):
        aI = mul[:, idx]  # (s, |I|)
        sub = colNL[:, aI].all(axis=2)
        nz = ~annL[:, aI].all(axis=2)
        hit = _first(nz & sub & ~colNL & ~ideal_in[:, k][:, None])
        if hit is not None:
            w5 = (R[hit[1]], _ideal_label(t, k), subs[hit[0]].generators)
            break
    out.append(Decision(w5 is None, w5))

    # (6) IL not in N  =>  (N:_R IL) = (0:_R IL) or (N:_R L)
    w6 = None
    for k, idx in enumerate(t.ideal_idx):
        rI = mul[:, idx]
        colIL = colNL[:, rI].all(axis=2)  # (nsub, s)
        annIL = annL[:, rI].all(axis=2)
        ok = (colIL == annIL).all(axis=1) | (colIL == colNL).all(axis=1)
        hit = _first(~ideal_in[:, k] & ~ok)
        if hit is not None:
            w6 = (_ideal_label(t, k), subs[hit[0]].generators)
            break
    out.append(Decision(w6 is None, w6))

    # (7) 0 != IJL in N  =>  IL in N or JL in N
    w7 = None
    nI = len(t.ideal_idx)
    for i in range(nI):
        for j in range(nI):
            K = t.ideal_product(i, j)
            sub = colNL[:, K].all(axis=1)
            nz = ~annL[:, K].all(axis=1)
            hit = _first(nz & sub & ~ideal_in[:, i] & ~ideal_in[:, j])
            if hit is not None:
                w7 = (_ideal_label(t, i), _ideal_label(t, j), subs[hit[0]].generators)
                break
        if w7 is not None:
            break
    out.append(Decision(w7 is None, w7))
    return Conditions(tuple(out))


def colon_element_union(N):
    """Check (N:_R abm) = (0:_R abm) u (N:_R am) u (N:_R bm) for all a, b, m.

    Returns ``(union_holds, equals_one_holds)`` as Decisions; the second is the
    stronger statement that the colon equals one of the three ideals.
    """
    M = N.module
    t = tables(M)
    inA = N.flags[t.A]
    C, Z = inA.T, t.zero_A.T  # indexed by element
    x_ab = t.AB  # abm
    x_a = t.A[:, None, :].repeat(t.s, axis=1)  # am
    x_b = t.A[None, :, :].repeat(t.s, axis=0)  # bm
    lhs, z = C[x_ab], Z[x_ab]
    ca, cb = C[x_a], C[x_b]
    union_ok = (lhs == (z | ca | cb)).all(axis=3)
    one_ok = (lhs == z).all(axis=3) | (lhs == ca).all(axis=3) | (lhs == cb).all(axis=3)
    R, mlab = t.ring.labels, M.labels

    def dec(ok):
        hit = _first(~ok)
        return Decision(hit is None, hit and (R[hit[0]], R[hit[1]], mlab[hit[2]]))

    return dec(union_ok), dec(one_ok)


__all__ = [
    "CLASSES",
    "ClassificationReport",
    "Conditions",
    "TripleZero",
    "classical_triple_zeros",
    "classify",
    "colon_element_union",
    "is_classical_prime",
    "is_free_triple_zero",
    "is_prime_submodule",
    "is_weakly_classical_prime",
    "main2_conditions",
    "main_conditions",
    "witness_violates",
]
