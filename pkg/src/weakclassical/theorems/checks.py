"""One check per theorem id.

Each check takes a proper submodule N and returns ``{mode: Status}``. ASSERT
parts are statements proved without the um-ring hypothesis; OBSERVE parts
record the truth of statements that need it (no finite nonzero ring is a
um-ring), so they are reported but never fail.

All scans use the scalars of ``R/Ann(M)``, which act exactly like ``R``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from .._sets import bools_from_mask, indices_from_mask, mask_from_bools
from ..errors import NotProper
from ..modules import Submodule, _carrier_ideal, _zero_divisor_flags, annihilator, colon_ring, hom_image, hom_preimage
from ..multiplication import m_radical, nil_set, submodule_product
from ..predicates import classify, colon_element_union, main2_conditions, main_conditions, tables
from ..rings import Ideal, ideal_radical, is_principal_ring
from .env import env, weakly_prime
from .outcome import ASSERT, OBSERVE, not_applicable, observed, passed

# -- small helpers ---------------------------------------------------------------


def _py(x):
    """JSON-friendly copy: numpy scalars to ints, tuples kept (serialized as lists)."""
    if isinstance(x, (list, tuple)):
        return [_py(v) for v in x]
    if isinstance(x, dict):
        return {k: _py(v) for k, v in x.items()}
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    return x


def _gens(N):
    return _py(Submodule(N.module, N.mask).generators)


def _ideal_gens(I):
    return _py(I.canonical_generators)


def _wcp(N):
    return classify(N).weakly_classical_prime


def _triple(N):
    return _py(classify(N).witnesses.get("weakly_classical_prime"))


def _wcp_not_cp(N):
    rep = classify(N)
    return rep.weakly_classical_prime and not rep.classical_prime


def _colon_squared(N):
    """Reduced indices of (N:M), and of all products x1 x2 with x1, x2 in (N:M)."""
    t = tables(N.module)
    inA = N.flags[t.A]
    X = np.flatnonzero(inA.all(axis=1))
    return X, t.mul[np.ix_(X, X)].ravel()


def _element_colons(N):
    """(N :_R m) for every m outside N, as (m index, Ideal, weakly-prime Decision)."""
    M = N.module
    col = N.flags[M.action]
    out = []
    for m in np.flatnonzero(~N.flags):
        I = _carrier_ideal(M, col[:, m])
        out.append((int(m), I, weakly_prime(I)))
    return out


def _is_weakly_prime_colon(N):
    return weakly_prime(colon_ring(N, N.module.whole))


# -- structure-preservation ---------------------------------------------------------


def t_colon(N):
    M = N.module
    wcp = _wcp(N)
    cols = _element_colons(N)
    for m, I, wp in cols:
        faithful_m = M.ring.is_finite and int((M.action[:, m] == 0).sum()) == 1
        if wcp and faithful_m and not wp:
            return {ASSERT: passed(False, {"part": 1, "m": _py(M.labels[m]), "colon": _ideal_gens(I),
                                           "pair": _py(wp.witness)})}
    if all(wp for _, _, wp in cols) and not wcp:
        return {ASSERT: passed(False, {"part": 2, "triple": _triple(N)})}
    return {ASSERT: passed(True)}


def t_torsionfree(N):
    if not env(N.module).flags.torsion_free:
        return {ASSERT: not_applicable("M is not torsion-free")}
    all_wp = all(wp for _, _, wp in _element_colons(N))
    return {ASSERT: passed(all_wp == _wcp(N), {"wcp": _wcp(N), "all_colons_weakly_prime": all_wp})}


def t_hom(N):
    if not _wcp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime")}
    M, e = N.module, env(N.module)
    for L in M.submodules:
        if L <= N:
            continue
        f = e.inclusion(L)
        pre = hom_preimage(f, N)
        if not _wcp(pre):
            return {ASSERT: passed(False, {"part": "monomorphism", "L": _gens(L), "triple": _triple(pre)})}
    for K in M.submodules:
        if not K <= N:
            continue
        Q, p = e.quotient(K)
        img = hom_image(p, N)
        if not _wcp(img):
            return {ASSERT: passed(False, {"part": "epimorphism", "K": _gens(K), "triple": _triple(img)})}
    return {ASSERT: passed(True)}


def t_quot(N):
    if not _wcp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime")}
    M, e = N.module, env(N.module)
    for L in M.submodules:
        if L <= N:
            Q, p = e.quotient(L)
            img = hom_image(p, N)
            if not _wcp(img):
                return {ASSERT: passed(False, {"L": _gens(L), "triple": _triple(img)})}
    return {ASSERT: passed(True)}


def t_tower(N):
    M, e = N.module, env(N.module)
    applied = False
    for K in M.submodules:
        if not (K < N) or not _wcp(K):
            continue
        Q, p = e.quotient(K)
        if not _wcp(hom_image(p, N)):
            continue
        applied = True
        if not _wcp(N):
            return {ASSERT: passed(False, {"K": _gens(K), "triple": _triple(N)})}
    return {ASSERT: passed(True) if applied else not_applicable("no K < N with K and N/K weakly classical prime")}


def t_loc(N):
    M, e = N.module, env(N.module)
    if not M.ring.is_finite:
        return {ASSERT: not_applicable("localization needs a finite scalar ring")}
    wcp = _wcp(N)
    colon = colon_ring(N, M.whole)
    zd_n = (M.action[:, N.indices[1:]] == 0).any(axis=1)  # Z_R(N)
    zd_q = _zero_divisor_flags(M, N)  # Z_R(M/N)
    applied = False
    for S in e.multiplicative_sets:
        loc = e.localization(S)
        if loc.module.size * loc.kernel.size != M.size:
            return {ASSERT: passed(False, {"S": _py(S.generators), "size_identity": False})}
        SN = loc.transport(N)
        meets_colon = any(bool(colon.mask >> int(s) & 1) for s in S.indices)
        if wcp and not meets_colon:
            applied = True
            if SN.is_whole or not _wcp(SN):
                return {ASSERT: passed(False, {"part": 1, "S": _py(S.generators),
                                               "triple": None if SN.is_whole else _triple(SN)})}
        if (not SN.is_whole and not zd_n[S.indices].any() and not zd_q[S.indices].any()
                and _wcp(SN)):
            applied = True
            if not wcp:
                return {ASSERT: passed(False, {"part": 2, "S": _py(S.generators), "triple": _triple(N)})}
    return {ASSERT: passed(True) if applied else not_applicable("no multiplicative set meets the hypotheses")}


def t_rel(N):
    r = classify(N)
    ladder = [
        ("prime", "weakly_prime"),
        ("prime", "classical_prime"),
        ("weakly_prime", "weakly_classical_prime"),
        ("classical_prime", "weakly_classical_prime"),
        ("classical_prime", "two_absorbing"),
        ("weakly_classical_prime", "weakly_two_absorbing"),
        ("two_absorbing", "weakly_two_absorbing"),
    ]
    for a, b in ladder:
        if getattr(r, a) and not getattr(r, b):
            return {ASSERT: passed(False, {"implication": [a, b], "witness": _py(r.witnesses.get(b))})}
    if r.weakly_two_absorbing and _is_weakly_prime_colon(N) and not r.weakly_classical_prime:
        return {ASSERT: passed(False, {"implication": "converse", "triple": _triple(N)})}
    return {ASSERT: passed(True)}


def t_cyclic(N):
    if not env(N.module).flags.cyclic:
        return {ASSERT: not_applicable("M is not cyclic")}
    r = classify(N)
    return {ASSERT: passed(r.weakly_prime == r.weakly_classical_prime,
                           {"weakly_prime": r.weakly_prime, "wcp": r.weakly_classical_prime})}


def _triple_zero_tensor(N):
    t = tables(N.module)
    inA = N.flags[t.A]
    return t, inA, t.zero_AB & ~inA[:, None, :] & ~inA[None, :, :]


def _lattice_data(N):
    M = N.module
    t, inA, tz = _triple_zero_tensor(N)
    subs, L, _ = t.lattice(M)
    colNL = ~(L[:, None, :] & ~inA[None]).any(axis=2)  # (nsub, s): a K in N
    # tzK[l, a, b]: some k in K_l makes (a, b, k) a classical triple-zero
    tzK = (tz.reshape(t.s * t.s, -1).astype(np.int32) @ L.T.astype(np.int32) > 0)
    tzK = tzK.T.reshape(len(subs), t.s, t.s)
    return t, subs, colNL, tzK


def t_le1(N):
    if not _wcp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime")}
    t, subs, colNL, tzK = _lattice_data(N)
    abK = colNL[:, t.mul]
    viol = abK & ~tzK & ~colNL[:, :, None] & ~colNL[:, None, :]
    hit = np.argwhere(viol)
    if len(hit):
        k, a, b = hit[0]
        R = t.ring.labels
        return {ASSERT: passed(False, {"a": _py(R[a]), "b": _py(R[b]), "K": _gens(subs[k])})}
    return {ASSERT: passed(True)}


def t_free3(N):
    if not _wcp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime")}
    t, subs, colNL, tzK = _lattice_data(N)
    ideals = t.ideal_idx
    inside = np.array([colNL[:, I].all(axis=1) for I in ideals])  # (nI, nsub): IK in N
    for i, I in enumerate(ideals):
        for j, J in enumerate(ideals):
            prod_in = colNL[:, t.ideal_product(i, j)].all(axis=1)
            free = ~tzK[:, I][:, :, J].any(axis=(1, 2))
            bad = np.flatnonzero(prod_in & free & ~inside[i] & ~inside[j])
            if len(bad):
                ring = t.ring
                gi = Ideal(ring, mask=ring.ideal_masks[i]).canonical_generators
                gj = Ideal(ring, mask=ring.ideal_masks[j]).canonical_generators
                return {ASSERT: passed(False, {"I": _py(gi), "J": _py(gj), "K": _gens(subs[bad[0]])})}
    return {ASSERT: passed(True)}


# -- characterizations ----------------------------------------------------------------


def _conditions_witness(conds):
    return {"truth": list(conds.truth),
            "witnesses": {str(k + 1): _py(v.witness) for k, v in enumerate(conds.values)
                          if v.witness is not None}}


def t_main(N):
    conds = main_conditions(N)
    return {ASSERT: passed(conds.all_equal, _conditions_witness(conds))}


def t_main2(N):
    c = main2_conditions(N)
    asserted = [(7, 5), (5, 3), (6, 4), (2, 1)]
    bad = [[p, q] for p, q in asserted if c[p] and not c[q]]
    w = _conditions_witness(c)
    return {ASSERT: passed(not bad, {**w, "implications": bad}),
            OBSERVE: observed(c.all_equal, w)}


def t_multprop(N):
    M, e = N.module, env(N.module)
    if not e.multiplication:
        return {ASSERT: not_applicable("M is not a multiplication module")}
    t = tables(M)
    red = t.ring
    # colon ideals (N_i : M) of all submodules, as reduced masks
    subs = M.submodules
    colons = sorted({mask_from_bools(N_i.flags[t.A].all(axis=1)) for N_i in subs})
    idx = [indices_from_mask(c, t.s) for c in colons]
    inA = N.flags[t.A]
    Im_in = [inA[I].all(axis=0) for I in idx]
    cond2, witness = True, None
    for i in range(len(colons)):
        for j in range(i, len(colons)):
            P = indices_from_mask(red.product_mask(colons[i], colons[j]), t.s)
            hit = np.flatnonzero(~t.zero_A[P].all(axis=0) & inA[P].all(axis=0) & ~Im_in[i] & ~Im_in[j])
            if len(hit):
                cond2 = False
                witness = {"N1_colon": _py(Ideal(red, mask=colons[i]).canonical_generators),
                           "N2_colon": _py(Ideal(red, mask=colons[j]).canonical_generators),
                           "m": _py(M.labels[hit[0]])}
                break
        if not cond2:
            break
    return {ASSERT: passed(cond2 == _wcp(N), {"wcp": _wcp(N), "condition_2": cond2, "detail": witness})}


def t_faith(N):
    M = N.module
    if not M.ring.is_finite or not env(M).flags.faithful:
        return {OBSERVE: not_applicable("M has no faithful submodule (M is not faithful)")}
    if not _wcp(N):
        return {OBSERVE: not_applicable("N is not weakly classical prime")}
    applied = False
    for L in M.submodules:
        if L <= N or not annihilator(M, L).is_zero:
            continue
        applied = True
        I = colon_ring(N, L)
        wp = weakly_prime(I)
        if not wp:
            return {OBSERVE: observed(False, {"L": _gens(L), "colon": _ideal_gens(I), "pair": _py(wp.witness)})}
    return {OBSERVE: observed(True) if applied else not_applicable("no faithful L outside N")}


def t_nrabm(N):
    if not _wcp(N):
        na = not_applicable("N is not weakly classical prime")
        return {ASSERT: na, OBSERVE: na}
    union, one = colon_element_union(N)
    principal = is_principal_ring(N.module.ring)
    if not union:
        return {ASSERT: passed(False, {"part": 1, "abm": _py(union.witness)}),
                OBSERVE: not_applicable("part 1 failed")}
    if principal:
        return {ASSERT: passed(bool(one), {"part": 2, "abm": _py(one.witness)}),
                OBSERVE: not_applicable("principal ring: part 2 is asserted")}
    return {ASSERT: passed(True), OBSERVE: observed(one, {"part": 2, "abm": _py(one.witness)})}


def _fm_data(M):
    """Colon ideals of all submodules and the submodules their products generate."""
    e = env(M)
    data = e.__dict__.get("_fm_data")
    if data is not None:
        return data
    R = M.ring
    subs = M.submodules
    I = [colon_ring(S, M.whole) for S in subs]
    masks = [x.mask for x in I]
    span = {}

    def gen(mask):
        if mask not in span:
            span[mask] = M.span_mask(M.action[indices_from_mask(mask, len(R.labels))].ravel())
        return span[mask]

    n = len(subs)
    P2 = [[R.product_mask(masks[i], masks[j]) for j in range(n)] for i in range(n)]
    P2M = np.array([[gen(P2[i][j]) for j in range(n)] for i in range(n)], dtype=object)
    P3M = np.empty((n, n, n), dtype=object)
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                P3M[i, j, k] = P3M[j, i, k] = gen(R.product_mask(P2[i][j], masks[k]))
    data = e.__dict__["_fm_data"] = (subs, [S.mask for S in subs], P2M, P3M)
    return data


def t_fmult(N):
    M = N.module
    if not env(M).faithful_multiplication:
        na = not_applicable("M is not a faithful multiplication module")
        return {ASSERT: na, OBSERVE: na}
    subs, smask, P2M, P3M = _fm_data(M)
    n = len(subs)
    nm = N.mask

    def inside(x):
        return x & ~nm == 0

    c2, w2 = True, None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                p = P3M[i, j, k]
                if p != 1 and inside(p) and not inside(P2M[i, k]) and not inside(P2M[j, k]):
                    c2, w2 = False, [_gens(subs[i]), _gens(subs[j]), _gens(subs[k])]
                    break
            if not c2:
                break
        if not c2:
            break
    c3, w3 = True, None
    for i in range(n):
        for j in range(n):
            p = P2M[i, j]
            if p != 1 and inside(p) and not inside(smask[i]) and not inside(smask[j]):
                c3, w3 = False, [_gens(subs[i]), _gens(subs[j])]
                break
        if not c3:
            break
    r = classify(N)
    c1, c4 = r.weakly_classical_prime, r.weakly_prime
    c5 = bool(_is_weakly_prime_colon(N))
    truth = [c1, c2, c3, c4, c5]
    w = {"truth": truth, "N1N2N3": w2, "N1N2": w3}
    bad = [[p, q] for p, q in [(2, 3), (3, 4), (4, 1), (5, 4)] if truth[p - 1] and not truth[q - 1]]
    obs_bad = [[p, q] for p, q in [(1, 2), (1, 5)] if truth[p - 1] and not truth[q - 1]]
    return {ASSERT: passed(not bad, {**w, "implications": bad}),
            OBSERVE: observed(not obs_bad, {**w, "implications": obs_bad})}


def t_fgfm(N):
    M = N.module
    if not env(M).faithful_multiplication:
        na = not_applicable("M is not a faithful multiplication module")
        return {ASSERT: na, OBSERVE: na}
    c2 = bool(_is_weakly_prime_colon(N))
    found = None
    for I in M.ring.ideals:
        if I.is_whole or not weakly_prime(I):
            continue
        span = M.span_mask(M.action[I.indices].ravel())
        if span == N.mask:
            found = I
            break
    c3 = found is not None
    c1 = _wcp(N)
    w = {"truth": [c1, c2, c3], "ideal": None if found is None else _ideal_gens(found)}
    return {ASSERT: passed(c2 == c3, w), OBSERVE: observed(c1 == c2, w)}


# -- triple-zero consequences -----------------------------------------------------------


def t_t1(N):
    if not _wcp_not_cp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime without being classical prime")}
    t, inA, tz = _triple_zero_tensor(N)
    a, b, m = np.nonzero(tz)
    X, XX = _colon_squared(N)
    Ni = N.indices
    za = t.zero_A
    conc = np.array([
        t.zero_AB[a, b][:, Ni].all(axis=1),
        za[t.mul[a][:, X], m[:, None]].all(axis=1),
        za[t.mul[b][:, X], m[:, None]].all(axis=1),
        za[XX][:, m].all(axis=0),
        za[t.mul[a][:, X]][:, :, Ni].all(axis=(1, 2)),
        za[t.mul[b][:, X]][:, :, Ni].all(axis=(1, 2)),
    ])
    bad = np.argwhere(~conc)
    if len(bad):
        c, k = bad[0]
        R, lab = t.ring.labels, N.module.labels
        return {ASSERT: passed(False, {"conclusion": int(c) + 1,
                                       "triple": _py((R[a[k]], R[b[k]], lab[m[k]]))})}
    return {ASSERT: passed(True)}


def t_t2(N):
    if not _wcp_not_cp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime without being classical prime")}
    t = tables(N.module)
    _, XX = _colon_squared(N)
    return {ASSERT: passed(bool(t.zero_A[XX][:, N.indices].all()), {"colon_squared_N_zero": False})}


def t_ncube(N):
    if not env(N.module).multiplication:
        return {ASSERT: not_applicable("M is not a multiplication module")}
    if not _wcp_not_cp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime without being classical prime")}
    N3 = submodule_product(submodule_product(N, N), N)
    return {ASSERT: passed(N3.is_zero, {"N3": _gens(N3)})}


def _rad_int(d):
    return int(np.prod(sympy.primefactors(d))) if d > 1 else d


def t_nil(N):
    if not _wcp_not_cp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime without being classical prime")}
    M, e = N.module, env(N.module)
    col, ann = colon_ring(N, M.whole), annihilator(M)
    if M.ring.is_finite:
        ok1 = ideal_radical(col) == ideal_radical(ann)
    else:
        ok1 = _rad_int(col.d) == _rad_int(ann.d)
    if not ok1:
        return {ASSERT: passed(False, {"part": 1, "colon": _ideal_gens(col), "annihilator": _ideal_gens(ann)})}
    if e.multiplication:
        rad_n = m_radical(N).submodule
        rad_0 = m_radical(M.zero).submodule
        if rad_n != rad_0:
            return {ASSERT: passed(False, {"part": 2, "mrad_N": _gens(rad_n), "mrad_0": _gens(rad_0)})}
        if e.flags.faithful and M.ring.is_finite:
            nil = nil_set(M).submodule
            if nil != rad_n:
                return {ASSERT: passed(False, {"part": 2, "mrad_N": _gens(rad_n), "nil": _gens(nil)})}
    return {ASSERT: passed(True)}


def _all_ideals_weakly_prime(R):
    if not R.is_finite:
        return False  # 4Z is not weakly prime in Z
    key = ("_all_wp", R.descriptor)
    hit = _ALL_WP.get(key)
    if hit is None:
        hit = _ALL_WP[key] = all(weakly_prime(I) for I in R.ideals if not I.is_whole)
    return hit


_ALL_WP = {}


def _free_generator(M):
    """An element g with Rg = M and Ann_R(g) = 0 (so M is R over itself), or None."""
    e = env(M)
    if "_free_gen" not in e.__dict__:
        g = None
        if M.ring.is_finite and M.size == len(M.ring.labels):
            whole = (1 << M.size) - 1
            for m in range(M.size):
                if M.cyclic_masks[m] == whole and int((M.action[:, m] == 0).sum()) == 1:
                    g = m
                    break
        e.__dict__["_free_gen"] = g
    return e.__dict__["_free_gen"]


def t_ideal(N):
    M = N.module
    out = {}
    g = _free_generator(M)
    if g is None:
        out[ASSERT] = not_applicable("M is not R over itself")
    else:
        I = colon_ring(N, M.labels[g])
        wp = bool(weakly_prime(I))
        out[ASSERT] = passed(wp == _wcp(N), {"ideal": _ideal_gens(I), "weakly_prime": wp, "wcp": _wcp(N)})
    if _all_ideals_weakly_prime(M.ring):
        out[OBSERVE] = observed(_wcp(N), {"triple": _triple(N)})
    else:
        out[OBSERVE] = not_applicable("R has a proper ideal that is not weakly prime")
    return out


# -- direct sums over one ring --------------------------------------------------------------


def _split_cases(N):
    """(split, N1, N2) for every reading of N as a product N1 x N2."""
    for sp in env(N.module).splits:
        N1, N2, is_prod = sp.components(N)
        if is_prod:
            yield sp, N1, N2


def _carrier_rows(M, P):
    """Rows of P's action matching M's scalar carrier (integers act mod the exponent)."""
    rows = np.arange(M.action.shape[0])
    return rows if M.ring.is_finite else rows % P.exponent


def _prod1_condition(M, P1, N1, Q):
    """N1 wcp in P1, and rs m1 = 0 with r m1, s m1 outside N1 forces rs Q = 0."""
    if not _wcp(N1):
        return False
    A1 = P1.action[_carrier_rows(M, P1)]
    annQ = (Q.action[_carrier_rows(M, Q)] == 0).all(axis=1)
    mul = M.carrier.mul_table
    inA = N1.flags[A1]
    tz = (A1[mul] == 0) & ~inA[:, None, :] & ~inA[None, :, :]
    return not (tz & ~annQ[mul][:, :, None]).any()


def t_prod1(N):
    M = N.module
    applied = False
    for sp, N1, N2 in _split_cases(N):
        for P1, Nx, Q, Ny in ((sp.left, N1, sp.right, N2), (sp.right, N2, sp.left, N1)):
            if not Ny.is_whole or Nx.is_whole:
                continue
            applied = True
            c2 = _prod1_condition(M, P1, Nx, Q)
            if c2 != _wcp(N):
                return {ASSERT: passed(False, {"summand": P1.descriptor, "N1": _gens(Nx),
                                               "condition_1": _wcp(N), "condition_2": c2})}
    return {ASSERT: passed(True) if applied else not_applicable("N is not N1 x M2 for a direct sum")}


def t_clprod(N):
    applied = False
    for sp, N1, N2 in _split_cases(N):
        for Nx, Ny in ((N1, N2), (N2, N1)):
            if not Ny.is_whole or Nx.is_whole:
                continue
            applied = True
            if classify(Nx).classical_prime != classify(N).classical_prime:
                return {ASSERT: passed(False, {"N1": _gens(Nx), "summand": Nx.module.descriptor})}
    return {ASSERT: passed(True) if applied else not_applicable("N is not N1 x M2 for a direct sum")}


def t_prod3(N):
    applied = False
    rN = classify(N)
    for sp, N1, N2 in _split_cases(N):
        if N1.is_whole or N2.is_whole:
            continue
        applied = True
        r1, r2 = classify(N1), classify(N2)
        if rN.weakly_classical_prime and not (r1.weakly_classical_prime and r2.weakly_classical_prime):
            return {ASSERT: passed(False, {"kind": "weakly classical prime", "N1": _gens(N1), "N2": _gens(N2)})}
        if rN.classical_prime and not (r1.classical_prime and r2.classical_prime):
            return {ASSERT: passed(False, {"kind": "classical prime", "N1": _gens(N1), "N2": _gens(N2)})}
    return {ASSERT: passed(True) if applied else not_applicable("N is not N1 x N2 with proper factors")}


# -- modules over product rings ---------------------------------------------------------------


def _pmod_components(N, arity):
    M = N.module
    if M.kind != "pmod" or len(M.parts) != arity:
        return None, f"M is not a module over a {arity}-factor product ring"
    if any(P.is_degenerate for P in M.parts):
        return None, "a factor module is zero"
    comps, is_prod = env(M).product_components(N)
    if not is_prod:
        raise AssertionError("a submodule over a product ring failed to split")
    return comps, None


def t_product1(N):
    comps, why = _pmod_components(N, 2)
    if comps is None:
        return {ASSERT: not_applicable(why)}
    r = classify(N)
    for Nx, Ny in ((comps[0], comps[1]), (comps[1], comps[0])):
        if Ny.is_whole and not Nx.is_whole:
            truth = [classify(Nx).classical_prime, r.classical_prime, r.weakly_classical_prime]
            return {ASSERT: passed(len(set(truth)) == 1, {"N1": _gens(Nx), "truth": truth})}
    return {ASSERT: not_applicable("N is not N1 x M2")}


def t_product2(N):
    comps, why = _pmod_components(N, 2)
    if comps is None:
        return {ASSERT: not_applicable(why)}
    if any(c.is_whole for c in comps):
        return {ASSERT: not_applicable("a component equals its factor module")}
    if not _wcp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime")}
    wp = [classify(c).weakly_prime for c in comps]
    return {ASSERT: passed(all(wp), {"weakly_prime": wp,
                                     "witnesses": [_py(classify(c).witnesses.get("weakly_prime")) for c in comps]})}


def t_product3(N):
    comps, why = _pmod_components(N, 3)
    if comps is None:
        return {ASSERT: not_applicable(why)}
    if not _wcp(N):
        return {ASSERT: not_applicable("N is not weakly classical prime")}
    r = classify(N)
    return {ASSERT: passed(N.is_zero or r.classical_prime, {"triple": _py(r.witnesses.get("classical_prime"))})}


# -- free modules R^k -------------------------------------------------------------------------


def t_flatfree(N, bound=64):
    M, e = N.module, env(N.module)
    ks = [k for k in (2, 3) if M.size ** k <= bound]
    if not ks:
        na = not_applicable(f"|M|^2 exceeds {bound}")
        return {ASSERT: na, OBSERVE: na}
    wcp = _wcp(N)
    bad_a = bad_o = None
    for k in ks:
        Mk, digits = e.power(k)
        flags = np.ones(Mk.size, dtype=bool)
        for d in digits:
            flags &= N.flags[d]
        Nk = Submodule(Mk, mask_from_bools(flags))
        wk = _wcp(Nk)
        if wk and not wcp and bad_a is None:
            bad_a = {"k": k, "triple": _triple(N)}
        if wcp and not wk and bad_o is None:
            bad_o = {"k": k, "module": Mk.descriptor, "sub": _gens(Nk), "triple": _triple(Nk)}
    return {ASSERT: passed(bad_a is None, bad_a), OBSERVE: observed(bad_o is None, bad_o)}


# -- registry ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    id: str
    modes: tuple
    check: object
    summary: str


def _t(id, modes, check, summary):
    return Theorem(id, tuple(modes), check, summary)


A, O = (ASSERT,), (ASSERT, OBSERVE)
THEOREMS = {t.id: t for t in [
    _t("T_COLON", A, t_colon, "colon ideals (N:m) versus weakly classical primeness"),
    _t("T_TORSIONFREE", A, t_torsionfree, "torsion-free modules: wcp iff every (N:m) weakly prime"),
    _t("T_HOM", A, t_hom, "preimages under inclusions and images under projections"),
    _t("T_QUOT", A, t_quot, "N/L is wcp in M/L"),
    _t("T_TOWER", A, t_tower, "K and N/K wcp imply N wcp"),
    _t("T_LOC", A, t_loc, "localization at multiplicative sets"),
    _t("T_REL", A, t_rel, "implication ladder and the weakly 2-absorbing converse"),
    _t("T_CYCLIC", A, t_cyclic, "cyclic modules: weakly prime iff wcp"),
    _t("T_LE1", A, t_le1, "abK in N without triple-zeros gives aK or bK in N"),
    _t("T_FREE3", A, t_free3, "free triple-zero IJK in N gives IK or JK in N"),
    _t("T_MAIN", A, t_main, "seven element-wise characterizations agree"),
    _t("T_T1", A, t_t1, "six consequences of a classical triple-zero"),
    _t("T_T2", A, t_t2, "(N:M)^2 N = 0 when wcp but not classical prime"),
    _t("T_NCUBE", A, t_ncube, "N^3 = 0 in multiplication modules"),
    _t("T_NIL", A, t_nil, "radical of (N:M) equals radical of Ann(M)"),
    _t("T_IDEAL", O, t_ideal, "ideals of R over itself; rings whose proper ideals are all weakly prime"),
    _t("T_MULTPROP", A, t_multprop, "multiplication modules: products N1 N2 m"),
    _t("T_MAIN2", O, t_main2, "submodule-wise characterizations"),
    _t("T_FAITH", (OBSERVE,), t_faith, "(N:L) weakly prime for faithful L"),
    _t("T_NRABM", O, t_nrabm, "(N:abm) as a union of colon ideals"),
    _t("T_FMULT", O, t_fmult, "faithful multiplication modules: five conditions"),
    _t("T_FGFM", O, t_fgfm, "N = IM for a weakly prime ideal I"),
    _t("T_PROD1", A, t_prod1, "N1 x M2 in M1 x M2 over one ring"),
    _t("T_CLPROD", A, t_clprod, "N1 x M2 classical prime iff N1 is"),
    _t("T_PROD3", A, t_prod3, "N1 x N2 wcp implies both components are"),
    _t("T_PRODUCT1", A, t_product1, "over R1 x R2: N1 x M2 classical prime iff wcp"),
    _t("T_PRODUCT2", A, t_product2, "over R1 x R2: wcp N1 x N2 has weakly prime components"),
    _t("T_PRODUCT3", A, t_product3, "over R1 x R2 x R3: wcp means zero or classical prime"),
    _t("T_FLATFREE", O, t_flatfree, "N^k in M^k for the free module R^k"),
]}


def run_checks(theorem, N, targeted=64):
    """``{mode: Status}`` for one theorem on a proper submodule N."""
    if N.is_whole:
        raise NotProper("N equals the whole module")
    if theorem.id == "T_FLATFREE":
        return theorem.check(N, targeted)
    return theorem.check(N)


__all__ = ["THEOREMS", "Theorem", "run_checks"]
