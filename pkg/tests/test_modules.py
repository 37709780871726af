import itertools

import pytest

from conftest import brute_submodules, scalars
from weakclassical import (
    InvalidSubmodule,
    MultiplicativeSet,
    NotAHomomorphism,
    RingMismatch,
    TooLarge,
    act_elem,
    act_span,
    colon_module,
    colon_ring,
    enumerate_submodules,
    hom_image,
    hom_preimage,
    ideal_from_generators,
    localize_module,
    make_hom,
    make_inclusion,
    make_module_abelian,
    make_module_cyclic,
    make_module_direct_sum,
    make_module_free,
    make_module_over_product,
    make_module_quotient,
    make_projection,
    make_ring_product,
    make_ring_zn,
    module_flags,
    parse_module,
    submodule_generate,
)

Z = make_ring_zn


def R_over_itself(n):
    return make_module_cyclic(Z(n), ideal_from_generators(Z(n), []))


def sub(M, *gens):
    return submodule_generate(M, list(gens))


# -- constructors ---------------------------------------------------------------------


def test_cyclic_modules():
    assert R_over_itself(4).size == 4
    assert make_module_cyclic(Z(12), ideal_from_generators(Z(12), [4])).size == 4
    assert make_module_cyclic(Z(2), ideal_from_generators(Z(2), [1])).is_degenerate


def test_abelian_modules():
    assert make_module_abelian([8]).exponent == 8
    assert make_module_abelian([2, 3]).exponent == 6
    assert make_module_abelian([4, 2]).exponent == 4
    assert make_module_abelian([]).is_degenerate


def test_direct_sums():
    M = make_module_direct_sum([R_over_itself(4), make_module_cyclic(Z(4), ideal_from_generators(Z(4), [2]))])
    assert M.size == 8
    assert make_module_direct_sum([R_over_itself(5)]).size == 5
    with pytest.raises(RingMismatch):
        make_module_direct_sum([R_over_itself(2), R_over_itself(3)])


def test_modules_over_products():
    R = make_ring_product([Z(2), Z(3)])
    M = make_module_over_product(R, [R_over_itself(2), R_over_itself(3)])
    assert M.size == 6
    assert M.act((1, 2), (1, 1)) == (1, 2)
    R3 = make_ring_product([Z(2), Z(3), Z(5)])
    assert make_module_over_product(R3, [R_over_itself(2), R_over_itself(3), R_over_itself(5)]).size == 30
    with pytest.raises(Exception):
        make_module_over_product(R, [R_over_itself(2), R_over_itself(3), R_over_itself(5)])


def test_quotient_modules():
    M = make_module_abelian([8])
    Q, p = make_module_quotient(M, sub(M, 4))
    assert Q.size == 4 and p.surjective and p.kernel == sub(M, 4)
    Q0, _ = make_module_quotient(M, M.zero)
    assert Q0.size == 8
    Qm, _ = make_module_quotient(M, M.whole)
    assert Qm.is_degenerate
    other = make_module_abelian([4])
    with pytest.raises(InvalidSubmodule):
        make_module_quotient(M, sub(other, 2))


def test_free_modules():
    assert make_module_free(Z(4), 2).size == 16
    assert make_module_free(Z(4), 1).size == 4
    assert make_module_free(Z(4), 0).is_degenerate


def test_submodule_generate_examples():
    M = make_module_abelian([8])
    assert sub(M, 4).elements == (0, 4)
    assert sub(M).elements == (0,)
    V = make_module_direct_sum([R_over_itself(2), R_over_itself(2)])
    assert sub(V, (1, 0)).elements == ((0, 0), (1, 0))


def test_enumeration_examples():
    assert len(enumerate_submodules(R_over_itself(12))) == 6
    V = make_module_direct_sum([R_over_itself(2), R_over_itself(2)])
    assert len(enumerate_submodules(V)) == 5
    assert len(enumerate_submodules(make_module_abelian([]))) == 1
    with pytest.raises(TooLarge):
        enumerate_submodules(make_module_free(Z(9), 2), bound=64)


@pytest.mark.parametrize("desc", ["ab(2,2)", "ab(2,4)", "ab(8)", "cyc(Z6;0)", "dsum(cyc(Z4;0),cyc(Z4;2))",
                                  "pmod(prod(Z2,Z4);cyc(Z2;0),cyc(Z4;0))", "free(Z2;3)", "qmod(ab(2,4);(1,2))"])
def test_enumeration_matches_brute_force(desc):
    M = parse_module(desc)
    got = [frozenset(N.elements) for N in enumerate_submodules(M)]
    assert sorted(got, key=sorted) == sorted(brute_submodules(M), key=sorted)
    # canonical order: size first
    assert [len(x) for x in got] == sorted(len(x) for x in got)


def test_lattice_closed_under_meet_and_join(small_modules):
    for M in small_modules[:40]:
        subs = set(M.submodules)
        for A, B in itertools.combinations(M.submodules, 2):
            assert (A & B) in subs and (A + B) in subs


def test_module_axioms_hold(small_modules):
    for M in small_modules:
        assert M.validate()


# -- colons and actions ---------------------------------------------------------------------


def test_colon_ring_examples():
    M = R_over_itself(12)
    assert colon_ring(sub(M, 4), M.whole).elements == (0, 4, 8)
    Z4 = make_module_abelian([4])
    assert colon_ring(Z4.zero, Z4.whole).d == 4
    assert colon_ring(sub(M, 4), 0).is_whole


def test_colon_module_examples():
    M = R_over_itself(12)
    N = sub(M, 4)
    assert colon_module(N, 2) == sub(M, 2)
    assert colon_module(N, 1) == N
    assert colon_module(N, 0) == M.whole
    assert colon_module(N, 2, 3) == colon_module(N, 6)


def test_colon_duality_and_containment(small_instances):
    for N in small_instances[:300]:
        M = N.module
        for a in scalars(M):
            C = colon_module(N, a)
            assert N <= C
            for m in M.labels:
                assert (a in colon_ring(N, m)) == (m in C)


def test_act_examples():
    M = R_over_itself(12)
    I = ideal_from_generators(Z(12), [2])
    assert act_span(I, M.whole) == sub(M, 2)
    assert act_span(I, M.zero) == M.zero
    Z8 = make_module_abelian([8])
    assert act_span(ideal_from_generators(Z8.ring, [2]), sub(Z8, 2)).elements == (0, 4)
    assert act_elem(3, 5, Z8) == 7
    with pytest.raises(RingMismatch):
        act_span(ideal_from_generators(Z(6), [2]), M.whole)


def test_integer_scalars_reduce_mod_exponent():
    for desc in ["ab(8)", "ab(2,6)", "ab(3,3)"]:
        M = parse_module(desc)
        e = M.exponent
        for a in range(3 * e):
            for m in M.labels:
                assert M.act(a, m) == M.act(a % e, m)


def test_module_flags_examples():
    f = module_flags(R_over_itself(4))
    assert f.faithful and f.cyclic and not f.torsion_free
    V = make_module_direct_sum([R_over_itself(2), R_over_itself(2)])
    f = module_flags(V)
    assert f.faithful and not f.cyclic
    f = module_flags(make_module_abelian([]))
    assert f.torsion_free and f.degenerate
    # integer scalars are never faithful on a finite module; the annihilator is reported
    f = module_flags(make_module_abelian([4]))
    assert not f.faithful and f.annihilator.d == 4
    M = R_over_itself(6)
    f = module_flags(M, sub(M, 2))
    assert f.zero_divisors == (0, 2, 3, 4) and f.zero_divisors_quotient == (0, 2, 4)


# -- homomorphisms ------------------------------------------------------------------------


def test_hom_examples():
    Z8 = make_module_abelian([8])
    inc = make_inclusion(sub(Z8, 2))
    assert inc.injective and inc.kernel.is_zero
    p = make_projection(Z8, sub(Z8, 4))
    assert p.surjective and p.kernel == sub(Z8, 4)
    Z4 = R_over_itself(4)
    with pytest.raises(NotAHomomorphism):
        make_hom(Z4, Z4, {1: 2, 2: 1})
    assert make_hom(Z4, Z4, {1: 2}).table.tolist() == [0, 2, 0, 2]


def test_image_and_preimage_examples():
    Z8 = make_module_abelian([8])
    p = make_projection(Z8, sub(Z8, 4))
    assert hom_preimage(p, p.target.zero) == sub(Z8, 4)
    ident = make_hom(Z8, Z8, {1: 1})
    assert hom_image(ident, sub(Z8, 2)) == sub(Z8, 2)
    inc = make_inclusion(sub(Z8, 2))
    assert hom_image(inc, inc.source.whole).elements == (0, 2, 4, 6)


def test_hom_round_trips(small_modules):
    for M in small_modules[:30]:
        for K in M.submodules:
            p = make_projection(M, K)
            for N in M.submodules:
                img = hom_image(p, N)
                assert hom_image(p, hom_preimage(p, img)) <= img
                if K <= N:
                    assert hom_preimage(p, img) == N


# -- localization ----------------------------------------------------------------------------


def test_localization_examples():
    M = R_over_itself(6)
    loc = localize_module(M, MultiplicativeSet(M.ring, [3]))
    assert loc.module.size == 2 and loc.ring.size == 2
    loc1 = localize_module(M, MultiplicativeSet(M.ring, []))
    assert loc1.module.size == 6
    loc0 = localize_module(M, MultiplicativeSet(M.ring, [0]))
    assert loc0.module.is_degenerate


def test_localization_size_identity(small_modules):
    for M in small_modules:
        if not M.ring.is_finite:
            continue
        for s in M.ring.labels:
            S = MultiplicativeSet(M.ring, [s])
            loc = localize_module(M, S)
            killed = [m for m in M.labels if any(M.act(x, m) == M.labels[0] for x in S.elements)]
            assert loc.kernel.elements == tuple(killed)
            assert loc.module.size * loc.kernel.size == M.size
