import pytest

from weakclassical import (
    NotApplicable,
    NotMultiplicationModule,
    act_span,
    classify,
    colon_ring,
    ideal_radical,
    is_multiplication,
    is_nilpotent_submodule,
    m_radical,
    make_module_abelian,
    nil_set,
    parse_module,
    presentation_independence_check,
    radical_formula,
    submodule_generate,
    submodule_product,
)
from weakclassical.theorems import Bounds, generate_modules


def sub(M, *gens):
    return submodule_generate(M, list(gens))


def test_is_multiplication_examples():
    assert is_multiplication(parse_module("cyc(Z12;0)"))
    V = parse_module("free(Z2;2)")
    d = is_multiplication(V)
    assert not d and d.witness.size == 2
    with pytest.raises(NotApplicable):
        is_multiplication(make_module_abelian([]))


def test_multiplication_oracle(small_modules):
    for M in small_modules:
        expect = all(act_span(colon_ring(N, M.whole), M.whole) == N for N in M.submodules)
        assert bool(is_multiplication(M)) == expect


def test_submodule_product_examples():
    M = parse_module("cyc(Z12;0)")
    assert submodule_product(sub(M, 2), sub(M, 3)) == sub(M, 6)
    N = sub(M, 4)
    assert submodule_product(N, M.whole) == N
    assert submodule_product(N, M.zero).is_zero
    with pytest.raises(NotMultiplicationModule):
        submodule_product(parse_module("free(Z2;2)").zero, parse_module("free(Z2;2)").zero)


def test_submodule_product_laws(small_modules):
    for M in small_modules:
        if not is_multiplication(M):
            continue
        subs = M.submodules
        for N in subs:
            for K in subs:
                NK = submodule_product(N, K)
                assert NK <= (N & K)
                assert NK == submodule_product(K, N)
                for L in subs[:4]:
                    assert submodule_product(NK, L) == submodule_product(N, submodule_product(K, L))


def test_presentation_independence():
    M = parse_module("cyc(Z12;0)")
    assert presentation_independence_check(sub(M, 2), sub(M, 3))
    assert presentation_independence_check(M.zero, sub(M, 3))
    for M in generate_modules(Bounds(ringmax=12, modmax=24, arity=2)):
        if not is_multiplication(M):
            continue
        for N in M.submodules[:4]:
            for K in M.submodules[:4]:
                assert presentation_independence_check(N, K)


def test_m_radical_examples():
    M = parse_module("cyc(Z12;0)")
    r = m_radical(sub(M, 4))
    assert r.submodule == sub(M, 2) and not r.is_whole_module
    P = sub(M, 3)
    assert classify(P).prime and m_radical(P).submodule == P


def test_m_radical_equals_radical_formula_on_multiplication_modules(small_modules):
    checked = 0
    for M in small_modules:
        if not is_multiplication(M):
            continue
        for N in M.submodules:
            if N.is_whole:
                continue
            r = m_radical(N)
            mask = (1 << M.size) - 1
            for P in r.witness_primes:
                mask &= P.mask
            assert r.submodule.mask == mask
            assert r.submodule == radical_formula(N)
            checked += 1
    assert checked > 50


def test_nilpotency_examples():
    M4 = parse_module("cyc(Z4;0)")
    assert is_nilpotent_submodule(M4.zero) == (True, 1)
    assert is_nilpotent_submodule(sub(M4, 2)) == (True, 1)
    M6 = parse_module("cyc(Z6;0)")
    assert is_nilpotent_submodule(sub(M6, 2)) == (False, None)


def test_nil_set_examples():
    assert nil_set(parse_module("cyc(Z4;0)")).elements == (0, 2)
    assert nil_set(parse_module("cyc(Z6;0)")).elements == (0,)
    assert nil_set(make_module_abelian([])).elements == (0,)


def test_nil_set_is_m_radical_of_zero(small_modules):
    for M in small_modules:
        if not M.ring.is_finite or not is_multiplication(M):
            continue
        res = nil_set(M)
        if res.submodule is not None:
            assert res.submodule == m_radical(M.zero).submodule
            assert res.submodule == act_span(ideal_radical(colon_ring(M.zero, M.whole)), M.whole)
