import pytest

from conftest import SMALL
from weakclassical import InvalidParameter, classify, UnknownGoal, UnknownTheorem, witness_violates
from weakclassical.theorems import (
    ASSERT,
    FAIL,
    GOALS,
    OBSERVE,
    THEOREMS,
    Bounds,
    CheckOutcome,
    Theorem,
    checks,
    generate_instances,
    generate_modules,
    instance_for,
    parse_instance,
    replay,
    replay_outcome,
    run_suite,
    search_counterexample,
    theorem_ids,
    verify_instance,
    verify_theorem,
)
from weakclassical.theorems.outcome import observed

# -- generation -----------------------------------------------------------------------------


def test_small_ring_bound():
    mods = list(generate_modules(Bounds(ringmax=4)))
    zn = {M.ring.descriptor for M in mods if M.ring.descriptor.startswith("Z") and M.ring.descriptor != "ZZ"}
    assert zn == {"Z2", "Z3", "Z4"}
    for M in mods:
        if M.ring.descriptor.startswith("prod("):
            assert all(int(f) <= 4 for f in M.ring.descriptor[5:-1].replace("Z", "").split(","))
    # integer-scalar modules are bounded by size only
    assert "ab(36)" in {M.descriptor for M in mods}


def test_default_bounds_include_three_factor_ring_over_itself():
    descs = {M.descriptor for M in generate_modules()}
    assert "pmod(prod(Z2,Z3,Z5);cyc(Z2;0),cyc(Z3;0),cyc(Z5;0))" in descs
    assert "cyc(Z16;0)" in descs and "ab(36)" in descs and "ab(6,6)" in descs


def test_generation_is_duplicate_free_and_within_bounds():
    b = Bounds()
    mods = list(generate_modules(b))
    assert len({M.descriptor for M in mods}) == len(mods)
    assert all(1 < M.size <= b.modmax for M in mods)
    insts = list(generate_instances(Bounds(ringmax=8, modmax=16)))
    assert len(set(insts)) == len(insts)


def test_generation_is_deterministic_and_extension_stable():
    small = [M.descriptor for M in generate_modules(SMALL)]
    assert small == [M.descriptor for M in generate_modules(SMALL)]
    big = [M.descriptor for M in generate_modules()]
    pos = [big.index(d) for d in small]
    assert pos == sorted(pos)


def test_instances_round_trip():
    for inst in generate_instances(SMALL):
        assert parse_instance(inst.to_text()) == inst


# -- single checks ------------------------------------------------------------------------------


def test_t2_on_zero_of_z4():
    o = verify_theorem(parse_instance("mod=cyc(Z4;0); sub=sub()"), "T_T2")
    assert o.status == "Pass" and o.mode == ASSERT


def test_product3_needs_wcp():
    inst = parse_instance("mod=pmod(prod(Z2,Z3,Z5);cyc(Z2;0),cyc(Z3;0),cyc(Z5;0)); sub=sub((1,0,0))")
    o = verify_theorem(inst, "T_PRODUCT3")
    assert o.status == "NotApplicable"
    assert witness_violates(inst.submodule, "weakly_classical_prime", ((1, 1, 0), (1, 0, 1), (1, 1, 1)))


def test_main_on_fixtures():
    for text in ["mod=ab(8); sub=sub(4)", "mod=ab(4); sub=sub()", "mod=cyc(Z12;0); sub=sub(4)"]:
        assert verify_theorem(parse_instance(text), "T_MAIN").status == "Pass"


def test_unknown_ids_and_modes():
    inst = parse_instance("mod=ab(4); sub=sub()")
    with pytest.raises(UnknownTheorem):
        verify_theorem(inst, "BOGUS")
    with pytest.raises(UnknownTheorem):
        theorem_ids("T_MAIN,BOGUS")
    with pytest.raises(InvalidParameter):
        verify_theorem(inst, "T_T2", OBSERVE)
    with pytest.raises(UnknownGoal):
        search_counterexample("BOGUS")


def test_verify_instance_covers_every_mode():
    outs = verify_instance(parse_instance("mod=cyc(Z4;0); sub=sub(2)"))
    assert [(o.theorem, o.mode) for o in outs] == [(t.id, m) for t in THEOREMS.values() for m in t.modes]
    assert not any(o.failed for o in outs)


def test_fail_only_in_assert_mode(default_report):
    for t in default_report.tallies:
        if t.mode == OBSERVE:
            assert t.counts[FAIL] == 0 and t.counts["Pass"] == 0


# -- suite --------------------------------------------------------------------------------------


def test_empty_bounds():
    rep = run_suite(Bounds.empty())
    assert rep.modules == rep.instances == 0 and rep.exit_code == 0
    assert all(t.total == 0 for t in rep.tallies)


def test_main_only_default_sweep(default_report):
    t = default_report.tally("T_MAIN")
    assert t.counts["Pass"] == default_report.instances and t.counts[FAIL] == 0


def test_totals_equal_instance_count(default_report):
    for t in default_report.tallies:
        assert t.total == default_report.instances, t.id


def test_no_assert_failures_by_default(default_report):
    assert default_report.assert_failures == 0 and default_report.exit_code == 0


def test_filtered_suite_matches_full_suite():
    full = run_suite(SMALL)
    only = run_suite(SMALL, theorems="T_MAIN2", modes=OBSERVE)
    assert [t.to_dict() for t in only.tallies] == [full.tally("T_MAIN2", OBSERVE).to_dict()]


def test_worker_count_does_not_change_report():
    b = Bounds(ringmax=8, modmax=16, arity=2)
    assert run_suite(b, workers=1).to_json() == run_suite(b, workers=2).to_json()


def test_observed_false_is_listed_but_never_fails(monkeypatch):
    def fake(N):
        return {OBSERVE: observed(not N.is_zero, {"note": "zero submodule"})}

    monkeypatch.setitem(THEOREMS, "T_FAITH", Theorem("T_FAITH", (OBSERVE,), fake, "stub"))
    rep = run_suite(SMALL, theorems="T_FAITH")
    t = rep.tally("T_FAITH", OBSERVE)
    assert t.counts["observed_false"] == rep.modules
    assert rep.exit_code == 0
    assert len(rep.gallery) == min(rep.modules, 25)
    assert rep.gallery[0]["status"] == "Observed" and rep.gallery[0]["truth"] is False
    assert "zero submodule" in rep.to_markdown()


def test_vacuous_flag(monkeypatch):
    def never(N):
        return {ASSERT: checks.not_applicable("never")}

    assert not run_suite(SMALL, theorems="T_CYCLIC").tally("T_CYCLIC").vacuous
    monkeypatch.setitem(THEOREMS, "T_CYCLIC", Theorem("T_CYCLIC", (ASSERT,), never, "stub"))
    rep = run_suite(SMALL, theorems="T_CYCLIC")
    assert rep.tally("T_CYCLIC").vacuous and "VACUOUS" in rep.to_markdown()


# -- mutation: the harness can fail, and replay catches bogus evidence ----------------------------


def test_mutated_hypothesis_gate_produces_fail(monkeypatch):
    inst = parse_instance("mod=ab(6); sub=sub(3)")
    assert verify_theorem(inst, "T_T2").status == "NotApplicable"
    monkeypatch.setattr(checks, "_wcp_not_cp", lambda N: True)
    o = verify_theorem(inst, "T_T2")
    assert o.failed
    rep = run_suite(Bounds(ringmax=6, modmax=6, arity=2), theorems="T_T2")
    assert rep.assert_failures > 0 and rep.exit_code == 1
    assert any(e["instance"] == inst.to_text() for e in rep.gallery)
    monkeypatch.undo()
    # a fresh, unmutated re-run does not reproduce the failure
    r = replay_outcome(o)
    assert not r and "reproduce" in r.reason


def test_replay_rejects_witness_that_does_not_violate(monkeypatch):
    inst = parse_instance("mod=cyc(Z12;0); sub=sub(4)")
    bogus = checks.passed(False, {"triple": [1, 1, 1]})
    o = CheckOutcome("T_COLON", ASSERT, FAIL, inst, bogus.truth, bogus.witness)
    monkeypatch.setattr(replay, "run_checks", lambda th, N: {ASSERT: bogus})
    r = replay_outcome(o)
    assert not r and "triple" in r.reason


def test_replay_accepts_genuine_violation(monkeypatch):
    inst = parse_instance("mod=ab(8); sub=sub(4)")
    real = checks.passed(False, {"triple": [2, 2, 1]})
    o = CheckOutcome("T_COLON", ASSERT, FAIL, inst, real.truth, real.witness)
    monkeypatch.setattr(replay, "run_checks", lambda th, N: {ASSERT: real})
    assert replay_outcome(o)


def test_replay_passes_non_findings():
    o = verify_theorem(parse_instance("mod=cyc(Z4;0); sub=sub()"), "T_MAIN2", OBSERVE)
    assert o.truth and replay_outcome(o)


# -- search --------------------------------------------------------------------------------------


def test_wcp_not_cp_finds_z4():
    r = search_counterexample("WCP_NOT_CP")
    assert r.found and r.instance.to_text() == "ring=ZZ; mod=ab(4); sub=sub()"
    assert r.witness == {"classical_prime": [2, 2, 1]}


def test_wcp_not_wp_found_and_genuine():
    r = search_counterexample("WCP_NOT_WP")
    assert r.found
    rep = classify(r.instance.submodule)
    assert rep.weakly_classical_prime and not rep.weakly_prime


def test_trivial_bounds_give_not_found():
    r = search_counterexample("PROD3_CONVERSE", Bounds(ringmax=2, modmax=2, arity=2))
    assert not r.found and r.to_dict()["status"] == "NotFound"


@pytest.mark.parametrize("goal", GOALS)
def test_search_is_monotone(goal):
    chain = [Bounds(ringmax=4, modmax=8, arity=2), Bounds(ringmax=8, modmax=16, arity=2),
             Bounds(ringmax=12, modmax=24, arity=3), Bounds()]
    found = [search_counterexample(goal, b).found for b in chain]
    for a, b in zip(found, found[1:]):
        assert not a or b


@pytest.mark.parametrize("goal", GOALS)
def test_search_agrees_with_first_instance_in_order(goal):
    b = Bounds(ringmax=8, modmax=16, arity=2)
    r = search_counterexample(goal, b)
    if r.found:
        M = r.instance.build_module()
        assert r.modules_searched == [m.descriptor for m in generate_modules(b)].index(M.descriptor) + 1
        assert instance_for(r.instance.submodule) == r.instance
