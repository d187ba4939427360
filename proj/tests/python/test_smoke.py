"""Smoke tests for the python bindings.

Run after an editable install, or point PYTHONPATH at a build tree that
contains the compiled module next to python/invtopos.
"""

import pytest

invtopos = pytest.importorskip("invtopos")


def test_fixture_semigroups():
    b2 = invtopos.fixture_semigroup("B2")
    assert len(b2) == 5
    assert sorted(b2.idempotents()) == ["0", "e1", "e2"]
    assert b2.mul("a", "a'") == "e1"
    assert b2.inv("a") == "a'"
    assert b2.natural_leq("0", "a")


def test_json_round_trip():
    z3 = invtopos.fixture_semigroup("Z3")
    back = invtopos.InverseSemigroup.from_json(z3.to_json())
    assert back.elements == z3.elements


def test_action_checks():
    a = invtopos.fixture_action("ex33-action")
    assert a.is_strict()["holds"] is False
    assert a.is_connected()["holds"] is False
    assert a.is_connected()["witness"]["parts"] == ["2"]
    assert a.apply("g", "2") is None
    assert a.apply("e", "2") == "2"

    b2a = invtopos.fixture_action("b2-natural-action")
    assert b2a.is_torsor()
    assert b2a.is_universal()
    assert b2a.stabilizer("1") == ["e1"]


def test_phi_psi_round_trip():
    a = invtopos.fixture_action("ex33-action")
    f = invtopos.phi(a)
    assert f.is_torsion_free()["holds"]
    back = invtopos.psi(f)
    assert len(back.carrier) == 3
    beta = invtopos.beta_counit(a)
    assert sorted(set(beta["map"])) == ["1", "2"]


def test_functor_classification():
    f = invtopos.phi(invtopos.fixture_action("z3-regular"))
    assert f.is_filtered()["holds"]
    assert f.is_directed()["holds"]
    assert f.preserves_pullbacks()

    g = invtopos.phi(invtopos.fixture_action("z3-double"))
    assert not g.is_directed()["holds"]


def test_cosets_and_filters():
    b2 = invtopos.fixture_semigroup("B2")
    subs = invtopos.closed_inverse_subsemigroups(b2)
    assert ["e1"] in subs
    action = invtopos.coset_action(b2, ["e1"])
    assert len(action.carrier) == 2
    dec = invtopos.schein_decompose(invtopos.fixture_action("b2-natural-action"))
    assert dec["stabilizer"] == ["e1"]

    assert len(invtopos.filters_in_e(b2)) == 3
    assert len(invtopos.filters_in_s(b2)) == 5


def test_tensor_and_flatness():
    f = invtopos.phi(invtopos.fixture_action("z3-regular"))
    assert len(invtopos.tensor_with_representable(f, "1")) == 3
    report = invtopos.flatness_spotcheck(f)
    assert report["filtered"] and report["all_preserved"]

    g = invtopos.phi(invtopos.fixture_action("z3-double"))
    report_g = invtopos.flatness_spotcheck(g)
    assert not report_g["filtered"]
    assert not report_g["all_preserved"]


def test_random_instances_round_trip():
    for seed in range(3):
        a = invtopos.random_action(seed)
        f = invtopos.phi(a)
        assert f.is_torsion_free()["holds"]


def test_suite_fixtures_only():
    report = invtopos.run_suite(seed=7, fixtures_only=True)
    assert report["all_pass"], [c for c in report["criteria"] if not c["pass"]]
    assert len(report["criteria"]) == 12
