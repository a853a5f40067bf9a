"""Smoke tests for the python bindings."""

import pytest

import tyk


def test_pair_properties():
    p = tyk.pair("so5/so4")
    assert p.N == 5
    assert p.q == 1
    assert p.kappa == "3/2"
    assert p.ell == 2
    assert p.kay == 0
    assert tyk.pair({"family": "DIa", "N": 6, "q": 2}).id == "so6/so4+so2"


def test_verify_trivial_solution():
    out = tyk.verify("so5/so4", "trivial")
    assert out["all_hold"]
    assert [r["identity"] for r in out["reports"]] == ["RE", "SYM", "TRACE", "UNITARITY"]


def test_verify_kmatrix():
    out = tyk.verify("so6/so4+so2", "kmatrix")
    assert out["all_hold"]


def test_classify_trivial_weight():
    w = tyk.trivial_weight("so5/so4")
    verdict = tyk.classify(w)
    assert verdict["verdict"] == "FiniteDim"
    assert verdict["tuple"]["alpha"] == "5/4"


def test_classify_tuple_with_missing_string():
    t = {"pair": "so5/so4", "alpha": "7/4", "polys": [1, 1]}
    verdict = tyk.classify(t)
    assert verdict["verdict"] == "NotFiniteDim"
    assert verdict["violations"]


def test_twist_round_trip():
    t = {"pair": "so5/so4", "alpha": "3/4", "polys": [1, 1]}
    tw = tyk.psi_twist(t)
    assert tw["alpha"] == "7/4"
    roots = {r for r, _ in tw["polys"][1]["roots"]}
    assert roots == {"3/4", "5/4"}
    assert tyk.psi_twist(tw)["alpha"] == "3/4"


def test_synthesize_associate_round_trip():
    t = {
        "pair": "so6/so4+so2",
        "alpha": "3/2",
        "polys": [1, {"roots": [["1", 1], ["2", 1]], "center": "3"}, 1],
    }
    w = tyk.synthesize(t)
    back = tyk.associate(w)
    assert back["alpha"] == "3/2"
    assert back["polys"][1]["roots"] == [["1", 1], ["2", 1]]


def test_evaluate_so3():
    out = tyk.evaluate("so3", ["0"])
    assert out["tuple"]["alpha"] == "3/4"
    out1 = tyk.evaluate("so3", ["1"])
    assert out1["tuple"]["alpha"] == "7/4"


def test_restrict():
    t = {"pair": "so7/so6", "alpha": "7/4", "polys": [1, 1, 1]}
    r = tyk.restrict(t, 1)
    assert r["alpha"] == "5/4"
    assert r["pair"]["N"] == 5


def test_scalar_functions():
    assert tyk.string_set("3", "1") == ["1", "2"]
    assert tyk.g_weight({"pair": "so6/so4+so2", "alpha": "7/4", "polys": [1, 1, 1]}) == [
        "0",
        "0",
        "1/4",
    ]


def test_errors_are_value_errors():
    broken = {
        "pair": "so5/so4",
        "alpha": "3/4",
        "polys": [{"roots": [["1", 1]], "center": "5/2"}, 1],
    }
    with pytest.raises(ValueError):
        tyk.classify(broken)
    with pytest.raises(ValueError):
        tyk.pair("so2")
