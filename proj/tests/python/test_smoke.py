"""End-to-end checks of the gravity_ss python surface."""

import pytest

import gravity_ss as gs

THREE_CUBES = {
    "n": 2,
    "cubes": [
        {"axes": [{"center": "0", "radius": "4/5"},
                  {"center": "3/4", "radius": "3/20"}]},
        {"axes": [{"center": "-1/5", "radius": "2/5"},
                  {"center": "1/5", "radius": "1/5"}]},
        {"axes": [{"center": "3/10", "radius": "2/5"},
                  {"center": "-2/5", "radius": "1/5"}]},
    ],
}

BINOMIAL_P2 = {
    "p": 2,
    "completeDegree": 12,
    "basis": [{"name": f"x{k}", "deg": 2 * k} for k in range(1, 7)],
    "coproduct": {
        "x3": [["x1", "x2", 1], ["x2", "x1", 1]],
        "x5": [["x1", "x4", 1], ["x4", "x1", 1]],
        "x6": [["x2", "x4", 1], ["x4", "x2", 1]],
    },
}


def test_geometry_report():
    report = gs.geometry(THREE_CUBES)
    assert report["exit_code"] == 0
    assert report["gravity_degree"] == 2
    assert report["skewer_degree"] == 1
    assert report["u"] == {"1": "0", "2": "1/2", "3": "1"}
    assert report["sigma"]["2"] == "3/4"
    assert report["decomposable"] == {"1": True, "2": False, "3": False}


def test_scalar_helpers():
    assert gs.gravity_degree(THREE_CUBES) == 2
    assert gs.skewer_degree(THREE_CUBES) == 1
    assert gs.u_value(THREE_CUBES, 2) == "1/2"
    assert gs.sigma(THREE_CUBES, 3) == "5/6"
    assert gs.overlap_d("0", "0", "1/2") == "1"
    assert gs.overlap_d("2", "0", "1/2") == "0"
    assert gs.m_clamp("1/3") == "2/3"
    assert gs.m_clamp("2/3") == "1"
    assert gs.koszul_sign([1, 0], [3, 5]) == -1
    assert gs.koszul_sign([1, 0], [2, 5]) == 1


def test_page_compare_and_csv():
    request = {"X": [1], "p": 2, "maxS": 5, "maxDegree": 12, "maxWeight": 6,
               "mode": "compare"}
    report = gs.page(request)
    assert report["exit_code"] == 0
    assert report["verdict"] == "equal"
    assert report["pages"]["E1"]["-1,2"] == 1
    csv = gs.page_csv(request)
    assert csv.splitlines()[0] == "page,s,t,weight,dim"
    assert "E1,-1,2,1,1" in csv.splitlines()


def test_page_e2_mode():
    request = {"X": [1], "p": 2, "maxS": 6, "maxDegree": 12, "maxWeight": 6,
               "mode": "e2"}
    report = gs.page(request)
    assert report["exit_code"] == 0
    assert "E2" in report["pages"]
    assert report["pages"]["E2"]["-1,2"] == 1


def test_cotor_report():
    report = gs.cotor(BINOMIAL_P2, max_s=6, max_degree=12)
    assert report["exit_code"] == 0
    assert report["cotor"]["0,0"] == 1
    assert report["cotor"]["-1,2"] == 1
    assert report["cotor"]["-3,12"] == 2
    assert not report["truncated"]


def test_cotor_truncation_warning():
    report = gs.cotor(BINOMIAL_P2, max_s=4, max_degree=14)
    assert report["exit_code"] == 3
    assert report["truncated"]
    assert report["completeDegree"] == 12


def test_verify():
    report = gs.verify({"X": [1], "p": 3, "maxS": 5, "maxDegree": 12, "maxWeight": 6})
    assert report["exit_code"] == 0
    assert report["ok"]
    assert all(report["checks"].values())


def test_gen_config_determinism():
    a = gs.gen_config(2, 4, seed=7)
    b = gs.gen_config(2, 4, seed=7)
    c = gs.gen_config(2, 4, seed=8)
    assert a == b
    assert a != c
    assert a["n"] == 2 and len(a["cubes"]) == 4
    assert gs.gravity_degree(a) >= 1


def test_validation_errors_raise():
    with pytest.raises(gs.GravityError):
        gs.geometry({"n": 2, "cubes": [{"axes": [{"center": "0", "radius": "1/2"}]}]})
    with pytest.raises(gs.GravityError):
        gs.page({"X": [1], "p": 4})
    with pytest.raises(gs.GravityError):
        gs.cotor({"p": 2, "basis": [{"name": "x", "deg": -1}], "coproduct": {}})
