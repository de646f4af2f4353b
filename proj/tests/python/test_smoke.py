import json

import pytest

import loosepath as lp


def triangle_k5():
    c = lp.Coloring(5, 2, lp.Color.Blue)
    for e in ([1, 2], [1, 3], [2, 3]):
        c.set(e, lp.Color.Red)
    return c


def test_coloring_roundtrip():
    c = triangle_k5()
    assert c.edge_count == 10
    assert c.color([2, 3]) == lp.Color.Red
    assert c.color([4, 5]) == lp.Color.Blue
    text = c.to_json()
    assert json.loads(text)["blue_bits"] == "f803"
    assert lp.Coloring.from_json(text) == c
    assert c.swapped().swapped() == c


def test_ranks():
    assert lp.edge_rank([2, 3], 5, 2) == 2
    assert lp.edge_unrank(2, 5, 2) == [2, 3]


def test_bad_json_is_value_error():
    with pytest.raises(ValueError):
        lp.Coloring.from_json("{not json")


def test_extremal_coloring_has_no_red_path():
    c = lp.lower_bound_coloring(2, 1, 3, 3)
    assert c.n_vertices == 4
    status, path = lp.find_mono_path(c, lp.Color.Red, 1, 3)
    assert status == "absent" and path is None


def test_extract_and_check():
    c = triangle_k5()
    w = lp.extract(c, 3, 1, 3, trace=True)
    assert w["color"] == lp.Color.Blue
    assert w["length"] == 3
    assert lp.check_witness(c, w["color"], 1, w["vertices"], 3, 3)
    assert not lp.check_witness(c, lp.Color.Red, 1, w["vertices"], 3, 3)
    assert "steps" in json.loads(w["trace"])
    assert lp.extract(c, 3, 1, 3) == {k: v for k, v in w.items() if k != "trace"}


def test_campaigns():
    r = json.loads(lp.exhaustive_verify(3, 3))
    assert r["tested"] == 1024 and r["failures"] == 0
    t = json.loads(lp.random_trials(2, 3, 3, 20, seed=42))
    assert t["status"] == "pass"
    assert lp.random_trials(2, 3, 3, 20, seed=42) == lp.random_trials(2, 3, 3, 20, seed=42)
    assert json.loads(lp.lower_bound_check(2, 1, 3, 3))["status"] == "pass"
