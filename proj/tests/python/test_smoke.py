"""Smoke tests for the rtwpy module: exact values surface unchanged."""

import json

import rtwpy


def test_extremal_densities():
    r = rtwpy.maximize_exact(rtwpy.rho36_extremal())
    assert r["density"]["exact"] == "5/6"
    assert r["g_max"]["exact"] == "5/12"
    assert r["interior"] is True

    mats = rtwpy.fact_t10_matrices()
    assert rtwpy.maximize_exact(mats[2])["density"]["exact"] == "7/8"
    for variant in range(3):
        r37 = rtwpy.maximize_exact(rtwpy.rho37_extremal(variant))
        assert r37["g_max"]["exact"] == "7/16"


def test_half_pentagon_density():
    r = rtwpy.maximize_exact(rtwpy.half_pentagon())
    assert r["density"]["exact"] == "3/5"
    assert r["witness"] == ["1/5"] * 5


def test_generalized_cliques():
    g = rtwpy.rho36_extremal()
    assert rtwpy.max_generalized_clique(g, "red")["size"] == 5
    assert not rtwpy.has_generalized_clique(g, "blue", 3)
    assert not rtwpy.has_generalized_clique(g, "red", 6)


def test_ramsey_counts():
    assert rtwpy.count_ramsey(5, 3, 3) == 1
    assert rtwpy.count_ramsey(6, 3, 3) == 0


def test_wccg_json_round_trip():
    g = rtwpy.WCCG(3)
    g.set(0, 1, "blue", "1/2")
    g.set_vertex_color(2, "blue")
    h = rtwpy.wccg_from_json(g.to_json())
    assert h.to_json() == g.to_json()
    assert h.color(0, 1) == "blue"
    assert h.weight(0, 1) == "1/2"
    assert h.vertex_color(2) == "blue"
    assert h.mass()["exact"] == "5/2"


def test_beta_search_small():
    r = rtwpy.beta_search(3, 3, 3)
    assert r["value"]["exact"] == "1/2"
    witness = json.loads(r["witness_json"])
    assert witness["t"] == 2


def test_u_graph_canonical_form_stable():
    s = rtwpy.u_graph_json(10, 3, 3, 5)
    assert rtwpy.canonical_form(s) == rtwpy.canonical_form(s)
    assert json.loads(s)["n"] == 10
