import random

import networkx as nx
import pytest

import listobs


def test_graph6_round_trip_matches_networkx():
    rng = random.Random(7)
    for n in [0, 1, 2, 5, 9, 30, 62, 63, 70]:
        g = nx.gnp_random_graph(n, 0.3, seed=rng.randrange(1 << 30))
        text = nx.to_graph6_bytes(g, header=False).decode().strip()
        ours = listobs.parse_graph6(text)
        assert ours.order == n
        assert sorted(ours.edges()) == sorted(tuple(sorted(e)) for e in g.edges())
        assert listobs.write_graph6(ours) == text


def test_bad_graph6_raises():
    with pytest.raises(ValueError):
        listobs.parse_graph6("C ")


def test_coloring():
    k4 = listobs.parse_graph6("C~")
    assert listobs.l_colorable(k4) is None
    c4 = listobs.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    coloring = listobs.l_colorable(c4, [[1], [2, 3], [1], [2, 3]])
    assert coloring is not None
    assert all(coloring[u] != coloring[v] for u, v in c4.edges())
    assert listobs.l_colorable(c4, [[1], [1], [1, 2], [2]]) is None


def test_obstructions():
    k4 = listobs.parse_graph6("C~")
    assert listobs.is_minimal_obstruction(k4)
    assert listobs.is_4_vertex_critical(k4)
    assert listobs.critical_vertices(k4) == [0, 1, 2, 3]
    k4p1 = listobs.Graph(5, k4.edges())
    assert not listobs.is_minimal_obstruction(k4p1)
    vertices, sub, lists = listobs.extract_minimal(k4p1)
    assert vertices == [0, 1, 2, 3]
    assert listobs.is_minimal_obstruction(sub, lists)
    assert not any(listobs.dominates(k4, None, u, v) for u in range(4) for v in range(4) if u != v)


def test_classify():
    assert listobs.classify("P6")["list_finite"]
    v = listobs.classify("2P3")
    assert v["coloring_finite"] and not v["list_finite"]
    v = listobs.classify("claw")
    assert not v["coloring_finite"] and not v["list_finite"]
    assert listobs.classify("P3+2P1")["k"] == 2
    with pytest.raises(ValueError):
        listobs.classify("Q7")


def test_enumeration():
    counts = listobs.enumerate_counts(["P6"], 12)
    assert counts == list(listobs.P6_FREE_COUNTS[:12])
    assert listobs.max_propagation_length(["P3"]) == 3


def test_families():
    for r in range(1, 5):
        assert listobs.verify_gr(r)["passed"]
        assert listobs.verify_hr(r)["passed"]
        graph, lists = listobs.gen_hr(r)
        assert graph.order == 3 * r - 1
        assert listobs.is_minimal_obstruction(graph, lists)
        assert listobs.is_4_vertex_critical(listobs.gen_gr(r))
