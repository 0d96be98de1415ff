import json
import random

import pytest
from hypothesis import given, settings

from matchskel.export import export_dot, export_json
from matchskel.generators import random_graph, stars_and_triangles
from matchskel.good import degree_of_matching
from matchskel.graph import Graph, is_bond, is_pendant_edge, parse_edge_list
from matchskel.matching import (
    Matching,
    MatchingError,
    enumerate_matchings,
    has_common_neighbors,
    make_matching,
)
from matchskel.skeleton import (
    CapExceeded,
    build_skeleton,
    build_skeleton_pairwise,
    degree_closed_form,
    is_connected,
    is_min_degree_matching,
    predict_regular,
    stats,
)
from matchskel.verify import verify_all

from conftest import edge_ids, graphs
from oracles import brute_skeleton


def test_k3_skeleton_is_k4(k3):
    s = build_skeleton(k3)
    st = stats(s)
    assert (st.vertex_count, st.edge_count, st.min_degree, st.max_degree) == (4, 6, 3, 3)
    assert st.is_regular
    assert s.matchings[0].mask == 0


def test_c4_skeleton(c4):
    s = build_skeleton(c4)
    st = stats(s)
    assert (st.vertex_count, st.edge_count, st.min_degree, st.max_degree) == (7, 17, 4, 5)
    assert not st.is_regular
    assert st.degree_histogram == {4: 1, 5: 6}


def test_fig4_skeleton(fig4):
    st = stats(build_skeleton(fig4))
    assert (st.vertex_count, st.edge_count, st.min_degree, st.max_degree) == (8, 16, 4, 4)


def test_oracle_values_for_small_examples(c4, k3, fig4):
    for g, edges in ((k3, 6), (c4, 17), (fig4, 16)):
        adj = brute_skeleton(list(g.edges))
        assert sum(len(v) for v in adj.values()) // 2 == edges


def test_edgeless_skeleton():
    s = build_skeleton(Graph(3, []))
    st = stats(s)
    assert (st.vertex_count, st.edge_count, st.min_degree) == (1, 0, 0)
    assert is_connected(s)


@pytest.mark.parametrize("text", ["a b\nb c\na c", "1 2\n2 3\n3 4\n4 1"])
def test_builders_agree_on_examples(text):
    g = parse_edge_list(text)
    assert build_skeleton(g) == build_skeleton_pairwise(g)


def test_builders_agree_random_n6():
    rng = random.Random(6)
    for _ in range(10):
        g = random_graph(6, 0.5, rng)
        assert build_skeleton(g).adjacency == build_skeleton_pairwise(g).adjacency


@given(graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_skeleton_matches_brute_force(g):
    s = build_skeleton(g)
    adj = brute_skeleton(list(g.edges))
    assert len(s) == len(adj)
    for i, m in enumerate(s.matchings):
        got = {frozenset(s.matchings[j].edges) for j in s.adjacency[i]}
        assert got == adj[frozenset(m.edges)]
    for i, nbrs in enumerate(s.adjacency):
        assert i not in nbrs
        assert all(i in s.adjacency[j] for j in nbrs)
    assert is_connected(s)
    assert stats(s).min_degree == g.m


def test_cap(c4):
    with pytest.raises(CapExceeded) as info:
        build_skeleton(c4, max_vertices=6)
    assert info.value.count == 7
    assert len(build_skeleton(c4, max_vertices=7)) == 7


def test_closed_form_fig4(fig4):
    m = make_matching(fig4, [0, 1])
    cf = degree_closed_form(fig4, m)
    assert (cf.k, cf.terms, cf.total) == (0, (1, 3), 4)


def test_closed_form_empty(c4):
    cf = degree_closed_form(c4, Matching(c4, 0))
    assert (cf.k, cf.terms, cf.total) == (4, (), 4)


@given(graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_closed_form_one_edge(g):
    for e in range(g.m):
        u, v = g.edges[e]
        du, dv = g.degree(u), g.degree(v)
        t = len(g.adjacency[u] & g.adjacency[v])
        m = make_matching(g, [e])
        expected = (g.m - du - dv + 1) + du * dv - t
        assert degree_closed_form(g, m).total == expected == degree_of_matching(g, m).total


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_closed_form_equals_structure_count(g):
    for m in enumerate_matchings(g):
        if not has_common_neighbors(g, m):
            assert degree_closed_form(g, m).total == degree_of_matching(g, m).total


def test_closed_form_rejects_common_neighbours(c4):
    perfect = make_matching(c4, edge_ids(c4, (1, 2), (3, 4)))
    with pytest.raises(MatchingError):
        degree_closed_form(c4, perfect)


def test_min_degree_predicate(k3, c4):
    assert is_min_degree_matching(c4, Matching(c4, 0))
    assert all(is_min_degree_matching(k3, make_matching(k3, [e])) for e in range(3))
    m = make_matching(c4, [0])
    assert not is_min_degree_matching(c4, m)
    assert degree_of_matching(c4, m).total == 5


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_min_degree_iff_predicate(g):
    s = build_skeleton(g)
    for i, m in enumerate(s.matchings):
        assert is_min_degree_matching(g, m) == (s.degree(i) == g.m)
        if len(m) == 1:
            (e,) = m.edges
            assert (s.degree(i) == g.m) == (is_bond(g, e) or is_pendant_edge(g, e))
        for j, other in enumerate(s.matchings):
            if other.mask & m.mask == other.mask:
                assert s.degree(j) <= s.degree(i)


def test_predict_regular(c4):
    assert predict_regular(stars_and_triangles(1, [1]))
    assert not predict_regular(c4)
    assert predict_regular(stars_and_triangles(0, [4]))


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_predict_regular_matches_skeleton(g):
    st = stats(build_skeleton(g))
    assert predict_regular(g) == st.is_regular
    if st.is_regular:
        assert st.min_degree == g.m


def test_stats_sum(c4):
    st = stats(build_skeleton(c4))
    assert sum(d * c for d, c in st.degree_histogram.items()) == 2 * st.edge_count


def test_export_dot_k3(k3):
    text = export_dot(build_skeleton(k3))
    assert text.startswith("graph skeleton {\n")
    assert text.count(" -- ") == 6
    assert text.count("[label=") == 4
    assert '"∅" -- "e1";' in text


def test_export_dot_empty_and_c4(c4):
    text = export_dot(build_skeleton(Graph(0, [])))
    assert text.count("[label=") == 1 and '"∅"' in text and " -- " not in text
    text = export_dot(build_skeleton(c4))
    assert text.count("[label=") == 7 and text.count(" -- ") == 17


def test_export_json(k3, fig4):
    data = json.loads(export_json(build_skeleton(k3)))
    assert list(data)[:6] == ["vertices", "edges", "min_degree", "max_degree", "regular", "degree_histogram"]
    assert (data["vertices"], data["edges"], data["degree_histogram"]) == (4, 6, {"3": 4})
    st = stats(build_skeleton(k3))
    assert json.loads(export_json(st)) == st.to_dict()
    d = json.loads(export_json(degree_of_matching(fig4, make_matching(fig4, [0, 1]))))
    assert {"nu_oo", "nu_cc", "nu_oc", "nu_cycles", "total"} <= set(d)


def test_report_json_schema(c4):
    data = json.loads(export_json(verify_all(c4)))
    assert list(data) == ["graph", "skeleton", "checks"]
    assert list(data["graph"]) == ["n", "m", "edges"]
    assert data["graph"]["edges"] == [[1, 2], [1, 4], [2, 3], [3, 4]]
    assert list(data["skeleton"]) == [
        "vertices", "edges", "min_degree", "max_degree", "regular", "degree_histogram",
    ]
    assert all(list(c) == ["name", "passed", "detail"] for c in data["checks"])


@pytest.mark.parametrize("text", ["a b\nb c\na c", "1 2\n2 3\n3 4\n4 1"])
def test_verify_examples(text):
    report = verify_all(parse_edge_list(text))
    assert report.passed, report.failures()
    assert not report.skipped


def test_verify_skips_pairwise_above_limit(c4):
    report = verify_all(c4, pairwise_limit=3)
    assert report.passed and report.skipped
    assert "neighbour_lists_match_pairwise_scan" not in [c.name for c in report.checks]


def test_verify_cap(c4):
    with pytest.raises(CapExceeded):
        verify_all(c4, max_vertices=2)
