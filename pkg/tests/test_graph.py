import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from matchskel.generators import all_labeled_graphs, stars_and_triangles
from matchskel.graph import (
    Graph,
    GraphError,
    ParseError,
    common_neighbors,
    connected_components,
    decompose_stars_triangles,
    degree,
    is_bond,
    is_pendant_edge,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)

from conftest import graphs


def test_parse_triangle(k3):
    assert (k3.n, k3.m) == (3, 3)
    assert k3.labels == ("a", "b", "c")
    assert all(k3.has_edge(u, v) for u, v in itertools.combinations(range(3), 2))


def test_parse_c4(c4):
    assert (c4.n, c4.m) == (4, 4)
    assert [degree(c4, v) for v in range(4)] == [2, 2, 2, 2]


def test_edges_are_canonically_ordered():
    g = parse_edge_list("3 1\n0 2\n1 0\n")
    # labels 3,1,0,2 -> indices 0,1,2,3
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.edge_label(0) == "3-1"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("1 1", "loop"),
        ("a b\nb a", "duplicate"),
        ("a b c", "line 1"),
        ("a b\n\nx", "line 3"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_edge_list(text)


def test_comments_and_header():
    g = parse_edge_list("# K3 plus two isolated vertices\n5 3\n0 1\n1 2  # tail\n0 2\n")
    assert (g.n, g.m) == (5, 3)
    assert [degree(g, v) for v in range(5)] == [2, 2, 2, 0, 0]


def test_header_mismatch_is_read_as_edge():
    g = parse_edge_list("4 5\n5 6\n")
    assert (g.n, g.m) == (3, 2)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 1), (1, 2), (0, 2)],
        [(0, 1), (1, 2), (2, 3), (0, 3)],
    ],
    ids=["K3", "C4"],
)
def test_graph6_matches_networkx(edges):
    ref = nx.Graph(edges)
    code = nx.to_graph6_bytes(ref, header=False).decode().strip()
    g = parse_graph6(code)
    assert g.n == ref.number_of_nodes()
    assert set(g.edges) == {tuple(sorted(e)) for e in ref.edges}
    assert to_graph6(g) == code


def test_graph6_single_vertex():
    g = parse_graph6("@")
    assert (g.n, g.m) == (1, 0)


def test_graph6_header_prefix():
    assert parse_graph6(">>graph6<<Bw").m == 3


@pytest.mark.parametrize("code", ["B\x20w", "B", "Bww", "A\x7f"])
def test_graph6_rejects_bad_input(code):
    with pytest.raises(ParseError):
        parse_graph6(code)


def test_graph6_large_n_roundtrip():
    rng = random.Random(7)
    for n in (62, 63, 70):
        g = Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.05])
        code = to_graph6(g)
        ref = nx.from_graph6_bytes(code.encode())
        assert set(g.edges) == {tuple(sorted(e)) for e in ref.edges}
        assert parse_graph6(code) == g


@given(graphs(max_n=9))
def test_graph6_roundtrip_against_networkx(g):
    code = to_graph6(g)
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    if g.n:
        assert code == nx.to_graph6_bytes(ref, header=False).decode().strip()
    assert parse_graph6(code) == g


@given(graphs())
def test_degree_sum_and_incidence_symmetry(g):
    assert sum(degree(g, v) for v in range(g.n)) == 2 * g.m
    for e in range(g.m):
        assert e not in g.edge_incidence[e]
        for f in g.edge_incidence[e]:
            assert e in g.edge_incidence[f]


@given(graphs())
def test_structures_rebuild_from_edges(g):
    again = Graph(g.n, list(reversed(g.edges)))
    assert again == g
    assert again.adjacency == g.adjacency
    assert again.edge_incidence == g.edge_incidence


def test_degree_examples(k3):
    star = stars_and_triangles(0, [3])
    assert degree(k3, 0) == 2
    assert degree(star, 0) == 3
    assert degree(Graph(1, []), 0) == 0


def test_common_neighbors(k3, c4):
    k4 = Graph(4, itertools.combinations(range(4), 2))
    assert common_neighbors(k3, 0, 1) == {2}
    assert common_neighbors(c4, 0, 1) == frozenset()
    assert len(common_neighbors(k4, 0, 1)) == 2


def test_pendant_and_bond(k3, c4, p3):
    k4 = Graph(4, itertools.combinations(range(4), 2))
    assert is_pendant_edge(Graph(2, [(0, 1)]), 0)
    assert not any(is_pendant_edge(k3, e) for e in range(3))
    assert all(is_pendant_edge(p3, e) for e in range(2))
    assert all(is_bond(k3, e) for e in range(3))
    assert not any(is_bond(c4, e) for e in range(4))
    assert not any(is_bond(k4, e) for e in range(6))


def test_bond_lies_on_triangle_exhaustive():
    for g in all_labeled_graphs(5):
        for e in range(g.m):
            if is_bond(g, e):
                u, v = g.edges[e]
                assert common_neighbors(g, u, v)


def test_triangle_edge_need_not_be_bond():
    g = parse_edge_list("0 1\n1 2\n0 2\n2 3")
    assert not is_bond(g, g.edge_id(0, 2))
    assert is_bond(g, g.edge_id(0, 1))


def test_decompose_examples(c4):
    d = decompose_stars_triangles(stars_and_triangles(1, [1]))
    assert (d.triangle_components, d.star_components, d.is_stars_and_triangles) == (1, (1,), True)
    assert not decompose_stars_triangles(c4).is_stars_and_triangles
    d = decompose_stars_triangles(stars_and_triangles(0, [3]))
    assert (d.triangle_components, d.star_components, d.is_stars_and_triangles) == (0, (3,), True)


def test_decompose_ignores_isolated_vertices():
    d = decompose_stars_triangles(stars_and_triangles(1, [2], isolated=3))
    assert d.is_stars_and_triangles
    assert 3 * d.triangle_components + sum(d.star_components) == 5


def test_paths_longer_than_star_rejected():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert not decompose_stars_triangles(p4).is_stars_and_triangles


@given(graphs())
def test_decomposition_edge_count_and_relabel_invariance(g):
    d = decompose_stars_triangles(g)
    if d.is_stars_and_triangles:
        assert g.m == 3 * d.triangle_components + sum(d.star_components)
    perm = list(range(g.n))
    random.Random(g.m).shuffle(perm)
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert decompose_stars_triangles(h).is_stars_and_triangles == d.is_stars_and_triangles


def test_components():
    fig4 = stars_and_triangles(1, [1])
    assert sorted(len(c) for c in connected_components(fig4)) == [2, 3]
    assert len(connected_components(parse_edge_list("0 1\n1 2"))) == 1
    assert len(connected_components(Graph(3, []))) == 3


@given(graphs())
def test_components_match_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    assert sorted(map(sorted, connected_components(g))) == sorted(
        map(sorted, nx.connected_components(ref))
    )
