import itertools

import pytest
from hypothesis import strategies as st

from matchskel.graph import Graph, parse_edge_list

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def k3():
    return parse_edge_list("a b\nb c\na c")


@pytest.fixture
def c4():
    return parse_edge_list("1 2\n2 3\n3 4\n4 1")


@pytest.fixture
def fig4():
    # star edge 0-1 is e1, triangle edge 2-3 is e2
    return parse_edge_list("0 1\n2 3\n3 4\n2 4")


@pytest.fixture
def p3():
    return parse_edge_list("0 1\n1 2")


def edge_ids(g, *pairs):
    """Edge indices from label pairs, independent of the canonical numbering."""
    index = g.label_index()
    return [g.edge_id(index[str(a)], index[str(b)]) for a, b in pairs]


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
