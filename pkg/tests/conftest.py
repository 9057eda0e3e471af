import pytest
from hypothesis import settings
from hypothesis import strategies as st

from factorlab import Graph, VertexFuncs, build_complete, build_empty, join

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=1, max_order=6):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def instances(draw, min_order=1, max_order=6, max_value=3):
    graph = draw(graphs(min_order, max_order))
    g, f = [], []
    for _ in range(graph.order):
        lo = draw(st.integers(0, max_value))
        g.append(lo)
        f.append(draw(st.integers(lo, max_value)))
    return graph, VertexFuncs(g, f)


def star(leaves):
    return Graph(leaves + 1, [(0, x) for x in range(1, leaves + 1)])


def cycle(n):
    return Graph(n, [(x, (x + 1) % n) for x in range(n)])


@pytest.fixture
def sharp_critical():
    """K_5 joined with 7K_1, g = 2, f = 3."""
    graph = join([build_complete(5), build_empty(7)])
    return graph, VertexFuncs.constant(12, 2, 3)


@pytest.fixture
def sharp_id():
    """4K_1, K_2, 4K_1 joined pairwise, g = 2, f = 3."""
    graph = join([build_empty(4), build_complete(2), build_empty(4)])
    return graph, VertexFuncs.constant(10, 2, 3)
